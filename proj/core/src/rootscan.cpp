#include "rootscan.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace angelesco::detail {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double flo, double tol) {
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> scan_and_bisect(const std::function<double(double)>& f,
                                    double lo, double hi, int count,
                                    double tol, int initial_cells,
                                    int max_refine) {
    if (count == 0) return {};
    int cells = initial_cells;
    for (int pass = 0; pass <= max_refine; ++pass, cells *= 2) {
        const double h = (hi - lo) / cells;
        std::vector<double> roots;
        double x0 = lo, f0 = f(x0);
        for (int i = 1; i <= cells; ++i) {
            const double x1 = (i == cells) ? hi : lo + i * h;
            const double f1 = f(x1);
            if (f0 == 0.0)
                roots.push_back(x0);
            else if (f1 != 0.0 && (f0 > 0.0) != (f1 > 0.0))
                roots.push_back(bisect(f, x0, x1, f0, tol));
            x0 = x1;
            f0 = f1;
        }
        if (static_cast<int>(roots.size()) == count) return roots;
        if (static_cast<int>(roots.size()) > count)
            throw std::runtime_error("root localization: more sign changes than expected (" +
                                     std::to_string(roots.size()) + " vs " +
                                     std::to_string(count) + ")");
    }
    throw std::runtime_error("root localization: required sign-change count not reached");
}

}  // namespace angelesco::detail
