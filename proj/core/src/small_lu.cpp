#include "small_lu.hpp"

#include <algorithm>

namespace angelesco::detail {

double condition_estimate_1norm(const std::vector<double>& a, int n,
                                const SmallLU& lu) {
    double anorm = 0.0;
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += std::fabs(a[static_cast<std::size_t>(i) * n + j]);
        anorm = std::max(anorm, s);
    }
    // Hager's estimator for ||A^-1||_1.
    std::vector<double> x(n, 1.0 / n);
    double est = 0.0;
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<double> y = lu.solve(x);
        double g = 0.0;
        for (double v : y) g += std::fabs(v);
        if (g <= est) break;
        est = g;
        std::vector<double> xi(n);
        for (int i = 0; i < n; ++i) xi[i] = (y[i] >= 0.0) ? 1.0 : -1.0;
        std::vector<double> z = lu.solve_transposed(xi);
        int jmax = 0;
        double zdotx = 0.0;
        for (int i = 0; i < n; ++i) {
            zdotx += z[i] * x[i];
            if (std::fabs(z[i]) > std::fabs(z[jmax])) jmax = i;
        }
        if (std::fabs(z[jmax]) <= zdotx) break;
        std::fill(x.begin(), x.end(), 0.0);
        x[jmax] = 1.0;
    }
    return anorm * est;
}

}  // namespace angelesco::detail
