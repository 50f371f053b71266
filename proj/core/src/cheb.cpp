#include "cheb.hpp"

#include <cmath>

namespace angelesco::detail {

double cheb_shifted(int j, double x, double lo, double hi) {
    const double s = (2.0 * x - lo - hi) / (hi - lo);
    if (j == 0) return 1.0;
    double tm1 = 1.0, t = s;
    for (int k = 2; k <= j; ++k) {
        const double tn = 2.0 * s * t - tm1;
        tm1 = t;
        t = tn;
    }
    return t;
}

double cheb_monic_scale(int j, double lo, double hi) {
    // leading coefficient of T_j(s(x)) in x is 2^(j-1) * (2/(hi-lo))^j
    if (j == 0) return 1.0;
    return 2.0 * std::pow((hi - lo) / 4.0, j);
}

std::vector<double> cheb_shifted_monomials(int j, double lo, double hi) {
    const double c1 = 2.0 / (hi - lo);           // s = c1*x + c0
    const double c0 = -(lo + hi) / (hi - lo);
    std::vector<double> tm1{1.0};
    if (j == 0) return tm1;
    std::vector<double> t{c0, c1};
    for (int k = 2; k <= j; ++k) {
        std::vector<double> tn(k + 1, 0.0);
        for (std::size_t i = 0; i < t.size(); ++i) {
            tn[i] += 2.0 * c0 * t[i];
            tn[i + 1] += 2.0 * c1 * t[i];
        }
        for (std::size_t i = 0; i < tm1.size(); ++i) tn[i] -= tm1[i];
        tm1 = std::move(t);
        t = std::move(tn);
    }
    return t;
}

}  // namespace angelesco::detail
