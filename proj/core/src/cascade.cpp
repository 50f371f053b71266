#include "angelesco/cascade.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace angelesco {

namespace {

void check_pole_distance(double x, double pole) {
    if (std::fabs(x - pole) < 1e-300)
        throw std::runtime_error("f evaluated at a pole; bracketing is broken");
}

}  // namespace

double f_eval(double x, const ZeroSet& prev_zeros,
              const AngelescoParams& pole_params) {
    double s = 0.0;
    for (double z : prev_zeros.negative_zeros) {
        check_pole_distance(x, z);
        s += 1.0 / (x - z);
    }
    for (double z : prev_zeros.positive_zeros) {
        check_pole_distance(x, z);
        s += 1.0 / (x - z);
    }
    check_pole_distance(x, pole_params.a);
    check_pole_distance(x, 0.0);
    check_pole_distance(x, 1.0);
    s += (pole_params.alpha + 1.0) / (x - pole_params.a);
    s += (pole_params.beta + 1.0) / x;
    s -= (pole_params.gamma + 1.0) / (1.0 - x);
    return s;
}

double f_derivative(double x, const ZeroSet& prev_zeros,
                    const AngelescoParams& pole_params) {
    auto sq = [](double v) { return v * v; };
    double s = 0.0;
    for (double z : prev_zeros.negative_zeros) {
        check_pole_distance(x, z);
        s -= 1.0 / sq(x - z);
    }
    for (double z : prev_zeros.positive_zeros) {
        check_pole_distance(x, z);
        s -= 1.0 / sq(x - z);
    }
    check_pole_distance(x, pole_params.a);
    check_pole_distance(x, 0.0);
    check_pole_distance(x, 1.0);
    s -= (pole_params.alpha + 1.0) / sq(x - pole_params.a);
    s -= (pole_params.beta + 1.0) / sq(x);
    s -= (pole_params.gamma + 1.0) / sq(1.0 - x);
    return s;
}

double solve_in_bracket(const Bracket& b, const ZeroSet& prev_zeros,
                        const AngelescoParams& pole_params, double tol) {
    const double width = b.hi - b.lo;
    // Keep evaluations off the poles; roots are strictly interior.
    const double eps = std::ldexp(width, -40);
    double lo = b.lo + eps, hi = b.hi - eps;
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fx = f_eval(x, prev_zeros, pole_params);
        if (fx == 0.0) return x;
        // f decreases across the bracket: fx > 0 means the root is right of x.
        if (fx > 0.0)
            lo = x;
        else
            hi = x;
        if (hi - lo <= tol) return 0.5 * (lo + hi);
        const double dfx = f_derivative(x, prev_zeros, pole_params);
        double next = x - fx / dfx;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - x) <= tol && f_eval(next, prev_zeros, pole_params) *
                                                  fx <= 0.0)
            return next;
        x = next;
    }
    throw std::runtime_error("solve_in_bracket: iteration cap exceeded");
}

std::vector<ZeroSet> diagonal_ladder(const AngelescoParams& p, int n, double tol) {
    validate_params(p);
    if (n < 1) throw std::domain_error("n must be positive");
    if (!(tol > 0.0)) throw std::domain_error("tol must be positive");
    std::vector<ZeroSet> levels;
    levels.reserve(n);
    ZeroSet prev;  // empty at level 0
    for (int k = 0; k < n; ++k) {
        const double shift = static_cast<double>(n - 1 - k);
        const AngelescoParams pole{p.a, p.alpha + shift, p.beta + shift,
                                   p.gamma + shift};
        ZeroSet cur;
        auto solve_side = [&](double endpoint_lo, const std::vector<double>& interior,
                              double endpoint_hi) {
            std::vector<double> roots;
            double lo = endpoint_lo;
            for (std::size_t j = 0; j <= interior.size(); ++j) {
                const double hi = (j < interior.size()) ? interior[j] : endpoint_hi;
                try {
                    roots.push_back(solve_in_bracket({lo, hi}, prev, pole, tol));
                } catch (const std::runtime_error& e) {
                    throw std::runtime_error("cascade level " + std::to_string(k) +
                                             ": " + e.what());
                }
                lo = hi;
            }
            return roots;
        };
        cur.negative_zeros = solve_side(p.a, prev.negative_zeros, 0.0);
        cur.positive_zeros = solve_side(0.0, prev.positive_zeros, 1.0);
        prev = cur;
        levels.push_back(std::move(cur));
    }
    return levels;
}

ZeroSet diagonal_zeros(const AngelescoParams& p, int n, double tol) {
    return diagonal_ladder(p, n, tol).back();
}

}  // namespace angelesco
