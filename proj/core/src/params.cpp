#include "angelesco/params.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace angelesco {

AngelescoParams validate_params(const AngelescoParams& p) {
    if (!(p.a < 0.0)) throw std::domain_error("a must be negative");
    if (!(p.alpha > -1.0)) throw std::domain_error("alpha must exceed -1");
    if (!(p.beta > -1.0)) throw std::domain_error("beta must exceed -1");
    if (!(p.gamma > -1.0)) throw std::domain_error("gamma must exceed -1");
    return p;
}

double eval_weight(double x, const AngelescoParams& p) {
    if (x < p.a || x > 1.0) throw std::domain_error("x outside [a, 1]");
    const double fa = x - p.a, fb = std::fabs(x), fc = 1.0 - x;
    // A vanishing factor with negative exponent gives an integrable
    // singularity; report +inf rather than NaN.
    if ((fa == 0.0 && p.alpha < 0.0) || (fb == 0.0 && p.beta < 0.0) ||
        (fc == 0.0 && p.gamma < 0.0))
        return std::numeric_limits<double>::infinity();
    double v = 1.0;
    if (p.alpha != 0.0) v *= std::pow(fa, p.alpha);
    if (p.beta != 0.0) v *= std::pow(fb, p.beta);
    if (p.gamma != 0.0) v *= std::pow(fc, p.gamma);
    return v;
}

double weight_log_derivative(double x, const AngelescoParams& p) {
    if (x == p.a || x == 0.0 || x == 1.0)
        throw std::domain_error("log-derivative pole at x in {a, 0, 1}");
    return p.alpha / (x - p.a) + p.beta / x - p.gamma / (1.0 - x);
}

}  // namespace angelesco
