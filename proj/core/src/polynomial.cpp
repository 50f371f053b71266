#include "angelesco/polynomial.hpp"

namespace angelesco {

double poly_eval(const std::vector<double>& coeffs, double x) {
    double v = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

double MonicPolynomial::operator()(double x) const { return poly_eval(coeffs, x); }

std::vector<double> ZeroSet::all() const {
    std::vector<double> z = negative_zeros;
    z.insert(z.end(), positive_zeros.begin(), positive_zeros.end());
    return z;
}

std::vector<double> poly_derivative(const std::vector<double>& coeffs) {
    if (coeffs.size() <= 1) return {0.0};
    std::vector<double> d(coeffs.size() - 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        d[i - 1] = coeffs[i] * static_cast<double>(i);
    return d;
}

std::vector<double> poly_multiply(const std::vector<double>& u,
                                  const std::vector<double>& v) {
    std::vector<double> w(u.size() + v.size() - 1, 0.0);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) w[i + j] += u[i] * v[j];
    return w;
}

}  // namespace angelesco
