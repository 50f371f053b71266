#ifndef ANGELESCO_POLYNOMIAL_HPP
#define ANGELESCO_POLYNOMIAL_HPP

#include <cstddef>
#include <vector>

namespace angelesco {

/// Real polynomial with coefficients in ascending degree order and leading
/// coefficient exactly 1.
struct MonicPolynomial {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double operator()(double x) const;
};

/// Zeros of a type II polynomial split by interval of orthogonality,
/// each group strictly ascending.
struct ZeroSet {
    std::vector<double> negative_zeros;
    std::vector<double> positive_zeros;

    std::size_t total() const {
        return negative_zeros.size() + positive_zeros.size();
    }
    std::vector<double> all() const;
};

double poly_eval(const std::vector<double>& coeffs, double x);
std::vector<double> poly_derivative(const std::vector<double>& coeffs);
std::vector<double> poly_multiply(const std::vector<double>& u,
                                  const std::vector<double>& v);

}  // namespace angelesco

#endif
