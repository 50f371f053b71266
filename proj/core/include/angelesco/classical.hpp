#ifndef ANGELESCO_CLASSICAL_HPP
#define ANGELESCO_CLASSICAL_HPP

#include <vector>

#include "angelesco/polynomial.hpp"

namespace angelesco {

/// Rising factorial x(x+1)...(x+k-1); empty product is 1.
double pochhammer(double x, int k);

/// Gegenbauer C_n^{(lambda)}(x) via the classical three-term recurrence.
double gegenbauer(int n, double lambda, double x);

/// Monomial coefficients of C_n^{(lambda)}.
std::vector<double> gegenbauer_coefficients(int n, double lambda);

/// The symmetric-case Gegenbauer expansion, kept verbatim as a diagnostic:
/// sum_{i=0}^{n} binom(n,i) (-beta-n)_i kappa_{n-i}(lambda)
///               C_{n-i}^{(lambda+i)}(x) x^{n-i},
/// with kappa_k(lambda) = (-1)^k (2 lambda)_k / (2^k (lambda+1/2)_k k!).
struct SymmetricExpansion {
    int n;
    double lambda;
    double beta;
    std::vector<double> coeffs;        // as printed, ascending monomials
    std::vector<double> monic_coeffs;  // coeffs / leading coefficient
};

SymmetricExpansion symmetric_expansion(int n, double lambda, double beta);

/// Comparison of the printed expansion against the oracle polynomial
/// P_{n,n}^{(lambda-1/2, beta, lambda-1/2)}(x; -1).  Zero-set distance is
/// the Hausdorff distance between the full complex root sets of the two
/// monic polynomials, so it stays finite even when the printed sum has no
/// real zeros.
struct ExpansionDiagnostic {
    double max_coeff_difference;  // after monic normalization
    double evenness_residual;     // max |odd-power coefficient| of printed sum
    double zero_set_distance;
};

ExpansionDiagnostic expansion_diagnostic(int n, double lambda, double beta);

}  // namespace angelesco

#endif
