#ifndef ANGELESCO_LIMITS_HPP
#define ANGELESCO_LIMITS_HPP

#include <utility>
#include <vector>

#include "angelesco/polynomial.hpp"

namespace angelesco {

struct JacobiLaguerreParams {
    double a;      // < 0
    double alpha;  // > -1
    double beta;   // > -1
};

struct LaguerreHermiteParams {
    double beta;  // > -1
};

/// Convergence record for one of the two asymptotic relations: scaled
/// Jacobi-Angelesco zeros against the limiting family's zeros.
struct LimitCheckResult {
    std::vector<double> scale_values;
    std::vector<double> errors;  // max abs zero distance per scale value
    std::vector<double> ratios;  // consecutive error ratios
};

enum class HalfLine { negative, positive };

/// Closed-form moment of the Laguerre-Hermite weight |x|^beta e^{-x^2} over
/// the half line: (+-1)^k * Gamma((k+beta+1)/2) / 2.
double lh_moment(int k, double beta, HalfLine side);

/// Laguerre-Hermite type II polynomial from the orthogonality conditions
/// with exact Gamma moments, plus its localized zeros (n negative, m
/// positive).
std::pair<MonicPolynomial, ZeroSet> lh_build(const LaguerreHermiteParams& p,
                                             int n, int m);

/// Jacobi-Laguerre type II polynomial: weight (x-a)^alpha |x|^beta e^{-x} on
/// [a,0] u [0,inf), built gram-style with a Jacobi rule on the left and a
/// generalized Laguerre rule on the right.
std::pair<MonicPolynomial, ZeroSet> jl_build(const JacobiLaguerreParams& p,
                                             int n, int m);

/// Scaled-zero comparison for the gamma -> inf relation (diagonal only):
/// gamma * zeros of P_{n,n}^{(alpha,beta,gamma)}(.; a/gamma) vs jl_build.
LimitCheckResult limit_check_jl(double alpha, double beta, double a, int n,
                                const std::vector<double>& gamma_values);

/// Scaled-zero comparison for the alpha -> inf relation: sqrt(A) * zeros of
/// P_{n,n}^{(A,beta,A)}(.; -1) vs lh_build.
LimitCheckResult limit_check_lh(double beta, int n,
                                const std::vector<double>& alpha_values);

struct MonotonicityCase {
    std::vector<double> swept_values;
    bool pass;
    double min_margin;
    int first_violation;  // -1 when pass
};

struct CorollaryReport {
    bool jl_alpha_increasing;  // Corollary 1
    bool lh_beta_split;        // Corollary 2: negative down, positive up
    double min_margin;
};

/// Sweeps verifying both corollaries on the default grid up to n_max.
CorollaryReport corollary_checks(int n_max);

}  // namespace angelesco

#endif
