#ifndef ANGELESCO_QUADRATURE_HPP
#define ANGELESCO_QUADRATURE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "angelesco/params.hpp"

namespace angelesco {

/// Gauss rule for one of the two reference weights:
///   jacobi(p,q):  (1-t)^p (1+t)^q on (-1,1)
///   laguerre(p):  t^p e^{-t}      on (0,inf)
struct QuadratureRule {
    std::vector<double> nodes;    // strictly ascending, interior
    std::vector<double> weights;  // all positive
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;  // absolute, from the last doubling
    int rule_size_used = 0;
};

/// Gamma(z) for z in (0, 60], relative accuracy ~1e-13.
double gamma_function(double z);

/// log Gamma, used for masses of large-exponent weights.
double log_gamma(double z);

/// k-th monic recurrence coefficients (diagonal, squared off-diagonal) for
/// the Jacobi weight (1-t)^p (1+t)^q.  offdiag_sq is meaningful for k >= 1.
std::pair<double, double> jacobi_recurrence_coefficients(int k, double p, double q);

/// Same for the generalized Laguerre weight t^p e^{-t}.
std::pair<double, double> laguerre_recurrence_coefficients(int k, double p);

/// Total mass of the weight: int_{-1}^{1} (1-t)^p (1+t)^q dt.
double jacobi_mass(double p, double q);

/// Golub-Welsch: nodes are eigenvalues of the m x m recurrence matrix,
/// weights are mass * (first eigenvector component)^2.
QuadratureRule gauss_rule_jacobi(int m, double p, double q);
QuadratureRule gauss_rule_laguerre(int m, double p);

enum class Side { left, right };

/// Integral of g(x(t)) against the Jacobi rule absorbing both endpoint
/// singularities of the chosen Angelesco interval.  The rule size starts at
/// initial_size and doubles until two successive values agree to
/// tol * max(1, |value|), or to the roundoff floor of the weighted sum when
/// cancellation puts that floor above the requested tolerance.  The caller's
/// g must contain every factor of the integrand not absorbed into the rule.
///
/// Mapping conventions (fixed): left interval x = a(1-t)/2, rule
/// jacobi(beta, alpha), prefactor (|a|/2)^{alpha+beta+1}; right interval
/// x = (1+t)/2, rule jacobi(gamma, beta), prefactor (1/2)^{beta+gamma+1}.
IntegralResult integrate_mapped(const std::function<double(double)>& g,
                                const AngelescoParams& p, Side side,
                                int initial_size, double tol);

/// Single fixed-size evaluation of the same mapped integral (no doubling);
/// for integrands with known mild non-smoothness such as |P(x)|.
double integrate_mapped_fixed(const std::function<double(double)>& g,
                              const AngelescoParams& p, Side side, int size);

/// Same adaptive scheme against the half-line weight x^expo e^{-x}.
IntegralResult integrate_laguerre_weighted(const std::function<double(double)>& g,
                                           double expo, int initial_size,
                                           double tol);

/// int q(x) (x-a)^alpha |x|^beta (1-x)^gamma dx over [a,0] (left) or [0,1]
/// (right), q given by ascending monomial coefficients.
IntegralResult integrate_poly_against_weight(const std::vector<double>& q,
                                             const AngelescoParams& p, Side side,
                                             double tol);

}  // namespace angelesco

#endif
