#ifndef ANGELESCO_GRAM_HPP
#define ANGELESCO_GRAM_HPP

#include "angelesco/params.hpp"
#include "angelesco/polynomial.hpp"

namespace angelesco {

/// Monic type II multiple orthogonal polynomial of degree n+m for the
/// Jacobi-Angelesco weight, built directly from the orthogonality
/// conditions.  Conditions and unknowns are expressed in shifted Chebyshev
/// bases (per interval for the conditions, on [a,1] for the unknown); the
/// square system is solved with partial pivoting and rejected if the
/// condition estimate exceeds 1e14.
MonicPolynomial build_type2_polynomial(const AngelescoParams& p, int n, int m);

/// Exactly n roots in (a,0) and m in (0,1), located by grid refinement and
/// bisection to absolute tolerance 1e-13.
ZeroSet localize_roots(const MonicPolynomial& poly, const AngelescoParams& p,
                       int n, int m);

/// Max over the n+m orthogonality integrals of |integral| normalized by
/// int |poly| w over the same interval.  Empty condition set gives 0.
double orthogonality_residual(const MonicPolynomial& poly,
                              const AngelescoParams& p, int n, int m);

}  // namespace angelesco

#endif
