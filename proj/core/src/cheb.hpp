#ifndef ANGELESCO_CHEB_HPP
#define ANGELESCO_CHEB_HPP

#include <vector>

namespace angelesco::detail {

// Chebyshev basis shifted to [lo, hi] via s = (2x - lo - hi)/(hi - lo).

// T_j(s(x)) for the given degree, by the three-term recurrence.
double cheb_shifted(int j, double x, double lo, double hi);

// Scale turning T_j(s(x)) into a monic degree-j polynomial in x.
double cheb_monic_scale(int j, double lo, double hi);

// Ascending monomial coefficients (in x) of T_j(s(x)).
std::vector<double> cheb_shifted_monomials(int j, double lo, double hi);

}  // namespace angelesco::detail

#endif
