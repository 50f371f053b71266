#ifndef ANGELESCO_CASCADE_HPP
#define ANGELESCO_CASCADE_HPP

#include <vector>

#include "angelesco/params.hpp"
#include "angelesco/polynomial.hpp"

namespace angelesco {

/// Pole-to-pole bracket of the rational function f; f decreases from +inf
/// at lo+ to -inf at hi-.
struct Bracket {
    double lo;
    double hi;
};

constexpr double kCascadeDefaultTol = 1e-13;

/// f(x) = sum_j 1/(x - z_j) + (alpha+1)/(x-a) + (beta+1)/x - (gamma+1)/(1-x),
/// where pole_params holds the exponents before the +1 shift.
double f_eval(double x, const ZeroSet& prev_zeros, const AngelescoParams& pole_params);

/// df/dx, always strictly negative away from the poles.
double f_derivative(double x, const ZeroSet& prev_zeros,
                    const AngelescoParams& pole_params);

/// Unique root of f in the bracket, by safeguarded Newton (bisection
/// fallback whenever an iterate leaves the current bracket).
double solve_in_bracket(const Bracket& b, const ZeroSet& prev_zeros,
                        const AngelescoParams& pole_params, double tol);

/// All ladder levels: element k holds the zeros of the diagonal polynomial
/// of index k+1 at parameter shift n-1-k; the last element is the zero set
/// of P_{n,n} for the given params.
std::vector<ZeroSet> diagonal_ladder(const AngelescoParams& p, int n, double tol);

/// Zeros of the diagonal Jacobi-Angelesco polynomial P_{n,n}: n zeros in
/// (a,0) and n in (0,1).
ZeroSet diagonal_zeros(const AngelescoParams& p, int n,
                       double tol = kCascadeDefaultTol);

}  // namespace angelesco

#endif
