#ifndef ANGELESCO_ROOTSCAN_HPP
#define ANGELESCO_ROOTSCAN_HPP

#include <functional>
#include <vector>

namespace angelesco::detail {

// Find exactly `count` sign-change roots of f in (lo, hi) by uniform grid
// scanning (initial 64 cells, doubled up to max_refine times) followed by
// bisection to absolute tolerance tol.  Throws if the count is never reached.
std::vector<double> scan_and_bisect(const std::function<double(double)>& f,
                                    double lo, double hi, int count,
                                    double tol, int initial_cells = 64,
                                    int max_refine = 14);

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double flo, double tol);

}  // namespace angelesco::detail

#endif
