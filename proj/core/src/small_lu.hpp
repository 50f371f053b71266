#ifndef ANGELESCO_SMALL_LU_HPP
#define ANGELESCO_SMALL_LU_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace angelesco::detail {

// Dense LU with partial pivoting for the small (<= ~20) systems the oracle
// builds.  Row-major square matrix.
class SmallLU {
  public:
    explicit SmallLU(std::vector<double> a, int n) : lu_(std::move(a)), n_(n), piv_(n) {
        for (int i = 0; i < n_; ++i) piv_[i] = i;
        for (int k = 0; k < n_; ++k) {
            int p = k;
            double best = std::fabs(at(k, k));
            for (int i = k + 1; i < n_; ++i) {
                const double v = std::fabs(at(i, k));
                if (v > best) { best = v; p = i; }
            }
            if (best == 0.0) throw std::runtime_error("singular linear system");
            if (p != k) {
                for (int j = 0; j < n_; ++j) std::swap(at(p, j), at(k, j));
                std::swap(piv_[p], piv_[k]);
            }
            for (int i = k + 1; i < n_; ++i) {
                at(i, k) /= at(k, k);
                const double f = at(i, k);
                for (int j = k + 1; j < n_; ++j) at(i, j) -= f * at(k, j);
            }
        }
    }

    std::vector<double> solve(const std::vector<double>& b) const {
        std::vector<double> x(n_);
        for (int i = 0; i < n_; ++i) x[i] = b[piv_[i]];
        for (int i = 1; i < n_; ++i)
            for (int j = 0; j < i; ++j) x[i] -= at(i, j) * x[j];
        for (int i = n_ - 1; i >= 0; --i) {
            for (int j = i + 1; j < n_; ++j) x[i] -= at(i, j) * x[j];
            x[i] /= at(i, i);
        }
        return x;
    }

    // Solve A^T x = b (needed by the 1-norm condition estimator).
    std::vector<double> solve_transposed(const std::vector<double>& b) const {
        std::vector<double> y = b;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < i; ++j) y[i] -= at(j, i) * y[j];
            y[i] /= at(i, i);
        }
        for (int i = n_ - 1; i >= 0; --i)
            for (int j = i + 1; j < n_; ++j) y[i] -= at(j, i) * y[j];
        std::vector<double> x(n_);
        for (int i = 0; i < n_; ++i) x[piv_[i]] = y[i];
        return x;
    }

  private:
    double& at(int i, int j) { return lu_[static_cast<std::size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return lu_[static_cast<std::size_t>(i) * n_ + j]; }

    std::vector<double> lu_;
    int n_;
    std::vector<int> piv_;
};

// Hager-style incremental 1-norm estimate of cond(A).
double condition_estimate_1norm(const std::vector<double>& a, int n, const SmallLU& lu);

}  // namespace angelesco::detail

#endif
