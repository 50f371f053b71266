#include "angelesco/limits.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "angelesco/cascade.hpp"
#include "angelesco/params.hpp"
#include "angelesco/quadrature.hpp"
#include "cheb.hpp"
#include "rootscan.hpp"
#include "small_lu.hpp"

namespace angelesco {

namespace {

constexpr double kEntryTol = 1e-12;
constexpr double kCondLimit = 1e14;
constexpr double kRootTol = 1e-13;

// Monomial coefficients of the monic "Hermite-style" basis for the weight
// e^{-x^2}:  h_{k+1} = x h_k - (k/2) h_{k-1}.
std::vector<std::vector<double>> hermite_basis(int deg_max) {
    std::vector<std::vector<double>> h(deg_max + 1);
    h[0] = {1.0};
    if (deg_max >= 1) h[1] = {0.0, 1.0};
    for (int k = 1; k < deg_max; ++k) {
        std::vector<double> next(k + 2, 0.0);
        for (std::size_t i = 0; i < h[k].size(); ++i) next[i + 1] += h[k][i];
        for (std::size_t i = 0; i < h[k - 1].size(); ++i)
            next[i] -= 0.5 * k * h[k - 1][i];
        h[k + 1] = std::move(next);
    }
    return h;
}

// Monic generalized Laguerre basis for x^beta e^{-x}:
// l_{k+1} = (x - (2k+beta+1)) l_k - k(k+beta) l_{k-1}.
std::vector<std::vector<double>> laguerre_basis(int deg_max, double beta) {
    std::vector<std::vector<double>> l(deg_max + 1);
    l[0] = {1.0};
    if (deg_max >= 1) l[1] = {-(beta + 1.0), 1.0};
    for (int k = 1; k < deg_max; ++k) {
        std::vector<double> next(k + 2, 0.0);
        const double d = 2.0 * k + beta + 1.0;
        for (std::size_t i = 0; i < l[k].size(); ++i) {
            next[i + 1] += l[k][i];
            next[i] -= d * l[k][i];
        }
        for (std::size_t i = 0; i < l[k - 1].size(); ++i)
            next[i] -= k * (k + beta) * l[k - 1][i];
        l[k + 1] = std::move(next);
    }
    return l;
}

// Roots on an expanding half-line window; the window edge doubles until the
// required sign-change count appears.
std::vector<double> halfline_roots(const std::function<double(double)>& f,
                                   HalfLine side, int count, double w0) {
    if (count == 0) return {};
    double w = w0;
    for (int pass = 0; pass < 8; ++pass, w *= 2.0) {
        const double lo = (side == HalfLine::negative) ? -w : 0.0;
        const double hi = (side == HalfLine::negative) ? 0.0 : w;
        try {
            return detail::scan_and_bisect(f, lo, hi, count, kRootTol);
        } catch (const std::runtime_error&) {
            // widen and retry
        }
    }
    throw std::runtime_error("half-line root localization failed");
}

void check_condition(const std::vector<double>& A, int N,
                     const detail::SmallLU& lu, const char* what) {
    const double cond = detail::condition_estimate_1norm(A, N, lu);
    if (cond > kCondLimit)
        throw std::runtime_error(std::string(what) +
                                 " system too ill-conditioned (estimate " +
                                 std::to_string(cond) + ")");
}

}  // namespace

double lh_moment(int k, double beta, HalfLine side) {
    if (!(beta > -1.0)) throw std::domain_error("beta must exceed -1");
    const double v = 0.5 * gamma_function(0.5 * (k + beta + 1.0));
    return (side == HalfLine::negative && k % 2 == 1) ? -v : v;
}

std::pair<MonicPolynomial, ZeroSet> lh_build(const LaguerreHermiteParams& p,
                                             int n, int m) {
    if (!(p.beta > -1.0)) throw std::domain_error("beta must exceed -1");
    if (n < 0 || m < 0 || n + m < 1)
        throw std::domain_error("need n + m >= 1 nonnegative degrees");
    const int N = n + m;
    const auto basis = hermite_basis(N);

    auto entry = [&](int test_i, int basis_j, HalfLine side) {
        const std::vector<double> prod = poly_multiply(basis[test_i], basis[basis_j]);
        double s = 0.0;
        for (std::size_t k = 0; k < prod.size(); ++k)
            s += prod[k] * lh_moment(static_cast<int>(k), p.beta, side);
        return s;
    };

    std::vector<double> A(static_cast<std::size_t>(N) * N), b(N);
    for (int i = 0; i < N; ++i) {
        const HalfLine side = (i < n) ? HalfLine::negative : HalfLine::positive;
        const int ti = (i < n) ? i : i - n;
        for (int j = 0; j < N; ++j)
            A[static_cast<std::size_t>(i) * N + j] = entry(ti, j, side);
        b[i] = -entry(ti, N, side);
    }
    detail::SmallLU lu(A, N);
    check_condition(A, N, lu, "laguerre-hermite");
    const std::vector<double> c = lu.solve(b);

    std::vector<double> coeffs(N + 1, 0.0);
    for (int j = 0; j <= N; ++j) {
        const double w = (j == N) ? 1.0 : c[j];
        for (std::size_t i = 0; i < basis[j].size(); ++i) coeffs[i] += w * basis[j][i];
    }
    coeffs[N] = 1.0;
    MonicPolynomial poly{std::move(coeffs)};

    auto f = [&](double x) { return poly(x); };
    const double w0 = 4.0 * N + 8.0;
    ZeroSet z;
    z.negative_zeros = halfline_roots(f, HalfLine::negative, n, w0);
    z.positive_zeros = halfline_roots(f, HalfLine::positive, m, w0);
    return {std::move(poly), std::move(z)};
}

std::pair<MonicPolynomial, ZeroSet> jl_build(const JacobiLaguerreParams& p,
                                             int n, int m) {
    if (!(p.a < 0.0)) throw std::domain_error("a must be negative");
    if (!(p.alpha > -1.0)) throw std::domain_error("alpha must exceed -1");
    if (!(p.beta > -1.0)) throw std::domain_error("beta must exceed -1");
    if (n < 0 || m < 0 || n + m < 1)
        throw std::domain_error("need n + m >= 1 nonnegative degrees");
    const int N = n + m;
    const auto basis = laguerre_basis(N, p.beta);
    // Left integrals reuse the Angelesco mapping; gamma plays no role there.
    const AngelescoParams left_p{p.a, p.alpha, p.beta, 0.0};

    auto entry = [&](int test_i, int basis_j, bool left) {
        const int m0 = (test_i + basis_j + N) / 2 + 8;
        if (left) {
            auto g = [&](double x) {
                return detail::cheb_shifted(test_i, x, p.a, 0.0) *
                       poly_eval(basis[basis_j], x) * std::exp(-x);
            };
            return integrate_mapped(g, left_p, Side::left, m0, kEntryTol).value;
        }
        auto g = [&](double x) {
            return poly_eval(basis[test_i], x) * poly_eval(basis[basis_j], x) *
                   std::pow(x - p.a, p.alpha);
        };
        return integrate_laguerre_weighted(g, p.beta, m0, kEntryTol).value;
    };

    std::vector<double> A(static_cast<std::size_t>(N) * N), b(N);
    for (int i = 0; i < N; ++i) {
        const bool left = i < n;
        const int ti = left ? i : i - n;
        for (int j = 0; j < N; ++j)
            A[static_cast<std::size_t>(i) * N + j] = entry(ti, j, left);
        b[i] = -entry(ti, N, left);
    }
    detail::SmallLU lu(A, N);
    check_condition(A, N, lu, "jacobi-laguerre");
    const std::vector<double> c = lu.solve(b);

    std::vector<double> coeffs(N + 1, 0.0);
    for (int j = 0; j <= N; ++j) {
        const double w = (j == N) ? 1.0 : c[j];
        for (std::size_t i = 0; i < basis[j].size(); ++i) coeffs[i] += w * basis[j][i];
    }
    coeffs[N] = 1.0;
    MonicPolynomial poly{std::move(coeffs)};

    auto f = [&](double x) { return poly(x); };
    ZeroSet z;
    z.negative_zeros = detail::scan_and_bisect(f, p.a, 0.0, n, kRootTol);
    z.positive_zeros = halfline_roots(f, HalfLine::positive, m, 4.0 * N + 8.0);
    return {std::move(poly), std::move(z)};
}

namespace {

double max_zero_distance(const ZeroSet& u, const ZeroSet& v) {
    const auto a = u.all(), b = v.all();
    if (a.size() != b.size())
        throw std::runtime_error("zero-set size mismatch in limit check");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::fabs(a[i] - b[i]));
    return worst;
}

LimitCheckResult finish(LimitCheckResult r) {
    for (std::size_t i = 1; i < r.errors.size(); ++i)
        r.ratios.push_back(r.errors[i] / r.errors[i - 1]);
    return r;
}

}  // namespace

LimitCheckResult limit_check_jl(double alpha, double beta, double a, int n,
                                const std::vector<double>& gamma_values) {
    const auto [jl_poly, jl_zeros] = jl_build({a, alpha, beta}, n, n);
    LimitCheckResult r;
    for (double g : gamma_values) {
        const AngelescoParams p{a / g, alpha, beta, g};
        ZeroSet z = diagonal_zeros(p, n);
        for (double& x : z.negative_zeros) x *= g;
        for (double& x : z.positive_zeros) x *= g;
        r.scale_values.push_back(g);
        r.errors.push_back(max_zero_distance(z, jl_zeros));
    }
    return finish(std::move(r));
}

LimitCheckResult limit_check_lh(double beta, int n,
                                const std::vector<double>& alpha_values) {
    const auto [lh_poly, lh_zeros] = lh_build({beta}, n, n);
    LimitCheckResult r;
    for (double A : alpha_values) {
        const AngelescoParams p{-1.0, A, beta, A};
        ZeroSet z = diagonal_zeros(p, n);
        const double s = std::sqrt(A);
        for (double& x : z.negative_zeros) x *= s;
        for (double& x : z.positive_zeros) x *= s;
        r.scale_values.push_back(A);
        r.errors.push_back(max_zero_distance(z, lh_zeros));
    }
    return finish(std::move(r));
}

CorollaryReport corollary_checks(int n_max) {
    if (n_max < 1) throw std::domain_error("n_max must be positive");
    constexpr double kMargin = 1e-10;
    CorollaryReport rep{true, true, std::numeric_limits<double>::infinity()};

    // Corollary 1: JL zeros increase in alpha.
    for (int n = 1; n <= n_max; ++n) {
        for (double beta : {0.0, 1.0}) {
            std::vector<double> prev;
            for (double alpha = 0.0; alpha <= 3.0 + 1e-9; alpha += 0.5) {
                const auto z = jl_build({-1.0, alpha, beta}, n, n).second.all();
                if (!prev.empty()) {
                    for (std::size_t i = 0; i < z.size(); ++i) {
                        const double d = z[i] - prev[i];
                        rep.min_margin = std::min(rep.min_margin, d);
                        if (d <= kMargin) rep.jl_alpha_increasing = false;
                    }
                }
                prev = z;
            }
        }
    }

    // Corollary 2: LH negative zeros decrease, positive zeros increase in beta.
    for (int n = 1; n <= n_max; ++n) {
        ZeroSet prev;
        bool have_prev = false;
        for (int step = 0; step <= 30; ++step) {
            const double beta = 0.1 * step;
            const ZeroSet z = lh_build({beta}, n, n).second;
            if (have_prev) {
                for (std::size_t i = 0; i < z.negative_zeros.size(); ++i) {
                    const double d = prev.negative_zeros[i] - z.negative_zeros[i];
                    rep.min_margin = std::min(rep.min_margin, d);
                    if (d <= kMargin) rep.lh_beta_split = false;
                }
                for (std::size_t i = 0; i < z.positive_zeros.size(); ++i) {
                    const double d = z.positive_zeros[i] - prev.positive_zeros[i];
                    rep.min_margin = std::min(rep.min_margin, d);
                    if (d <= kMargin) rep.lh_beta_split = false;
                }
            }
            prev = z;
            have_prev = true;
        }
    }
    return rep;
}

}  // namespace angelesco
