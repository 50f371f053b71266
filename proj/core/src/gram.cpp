#include "angelesco/gram.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "angelesco/quadrature.hpp"
#include "cheb.hpp"
#include "rootscan.hpp"
#include "small_lu.hpp"

namespace angelesco {

namespace {

constexpr double kEntryTol = 1e-12;
constexpr double kCondLimit = 1e14;
constexpr double kRootTol = 1e-13;

// One orthogonality condition: test polynomial T_i on its interval,
// integrated against basis function phi_j and the full weight.
double condition_integral(const AngelescoParams& p, Side side, int test_deg,
                          int basis_deg, int rep_deg_max) {
    const double lo_t = (side == Side::left) ? p.a : 0.0;
    const double hi_t = (side == Side::left) ? 0.0 : 1.0;
    const double scale = detail::cheb_monic_scale(basis_deg, p.a, 1.0);
    auto g = [&](double x) {
        const double test = detail::cheb_shifted(test_deg, x, lo_t, hi_t);
        const double phi = scale * detail::cheb_shifted(basis_deg, x, p.a, 1.0);
        const double smooth = (side == Side::left) ? std::pow(1.0 - x, p.gamma)
                                                   : std::pow(x - p.a, p.alpha);
        return test * phi * smooth;
    };
    const int m0 = (test_deg + basis_deg + rep_deg_max) / 2 + 8;
    return integrate_mapped(g, p, side, m0, kEntryTol).value;
}

}  // namespace

MonicPolynomial build_type2_polynomial(const AngelescoParams& p, int n, int m) {
    validate_params(p);
    if (n < 0 || m < 0) throw std::domain_error("degrees must be nonnegative");
    const int N = n + m;
    if (N == 0) return MonicPolynomial{{1.0}};

    // Row i < n: left-interval condition of test degree i; rows n..N-1:
    // right-interval conditions.  Column j: coefficient of the monic
    // Chebyshev basis function of degree j on [a,1].
    std::vector<double> A(static_cast<std::size_t>(N) * N);
    std::vector<double> b(N);
    for (int i = 0; i < N; ++i) {
        const Side side = (i < n) ? Side::left : Side::right;
        const int test_deg = (i < n) ? i : i - n;
        for (int j = 0; j < N; ++j)
            A[static_cast<std::size_t>(i) * N + j] =
                condition_integral(p, side, test_deg, j, N);
        b[i] = -condition_integral(p, side, test_deg, N, N);
    }

    detail::SmallLU lu(A, N);
    const double cond = detail::condition_estimate_1norm(A, N, lu);
    if (cond > kCondLimit)
        throw std::runtime_error(
            "gram system too ill-conditioned (estimate " + std::to_string(cond) +
            ") for n=" + std::to_string(n) + " m=" + std::to_string(m));
    const std::vector<double> c = lu.solve(b);

    // Convert back to monomial coefficients; monicity is exact because the
    // basis functions of degree < N cannot touch the leading coefficient.
    std::vector<double> coeffs(N + 1, 0.0);
    for (int j = 0; j <= N; ++j) {
        const double w = (j == N) ? 1.0 : c[j];
        const double scale = detail::cheb_monic_scale(j, p.a, 1.0);
        const std::vector<double> tj = detail::cheb_shifted_monomials(j, p.a, 1.0);
        for (std::size_t i = 0; i < tj.size(); ++i) coeffs[i] += w * scale * tj[i];
    }
    coeffs[N] = 1.0;
    return MonicPolynomial{std::move(coeffs)};
}

ZeroSet localize_roots(const MonicPolynomial& poly, const AngelescoParams& p,
                       int n, int m) {
    if (poly.degree() != n + m)
        throw std::domain_error("polynomial degree does not match (n, m)");
    auto f = [&](double x) { return poly(x); };
    ZeroSet z;
    z.negative_zeros = detail::scan_and_bisect(f, p.a, 0.0, n, kRootTol);
    z.positive_zeros = detail::scan_and_bisect(f, 0.0, 1.0, m, kRootTol);
    return z;
}

double orthogonality_residual(const MonicPolynomial& poly,
                              const AngelescoParams& p, int n, int m) {
    if (n + m == 0) return 0.0;
    const int m0 = poly.degree() / 2 + 8;
    double worst = 0.0;
    for (int side_i = 0; side_i < 2; ++side_i) {
        const Side side = side_i == 0 ? Side::left : Side::right;
        const int count = side_i == 0 ? n : m;
        if (count == 0) continue;
        auto gabs = [&](double x) {
            const double smooth = (side == Side::left) ? std::pow(1.0 - x, p.gamma)
                                                       : std::pow(x - p.a, p.alpha);
            return std::fabs(poly(x)) * smooth;
        };
        // |poly| has kinks, so a fixed large rule beats adaptive doubling;
        // the normalizer only sets the scale of the residual.
        const double norm = integrate_mapped_fixed(gabs, p, side, 200);
        std::vector<double> xk_poly = poly.coeffs;
        for (int k = 0; k < count; ++k) {
            if (k > 0) xk_poly.insert(xk_poly.begin(), 0.0);  // multiply by x
            const double I =
                integrate_poly_against_weight(xk_poly, p, side, kEntryTol).value;
            worst = std::max(worst, std::fabs(I) / norm);
        }
    }
    return worst;
}

}  // namespace angelesco
