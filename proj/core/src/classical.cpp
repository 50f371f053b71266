#include "angelesco/classical.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "angelesco/gram.hpp"
#include "angelesco/params.hpp"

namespace angelesco {

namespace {

double binomial(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v *= static_cast<double>(n - k + i) / i;
    return v;
}

double kappa(int k, double lambda) {
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return sign * pochhammer(2.0 * lambda, k) /
           (std::pow(2.0, k) * pochhammer(lambda + 0.5, k) * fact);
}

// Durand-Kerner on a monic polynomial; good enough for the degree <= 8
// diagnostic polynomials this module compares.
std::vector<std::complex<double>> all_roots(const std::vector<double>& monic) {
    const int n = static_cast<int>(monic.size()) - 1;
    std::vector<std::complex<double>> r(n);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> t(1.0, 0.0);
    for (int i = 0; i < n; ++i, t *= seed) r[i] = t;
    auto eval = [&](std::complex<double> z) {
        std::complex<double> v(0.0, 0.0);
        for (int i = n; i >= 0; --i) v = v * z + monic[i];
        return v;
    };
    for (int it = 0; it < 500; ++it) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= r[i] - r[j];
            const std::complex<double> delta = eval(r[i]) / denom;
            r[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14) break;
    }
    return r;
}

double hausdorff(const std::vector<std::complex<double>>& u,
                 const std::vector<std::complex<double>>& v) {
    auto one_sided = [](const auto& s, const auto& t) {
        double worst = 0.0;
        for (const auto& a : s) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& b : t) best = std::min(best, std::abs(a - b));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_sided(u, v), one_sided(v, u));
}

}  // namespace

double pochhammer(double x, int k) {
    double v = 1.0;
    for (int i = 0; i < k; ++i) v *= x + i;
    return v;
}

double gegenbauer(int n, double lambda, double x) {
    if (n < 0) throw std::domain_error("gegenbauer degree must be nonnegative");
    if (n == 0) return 1.0;
    double cm1 = 1.0, c = 2.0 * lambda * x;
    for (int k = 2; k <= n; ++k) {
        const double cn =
            (2.0 * x * (k + lambda - 1.0) * c - (k + 2.0 * lambda - 2.0) * cm1) / k;
        cm1 = c;
        c = cn;
    }
    return c;
}

std::vector<double> gegenbauer_coefficients(int n, double lambda) {
    std::vector<double> cm1{1.0};
    if (n == 0) return cm1;
    std::vector<double> c{0.0, 2.0 * lambda};
    for (int k = 2; k <= n; ++k) {
        std::vector<double> cn(k + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i)
            cn[i + 1] += 2.0 * (k + lambda - 1.0) / k * c[i];
        for (std::size_t i = 0; i < cm1.size(); ++i)
            cn[i] -= (k + 2.0 * lambda - 2.0) / k * cm1[i];
        cm1 = std::move(c);
        c = std::move(cn);
    }
    return c;
}

SymmetricExpansion symmetric_expansion(int n, double lambda, double beta) {
    if (n < 1) throw std::domain_error("n must be positive");
    if (!(lambda > -0.5) || lambda == 0.0)
        throw std::domain_error("lambda must exceed -1/2 and be nonzero");
    if (!(beta > -1.0)) throw std::domain_error("beta must exceed -1");
    std::vector<double> coeffs(2 * n + 1, 0.0);
    for (int i = 0; i <= n; ++i) {
        const double factor =
            binomial(n, i) * pochhammer(-beta - n, i) * kappa(n - i, lambda);
        const std::vector<double> geg = gegenbauer_coefficients(n - i, lambda + i);
        // term: factor * C_{n-i}^{(lambda+i)}(x) * x^{n-i}
        for (std::size_t j = 0; j < geg.size(); ++j)
            coeffs[j + (n - i)] += factor * geg[j];
    }
    SymmetricExpansion e{n, lambda, beta, coeffs, coeffs};
    const double lead = coeffs.back();
    for (double& c : e.monic_coeffs) c /= lead;
    return e;
}

ExpansionDiagnostic expansion_diagnostic(int n, double lambda, double beta) {
    const SymmetricExpansion e = symmetric_expansion(n, lambda, beta);
    const AngelescoParams p{-1.0, lambda - 0.5, beta, lambda - 0.5};
    const MonicPolynomial oracle = build_type2_polynomial(p, n, n);

    ExpansionDiagnostic d{0.0, 0.0, 0.0};
    for (int j = 0; j <= 2 * n; ++j) {
        const double diff = std::fabs(e.monic_coeffs[j] - oracle.coeffs[j]);
        d.max_coeff_difference = std::max(d.max_coeff_difference, diff);
        if (j % 2 == 1)
            d.evenness_residual = std::max(d.evenness_residual, std::fabs(e.coeffs[j]));
    }
    std::vector<double> em = e.monic_coeffs;
    em.back() = 1.0;
    d.zero_set_distance = hausdorff(all_roots(em), all_roots(oracle.coeffs));
    return d;
}

}  // namespace angelesco
