#include "angelesco/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>

#include "angelesco/polynomial.hpp"

namespace angelesco {

namespace {

// Lanczos approximation, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double z) {
    if (z < 0.5) {
        // reflection
        return std::numbers::pi /
               (std::sin(std::numbers::pi * z) * lanczos_gamma(1.0 - z));
    }
    z -= 1.0;
    double x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) *
           std::exp(-t) * x;
}

// Implicit-shift QL on a symmetric tridiagonal matrix, carrying the first
// components of the eigenvectors in z.  d: diagonal, e: off-diagonal
// (e[n-1] unused).  Cap 50 iterations per eigenvalue.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return;
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw std::runtime_error(
                        "tridiagonal eigen-solve: iteration cap exceeded");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i], b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0 && i != l) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

QuadratureRule build_rule(bool laguerre, int m, double p, double q) {
    std::vector<double> d(m), e(m, 0.0), z(m, 0.0);
    z[0] = 1.0;
    for (int k = 0; k < m; ++k) {
        auto [diag, off2] = laguerre ? laguerre_recurrence_coefficients(k, p)
                                     : jacobi_recurrence_coefficients(k, p, q);
        d[k] = diag;
        if (k >= 1) e[k - 1] = std::sqrt(off2);
    }
    tridiag_ql(d, e, z);
    const double mass =
        laguerre ? std::exp(log_gamma(p + 1.0)) : jacobi_mass(p, q);
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });
    QuadratureRule rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    for (int i = 0; i < m; ++i) {
        rule.nodes[i] = d[idx[i]];
        rule.weights[i] = mass * z[idx[i]] * z[idx[i]];
    }
    return rule;
}

// Rules are pure functions of (family, m, p, q); cache them.
const QuadratureRule& cached_rule(bool laguerre, int m, double p, double q) {
    using Key = std::tuple<bool, int, double, double>;
    static std::map<Key, std::unique_ptr<QuadratureRule>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[{laguerre, m, p, q}];
    if (!slot) slot = std::make_unique<QuadratureRule>(build_rule(laguerre, m, p, q));
    return *slot;
}

struct MappedWeight {
    bool laguerre;
    double p, q;          // rule exponents
    double scale, shift;  // x = scale*t + shift (identity for laguerre)
    double prefactor;
};

IntegralResult adapt(const std::function<double(double)>& g, const MappedWeight& w,
                     int initial_size, double tol) {
    int m = std::max(1, initial_size);
    double prev = 0.0;
    bool have_prev = false;
    for (int pass = 0; pass <= 12; ++pass) {
        const QuadratureRule& rule = cached_rule(w.laguerre, m, w.p, w.q);
        double sum = 0.0;
        double abs_sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double x = w.scale * rule.nodes[i] + w.shift;
            const double term = rule.weights[i] * g(x);
            sum += term;
            abs_sum += std::fabs(term);
        }
        const double val = w.prefactor * sum;
        if (have_prev) {
            const double diff = std::fabs(val - prev);
            // a cancelling sum cannot be resolved below its roundoff floor,
            // so the floor joins the stopping test
            const double floor =
                16.0 * std::numeric_limits<double>::epsilon() * w.prefactor * abs_sum;
            if (diff <= std::max(tol * std::max(1.0, std::fabs(val)), floor))
                return {val, std::max(diff, floor), m};
        }
        prev = val;
        have_prev = true;
        m *= 2;
    }
    throw std::runtime_error("adaptive quadrature: no convergence after 12 doublings");
}

}  // namespace

double gamma_function(double z) {
    if (z <= 0.0) throw std::domain_error("gamma_function requires z > 0");
    return lanczos_gamma(z);
}

double log_gamma(double z) { return std::lgamma(z); }

std::pair<double, double> jacobi_recurrence_coefficients(int k, double p, double q) {
    double diag;
    if (k == 0)
        diag = (q - p) / (p + q + 2.0);
    else {
        const double s = 2.0 * k + p + q;
        diag = (q * q - p * p) / (s * (s + 2.0));
    }
    double off2 = 0.0;
    if (k == 1)
        off2 = 4.0 * (1.0 + p) * (1.0 + q) /
               ((2.0 + p + q) * (2.0 + p + q) * (3.0 + p + q));
    else if (k >= 2) {
        const double s = 2.0 * k + p + q;
        off2 = 4.0 * k * (k + p) * (k + q) * (k + p + q) /
               (s * s * (s + 1.0) * (s - 1.0));
    }
    return {diag, off2};
}

std::pair<double, double> laguerre_recurrence_coefficients(int k, double p) {
    return {2.0 * k + p + 1.0, static_cast<double>(k) * (k + p)};
}

double jacobi_mass(double p, double q) {
    return std::exp((p + q + 1.0) * std::numbers::ln2 + log_gamma(p + 1.0) +
                    log_gamma(q + 1.0) - log_gamma(p + q + 2.0));
}

QuadratureRule gauss_rule_jacobi(int m, double p, double q) {
    if (m < 1) throw std::domain_error("rule size must be positive");
    return cached_rule(false, m, p, q);
}

QuadratureRule gauss_rule_laguerre(int m, double p) {
    if (m < 1) throw std::domain_error("rule size must be positive");
    return cached_rule(true, m, p, 0.0);
}

IntegralResult integrate_mapped(const std::function<double(double)>& g,
                                const AngelescoParams& p, Side side,
                                int initial_size, double tol) {
    MappedWeight w;
    w.laguerre = false;
    if (side == Side::left) {
        // x = a(1-t)/2:  t=-1 -> x=a, t=+1 -> x=0
        w.p = p.beta;
        w.q = p.alpha;
        w.scale = -p.a / 2.0;
        w.shift = p.a / 2.0;
        w.prefactor = std::pow(-p.a / 2.0, p.alpha + p.beta + 1.0);
    } else {
        // x = (1+t)/2:  t=-1 -> x=0, t=+1 -> x=1
        w.p = p.gamma;
        w.q = p.beta;
        w.scale = 0.5;
        w.shift = 0.5;
        w.prefactor = std::pow(0.5, p.beta + p.gamma + 1.0);
    }
    return adapt(g, w, initial_size, tol);
}

double integrate_mapped_fixed(const std::function<double(double)>& g,
                              const AngelescoParams& p, Side side, int size) {
    bool left = side == Side::left;
    const QuadratureRule& rule =
        cached_rule(false, size, left ? p.beta : p.gamma, left ? p.alpha : p.beta);
    const double scale = left ? -p.a / 2.0 : 0.5;
    const double shift = left ? p.a / 2.0 : 0.5;
    const double pref = left ? std::pow(-p.a / 2.0, p.alpha + p.beta + 1.0)
                             : std::pow(0.5, p.beta + p.gamma + 1.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * g(scale * rule.nodes[i] + shift);
    return pref * sum;
}

IntegralResult integrate_laguerre_weighted(const std::function<double(double)>& g,
                                           double expo, int initial_size,
                                           double tol) {
    MappedWeight w{true, expo, 0.0, 1.0, 0.0, 1.0};
    return adapt(g, w, initial_size, tol);
}

IntegralResult integrate_poly_against_weight(const std::vector<double>& q,
                                             const AngelescoParams& p, Side side,
                                             double tol) {
    const int deg = static_cast<int>(q.size()) - 1;
    const int m0 = deg / 2 + 8;
    if (side == Side::left) {
        auto g = [&](double x) {
            return poly_eval(q, x) * std::pow(1.0 - x, p.gamma);
        };
        return integrate_mapped(g, p, Side::left, m0, tol);
    }
    auto g = [&](double x) {
        return poly_eval(q, x) * std::pow(x - p.a, p.alpha);
    };
    return integrate_mapped(g, p, Side::right, m0, tol);
}

}  // namespace angelesco
