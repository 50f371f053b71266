#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "angelesco/quadrature.hpp"

using namespace angelesco;

namespace {

// Independent moment oracle for (1-t)^p (1+t)^q on [-1,1], from the
// integration-by-parts recurrence
//   M_{j+1} = (j M_{j-1} + (q-p) M_j) / (j + p + q + 2),
// seeded by the Beta-function mass.
std::vector<double> jacobi_moments(int jmax, double p, double q) {
    std::vector<double> M(jmax + 1);
    M[0] = jacobi_mass(p, q);
    if (jmax >= 1) M[1] = (q - p) / (p + q + 2.0) * M[0];
    for (int j = 1; j < jmax; ++j)
        M[j + 1] = (j * M[j - 1] + (q - p) * M[j]) / (j + p + q + 2.0);
    return M;
}

}  // namespace

TEST_CASE("gamma function identities") {
    CHECK(gamma_function(0.5) == doctest::Approx(1.772453850905516).epsilon(1e-13));
    CHECK(gamma_function(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_function(1.5) == doctest::Approx(0.886226925452758).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_function(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_function(-1.5), std::domain_error);
    for (double z = 0.1; z <= 30.0 + 1e-12; z += 0.1)
        CHECK(gamma_function(z + 1.0) ==
              doctest::Approx(z * gamma_function(z)).epsilon(1e-12));
}

TEST_CASE("recurrence coefficients") {
    CHECK(jacobi_recurrence_coefficients(1, 0.0, 0.0).first == doctest::Approx(0.0));
    CHECK(jacobi_recurrence_coefficients(3, 2.0, 2.0).first == doctest::Approx(0.0));
    CHECK(jacobi_recurrence_coefficients(1, 0.0, 0.0).second ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    // Chebyshev: first squared off-diagonal is 1/2, later ones 1/4
    CHECK(jacobi_recurrence_coefficients(1, -0.5, -0.5).second ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(jacobi_recurrence_coefficients(4, -0.5, -0.5).second ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK(laguerre_recurrence_coefficients(0, 1.5).first == doctest::Approx(2.5));
    CHECK(laguerre_recurrence_coefficients(3, 1.5).second == doctest::Approx(13.5));
}

TEST_CASE("small gauss rules") {
    const auto gl1 = gauss_rule_jacobi(1, 0.0, 0.0);
    CHECK(gl1.nodes[0] == doctest::Approx(0.0));
    CHECK(gl1.weights[0] == doctest::Approx(2.0));

    const auto gl2 = gauss_rule_jacobi(2, 0.0, 0.0);
    CHECK(gl2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(gl2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(gl2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gl2.weights[1] == doctest::Approx(1.0).epsilon(1e-15));

    const auto lag1 = gauss_rule_laguerre(1, 0.0);
    CHECK(lag1.nodes[0] == doctest::Approx(1.0));
    CHECK(lag1.weights[0] == doctest::Approx(1.0));
}

TEST_CASE("rule structure invariants") {
    for (int m : {1, 3, 8, 12})
        for (double p : {-0.5, 0.0, 2.0})
            for (double q : {-0.5, 0.5, 2.0}) {
                const auto rule = gauss_rule_jacobi(m, p, q);
                double wsum = 0.0;
                for (int i = 0; i < m; ++i) {
                    CHECK(rule.nodes[i] > -1.0);
                    CHECK(rule.nodes[i] < 1.0);
                    if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
                    CHECK(rule.weights[i] > 0.0);
                    wsum += rule.weights[i];
                }
                CHECK(wsum == doctest::Approx(jacobi_mass(p, q)).epsilon(1e-12));
            }
    for (int m : {1, 5, 12})
        for (double p : {-0.5, 0.0, 2.0}) {
            const auto rule = gauss_rule_laguerre(m, p);
            double wsum = 0.0;
            for (int i = 0; i < m; ++i) {
                CHECK(rule.nodes[i] > 0.0);
                if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
                CHECK(rule.weights[i] > 0.0);
                wsum += rule.weights[i];
            }
            CHECK(wsum ==
                  doctest::Approx(std::exp(log_gamma(p + 1.0))).epsilon(1e-12));
        }
}

TEST_CASE("jacobi rule exactness on monomials") {
    for (int m = 1; m <= 12; ++m)
        for (double p : {-0.5, 0.0, 0.5, 2.0})
            for (double q : {-0.5, 0.0, 0.5, 2.0}) {
                const auto rule = gauss_rule_jacobi(m, p, q);
                const auto M = jacobi_moments(2 * m - 1, p, q);
                for (int j = 0; j <= 2 * m - 1; ++j) {
                    double s = 0.0;
                    for (int i = 0; i < m; ++i)
                        s += rule.weights[i] * std::pow(rule.nodes[i], j);
                    CHECK(std::fabs(s - M[j]) <=
                          1e-12 * std::max(std::fabs(M[j]), M[0]));
                }
            }
}

TEST_CASE("laguerre rule exactness on monomials") {
    for (int m = 1; m <= 12; ++m)
        for (double p : {-0.5, 0.0, 0.5, 2.0}) {
            const auto rule = gauss_rule_laguerre(m, p);
            for (int j = 0; j <= 2 * m - 1; ++j) {
                double s = 0.0;
                for (int i = 0; i < m; ++i)
                    s += rule.weights[i] * std::pow(rule.nodes[i], j);
                const double exact = std::exp(log_gamma(p + j + 1.0));
                CHECK(std::fabs(s - exact) <= 1e-12 * exact);
            }
        }
}

TEST_CASE("polynomial integration against the Angelesco weight") {
    const AngelescoParams flat{-1.0, 0.0, 0.0, 0.0};
    CHECK(integrate_poly_against_weight({1.0}, flat, Side::right, 1e-12).value ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(integrate_poly_against_weight({0.0, 1.0}, flat, Side::right, 1e-12).value ==
          doctest::Approx(0.5).epsilon(1e-13));
    const AngelescoParams lin{-1.0, 1.0, 0.0, 0.0};
    CHECK(integrate_poly_against_weight({1.0}, lin, Side::right, 1e-12).value ==
          doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("integration is linear in the polynomial") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    const AngelescoParams p{-1.5, 0.5, -0.25, 1.5};
    for (int t = 0; t < 10; ++t) {
        std::vector<double> u(5), v(5), sum(5);
        for (int i = 0; i < 5; ++i) {
            u[i] = coef(rng);
            v[i] = coef(rng);
            sum[i] = u[i] + 2.5 * v[i];
        }
        for (Side side : {Side::left, Side::right}) {
            const double iu = integrate_poly_against_weight(u, p, side, 1e-13).value;
            const double iv = integrate_poly_against_weight(v, p, side, 1e-13).value;
            const double is = integrate_poly_against_weight(sum, p, side, 1e-13).value;
            CHECK(is == doctest::Approx(iu + 2.5 * iv).epsilon(1e-12));
        }
    }
}

TEST_CASE("integral error estimate is honest") {
    const AngelescoParams p{-1.0, 0.5, 0.5, 0.5};
    const auto r = integrate_poly_against_weight({1.0, 2.0, 3.0}, p, Side::left, 1e-10);
    CHECK(r.error_estimate >= 0.0);
    CHECK(r.rule_size_used >= 1);
}
