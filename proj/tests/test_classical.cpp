#include <doctest.h>

#include <cmath>
#include <random>

#include "angelesco/classical.hpp"
#include "angelesco/gram.hpp"

using namespace angelesco;

TEST_CASE("pochhammer") {
    CHECK(pochhammer(3.7, 0) == 1.0);
    CHECK(pochhammer(2.0, 3) == 24.0);
    CHECK(pochhammer(-3.0, 2) == 6.0);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> xs(-4.0, 4.0);
    for (int t = 0; t < 50; ++t) {
        const double x = xs(rng);
        const int k = t % 7;
        CHECK(pochhammer(x, k + 1) ==
              doctest::Approx(pochhammer(x, k) * (x + k)).epsilon(1e-14));
    }
}

TEST_CASE("gegenbauer values") {
    CHECK(gegenbauer(0, 1.3, 0.7) == 1.0);
    CHECK(gegenbauer(1, 1.5, 0.4) == doctest::Approx(1.2));
    // C_2^(lambda)(x) = 2 lambda (lambda+1) x^2 - lambda
    CHECK(gegenbauer(2, 1.0, 0.5) == doctest::Approx(0.0));
    CHECK(gegenbauer(2, 2.0, 0.3) == doctest::Approx(2.0 * 2.0 * 3.0 * 0.09 - 2.0));
}

TEST_CASE("gegenbauer parity") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> xs(-1.0, 1.0);
    std::uniform_real_distribution<double> ls(-0.45, 3.0);
    for (int t = 0; t < 60; ++t) {
        const int n = t % 21;
        double la = ls(rng);
        if (std::fabs(la) < 1e-3) la = 0.5;
        const double x = xs(rng);
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(gegenbauer(n, la, -x) ==
              doctest::Approx(sign * gegenbauer(n, la, x)).epsilon(1e-11));
    }
}

TEST_CASE("gegenbauer coefficients agree with evaluation") {
    for (int n : {0, 1, 3, 6})
        for (double la : {0.5, 1.0, 2.5}) {
            const auto c = gegenbauer_coefficients(n, la);
            for (double x : {-0.8, 0.1, 0.6})
                CHECK(poly_eval(c, x) ==
                      doctest::Approx(gegenbauer(n, la, x)).epsilon(1e-12));
        }
}

TEST_CASE("printed expansion at n=1") {
    // hand expansion: -(2 lambda^2/(lambda+1/2)) x^2 - (beta+1) at lambda=0.5
    const auto e = symmetric_expansion(1, 0.5, 0.0);
    REQUIRE(e.coeffs.size() == 3);
    CHECK(e.coeffs[2] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(e.coeffs[1] == doctest::Approx(0.0));
    CHECK(e.coeffs[0] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("printed expansion is even by construction") {
    for (int n : {1, 2, 3, 4})
        for (double la : {0.5, 1.0, 2.0})
            for (double be : {0.0, 1.0}) {
                const auto e = symmetric_expansion(n, la, be);
                for (std::size_t j = 1; j < e.coeffs.size(); j += 2)
                    CHECK(e.coeffs[j] == 0.0);
            }
}

TEST_CASE("oracle symmetric case n=1 has the closed-form constant term") {
    for (double la : {0.5, 1.0, 2.0})
        for (double be : {0.0, 1.0}) {
            const AngelescoParams p{-1.0, la - 0.5, be, la - 0.5};
            const auto poly = build_type2_polynomial(p, 1, 1);
            CHECK(poly.coeffs[0] ==
                  doctest::Approx(-(be + 1.0) / (be + 2.0 * la + 2.0)).epsilon(1e-11));
            CHECK(poly.coeffs[1] == doctest::Approx(0.0).epsilon(1e-11));
        }
}

TEST_CASE("expansion diagnostic reports finite fields, zero evenness residual") {
    for (int n : {1, 2, 3})
        for (double la : {0.5, 1.0})
            for (double be : {0.0, 1.0}) {
                const auto d = expansion_diagnostic(n, la, be);
                CHECK(d.evenness_residual == 0.0);
                CHECK(std::isfinite(d.max_coeff_difference));
                CHECK(std::isfinite(d.zero_set_distance));
            }
    // the n=1 discrepancy the printed formula carries: measured, not asserted
    const auto d = expansion_diagnostic(1, 0.5, 0.0);
    CHECK(d.max_coeff_difference > 0.1);
}
