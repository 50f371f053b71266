#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "angelesco/cascade.hpp"
#include "angelesco/gram.hpp"

using namespace angelesco;

namespace {
const AngelescoParams kFlat{-1.0, 0.0, 0.0, 0.0};
const ZeroSet kNoZeros{};
}

TEST_CASE("f evaluation") {
    CHECK(f_eval(0.5, kNoZeros, kFlat) ==
          doctest::Approx(1.0 / 1.5 + 2.0 - 2.0).epsilon(1e-15));
    // clearing denominators at zero shifts gives the quadratic 1 - 3x^2
    CHECK(f_eval(1.0 / std::sqrt(3.0), kNoZeros, kFlat) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(f_eval(0.9, kNoZeros, kFlat) ==
          doctest::Approx(1.0 / 1.9 + 1.0 / 0.9 - 10.0).epsilon(1e-12));
    ZeroSet prev;
    prev.negative_zeros = {-0.5};
    prev.positive_zeros = {0.5};
    CHECK(f_eval(0.25, prev, kFlat) ==
          doctest::Approx(1.0 / 0.75 - 4.0 + 1.0 / 1.25 + 4.0 - 1.0 / 0.75));
}

TEST_CASE("f derivative") {
    CHECK(f_derivative(0.5, kNoZeros, kFlat) ==
          doctest::Approx(-(1.0 / 2.25 + 4.0 + 4.0)).epsilon(1e-15));
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> xs(0.05, 0.95);
    for (int t = 0; t < 50; ++t)
        CHECK(f_derivative(xs(rng), kNoZeros, {-1.0, 0.5, 1.0, 2.0}) < 0.0);
    // centered finite difference at x = 0.3
    const double h = 1e-7;
    const double fd =
        (f_eval(0.3 + h, kNoZeros, kFlat) - f_eval(0.3 - h, kNoZeros, kFlat)) /
        (2.0 * h);
    CHECK(f_derivative(0.3, kNoZeros, kFlat) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("single-bracket solves against closed forms") {
    const double root = solve_in_bracket({0.0, 1.0}, kNoZeros, kFlat, 1e-13);
    CHECK(root == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    const double neg = solve_in_bracket({-1.0, 0.0}, kNoZeros, kFlat, 1e-13);
    CHECK(neg == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-12));
    // a = -0.5: cleared quadratic is 0.5 + x - 3x^2, positive root (1+sqrt(7))/6
    const AngelescoParams half{-0.5, 0.0, 0.0, 0.0};
    CHECK(solve_in_bracket({0.0, 1.0}, kNoZeros, half, 1e-13) ==
          doctest::Approx((1.0 + std::sqrt(7.0)) / 6.0).epsilon(1e-12));
}

TEST_CASE("diagonal zeros, n = 1 closed forms") {
    const auto z = diagonal_zeros(kFlat, 1);
    CHECK(z.negative_zeros[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(z.positive_zeros[0] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    // symmetric family: x^2 = (beta+1)/(beta+2 alpha+3)
    const auto zs = diagonal_zeros({-1.0, 0.0, 1.0, 0.0}, 1);
    CHECK(zs.positive_zeros[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(zs.negative_zeros[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("level-0 brackets of the n=2 ladder hold the n=2 zeros") {
    const auto ladder = diagonal_ladder(kFlat, 2, 1e-13);
    REQUIRE(ladder.size() == 2);
    // level 0 solves at shifted parameters (1,1,1): zeros +-1/sqrt(3)
    const double b = 1.0 / std::sqrt(3.0);
    CHECK(ladder[0].negative_zeros[0] == doctest::Approx(-b).epsilon(1e-12));
    CHECK(ladder[0].positive_zeros[0] == doctest::Approx(b).epsilon(1e-12));
    const auto& z = ladder[1];
    CHECK(z.negative_zeros[0] > -1.0);
    CHECK(z.negative_zeros[0] < -b);
    CHECK(z.negative_zeros[1] > -b);
    CHECK(z.negative_zeros[1] < 0.0);
    CHECK(z.positive_zeros[0] > 0.0);
    CHECK(z.positive_zeros[0] < b);
    CHECK(z.positive_zeros[1] > b);
    CHECK(z.positive_zeros[1] < 1.0);
    // cross-check against the gram oracle
    const auto gz = localize_roots(build_type2_polynomial(kFlat, 2, 2), kFlat, 2, 2);
    for (int i = 0; i < 2; ++i) {
        CHECK(z.negative_zeros[i] == doctest::Approx(gz.negative_zeros[i]).epsilon(1e-8));
        CHECK(z.positive_zeros[i] == doctest::Approx(gz.positive_zeros[i]).epsilon(1e-8));
    }
}

TEST_CASE("interlacing of consecutive ladder levels") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ex(-0.9, 3.0);
    std::uniform_real_distribution<double> as(-2.5, -0.2);
    for (int t = 0; t < 20; ++t) {
        const AngelescoParams p{as(rng), ex(rng), ex(rng), ex(rng)};
        const auto ladder = diagonal_ladder(p, 5, 1e-13);
        for (std::size_t k = 1; k < ladder.size(); ++k) {
            for (const auto side : {0, 1}) {
                const auto& fine = side ? ladder[k].positive_zeros
                                        : ladder[k].negative_zeros;
                const auto& coarse = side ? ladder[k - 1].positive_zeros
                                          : ladder[k - 1].negative_zeros;
                REQUIRE(fine.size() == coarse.size() + 1);
                for (std::size_t j = 0; j < coarse.size(); ++j) {
                    CHECK(coarse[j] > fine[j]);
                    CHECK(coarse[j] < fine[j + 1]);
                }
            }
        }
    }
}

TEST_CASE("f is decreasing and sign-structured around returned roots") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> ex(-0.5, 2.0);
    for (int t = 0; t < 10; ++t) {
        const AngelescoParams p{-1.25, ex(rng), ex(rng), ex(rng)};
        const auto ladder = diagonal_ladder(p, 3, 1e-13);
        const auto& prev = ladder[1];
        // brackets of the last level: poles are a, prev zeros, 0, 1
        std::vector<double> poles{p.a};
        for (double z : prev.negative_zeros) poles.push_back(z);
        poles.push_back(0.0);
        for (double z : prev.positive_zeros) poles.push_back(z);
        poles.push_back(1.0);
        for (std::size_t i = 0; i + 1 < poles.size(); ++i) {
            const double w = poles[i + 1] - poles[i];
            const double x1 = poles[i] + 0.25 * w, x2 = poles[i] + 0.75 * w;
            CHECK(f_eval(x1, prev, p) > f_eval(x2, prev, p));
        }
        const double eps = 1e-12;
        for (double z : ladder[2].all()) {
            CHECK(f_eval(z - eps, prev, p) > 0.0);
            CHECK(f_eval(z + eps, prev, p) < 0.0);
        }
    }
}

TEST_CASE("invalid cascade inputs") {
    CHECK_THROWS_AS(diagonal_zeros(kFlat, 0), std::domain_error);
    CHECK_THROWS_AS(diagonal_zeros({1.0, 0.0, 0.0, 0.0}, 1), std::domain_error);
    CHECK_THROWS_AS(diagonal_zeros(kFlat, 1, -1.0), std::domain_error);
}
