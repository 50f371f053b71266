#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "angelesco/params.hpp"

using namespace angelesco;

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate_params({-1.0, 0.0, 0.0, 0.0}));
    CHECK_NOTHROW(validate_params({-0.001, -0.999, -0.999, -0.999}));
    CHECK_THROWS_WITH_AS(validate_params({0.0, 0.0, 0.0, 0.0}),
                         "a must be negative", std::domain_error);
    CHECK_THROWS_WITH_AS(validate_params({-1.0, -1.0, 0.0, 0.0}),
                         "alpha must exceed -1", std::domain_error);
    CHECK_THROWS_WITH_AS(validate_params({-1.0, 0.0, -1.5, 0.0}),
                         "beta must exceed -1", std::domain_error);
    CHECK_THROWS_WITH_AS(validate_params({-1.0, 0.0, 0.0, -2.0}),
                         "gamma must exceed -1", std::domain_error);
}

TEST_CASE("weight evaluation") {
    CHECK(eval_weight(0.5, {-1.0, 0.0, 0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(eval_weight(0.5, {-1.0, 1.0, 1.0, 1.0}) == doctest::Approx(0.375));
    CHECK(eval_weight(-0.5, {-1.0, 1.0, 1.0, 1.0}) == doctest::Approx(0.375));
    CHECK_THROWS_AS(eval_weight(1.5, {-1.0, 0.0, 0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(eval_weight(-1.1, {-1.0, 0.0, 0.0, 0.0}), std::domain_error);
    // integrable singularity is flagged as +inf, not an error
    CHECK(std::isinf(eval_weight(0.0, {-1.0, 0.0, -0.5, 0.0})));
    CHECK(eval_weight(0.0, {-1.0, 0.0, 0.5, 0.0}) == doctest::Approx(0.0));
}

TEST_CASE("weight nonnegative on the domain") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ex(-0.9, 3.0);
    for (int t = 0; t < 200; ++t) {
        const AngelescoParams p{-1.5, ex(rng), ex(rng), ex(rng)};
        std::uniform_real_distribution<double> xs(p.a, 1.0);
        const double w = eval_weight(xs(rng), p);
        CHECK(w >= 0.0);
    }
}

TEST_CASE("weight symmetry when a=-1 and alpha=gamma") {
    const AngelescoParams p{-1.0, 0.7, 1.3, 0.7};
    for (double x : {0.1, 0.25, 0.6, 0.93})
        CHECK(eval_weight(x, p) == doctest::Approx(eval_weight(-x, p)).epsilon(1e-14));
}

TEST_CASE("log-derivative values and poles") {
    CHECK(weight_log_derivative(0.5, {-1.0, 0.0, 0.0, 0.0}) == doctest::Approx(0.0));
    CHECK(weight_log_derivative(0.5, {-1.0, 1.0, 1.0, 1.0}) ==
          doctest::Approx(1.0 / 1.5 + 2.0 - 2.0));
    CHECK_THROWS_AS(weight_log_derivative(0.0, {-1.0, 0.0, 1.0, 0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(weight_log_derivative(-1.0, {-1.0, 1.0, 0.0, 0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(weight_log_derivative(1.0, {-1.0, 0.0, 0.0, 1.0}),
                    std::domain_error);
}

TEST_CASE("log-derivative matches finite difference of log weight") {
    const double h = 1e-6;
    for (const AngelescoParams p :
         {AngelescoParams{-1.0, 0.5, 1.5, 0.25}, AngelescoParams{-2.0, 2.0, 0.5, 1.0}})
        for (double x : {-0.7, -0.3, 0.2, 0.5, 0.8}) {
            const double fd =
                (std::log(eval_weight(x + h, p)) - std::log(eval_weight(x - h, p))) /
                (2.0 * h);
            CHECK(weight_log_derivative(x, p) ==
                  doctest::Approx(fd).epsilon(1e-6));
        }
}
