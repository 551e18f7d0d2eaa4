// SPDX-License-Identifier: Apache-2.0
#include "groupcb/special_functions.hpp"

#include <catch2/catch.hpp>
#include <cmath>
#include <random>

using groupcb::regularized_incomplete_beta;

namespace {

// Simpson-rule oracle for I_x(a, b), independent of the continued fraction.
double ibeta_by_quadrature(double a, double b, double x, int intervals = 200000) {
    const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
    auto density = [&](double u) {
        if (u <= 0.0 || u >= 1.0) return 0.0;
        return std::exp(log_norm + (a - 1.0) * std::log(u) + (b - 1.0) * std::log1p(-u));
    };
    const double h = x / intervals;
    double sum = density(0.0) + density(x);
    for (int i = 1; i < intervals; ++i) {
        sum += density(i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

}  // namespace

TEST_CASE("incomplete beta of a uniform distribution is the identity") {
    std::mt19937 rng(606);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double x = unit(rng);
        CHECK(regularized_incomplete_beta(1.0, 1.0, x) == Approx(x).margin(1e-12));
    }
}

TEST_CASE("incomplete beta arcsine value at one half") {
    // I_{1/2}(1/2, 1/2) = (2/pi) asin(sqrt(1/2)) = 1/2
    CHECK(regularized_incomplete_beta(0.5, 0.5, 0.5) == Approx(0.5).margin(1e-12));
}

TEST_CASE("incomplete beta endpoints") {
    CHECK(regularized_incomplete_beta(2.5, 3.5, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(2.5, 3.5, 1.0) == 1.0);
}

TEST_CASE("incomplete beta satisfies the reflection identity") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> unit(0.01, 0.99);
    std::uniform_real_distribution<double> shape(0.2, 12.0);
    for (int i = 0; i < 200; ++i) {
        const double a = shape(rng);
        const double b = shape(rng);
        const double x = unit(rng);
        const double lhs = regularized_incomplete_beta(a, b, x);
        const double rhs = 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);
        CHECK(lhs == Approx(rhs).margin(1e-12));
        CHECK(lhs >= 0.0);
        CHECK(lhs <= 1.0);
    }
}

TEST_CASE("incomplete beta is nondecreasing in x") {
    double previous = 0.0;
    for (int i = 1; i <= 99; ++i) {
        const double value = regularized_incomplete_beta(9.5, 0.5, i / 100.0);
        CHECK(value >= previous);
        previous = value;
    }
}

TEST_CASE("incomplete beta agrees with numerical integration") {
    struct Case {
        double a, b, x;
    };
    const Case cases[] = {
        {2.0, 3.0, 0.3}, {1.5, 2.5, 0.4}, {9.5, 0.5, 0.7}, {5.0, 5.0, 0.5}, {1.0, 4.0, 0.85},
    };
    for (const Case& c : cases) {
        CHECK(regularized_incomplete_beta(c.a, c.b, c.x) ==
              Approx(ibeta_by_quadrature(c.a, c.b, c.x)).margin(1e-8));
    }
}

TEST_CASE("incomplete beta rejects invalid parameters") {
    CHECK_THROWS_AS(regularized_incomplete_beta(0.0, 1.0, 0.5), groupcb::DomainError);
    CHECK_THROWS_AS(regularized_incomplete_beta(1.0, -2.0, 0.5), groupcb::DomainError);
    CHECK_THROWS_AS(regularized_incomplete_beta(1.0, 1.0, 1.5), groupcb::DomainError);
    CHECK_THROWS_AS(regularized_incomplete_beta(1.0, 1.0, -0.01), groupcb::DomainError);
}
