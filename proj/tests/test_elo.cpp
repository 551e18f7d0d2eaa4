// SPDX-License-Identifier: Apache-2.0
#include "groupcb/elo.hpp"

#include <catch2/catch.hpp>
#include <cmath>
#include <limits>
#include <random>

using groupcb::MatchOutcome;
using groupcb::rating_update;
using groupcb::win_probability;

TEST_CASE("win probability of equal ratings is exactly one half") {
    CHECK(win_probability(1500.0, 1500.0) == 0.5);
    CHECK(win_probability(0.0, 0.0) == 0.5);
    CHECK(win_probability(-312.5, -312.5) == 0.5);
}

TEST_CASE("win probability matches the closed form at a 400-point gap") {
    // 1 / (1 + 10^-1) = 10/11
    CHECK(win_probability(1900.0, 1500.0) == Approx(10.0 / 11.0).margin(1e-12));
    CHECK(win_probability(1500.0, 1900.0) == Approx(1.0 / 11.0).margin(1e-12));
}

TEST_CASE("the six worked pairwise terms sum to 4.138") {
    // rating differences 6, 234, 154, 240, 160, 80; stronger side each time
    const double diffs[] = {6, 234, 154, 240, 160, 80};
    double sum = 0.0;
    for (double d : diffs) sum += win_probability(d, 0.0);
    CHECK(sum == Approx(4.138).margin(1e-3));
    // the closest pair contributes just over one half
    CHECK(std::max(win_probability(1911, 1917), win_probability(1917, 1911)) ==
          Approx(win_probability(6, 0)).margin(1e-15));
}

TEST_CASE("win probability complement and monotonicity") {
    std::mt19937 rng(20240901);
    std::uniform_real_distribution<double> rating(1200.0, 2200.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = rating(rng);
        const double b = rating(rng);
        CHECK(std::fabs(win_probability(a, b) + win_probability(b, a) - 1.0) < 1e-12);
        CHECK(win_probability(a, a) == 0.5);
    }
    // strictly increasing in the rating difference
    double previous = 0.0;
    for (double diff = -800.0; diff <= 800.0; diff += 12.5) {
        const double p = win_probability(1500.0 + diff, 1500.0);
        if (diff > -800.0) CHECK(p > previous);
        previous = p;
    }
}

TEST_CASE("win probability rejects non-finite ratings") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(win_probability(nan, 1500.0), groupcb::DomainError);
    CHECK_THROWS_AS(win_probability(1500.0, inf), groupcb::DomainError);
}

TEST_CASE("rating update for equal opponents") {
    const auto draw = rating_update(1600.0, 1600.0, MatchOutcome::Draw);
    CHECK(draw.delta_i == 0.0);
    CHECK(draw.delta_j == 0.0);

    const auto win = rating_update(1600.0, 1600.0, MatchOutcome::Win);
    CHECK(win.delta_i == 10.0);
    CHECK(win.delta_j == -10.0);
}

TEST_CASE("rating update for an upset loss matches the formula") {
    // Loss of the stronger side: delta = 20 * (0 - W)
    const double expected = -20.0 / (1.0 + std::pow(10.0, -(1911.0 - 1677.0) / 400.0));
    const auto update = rating_update(1911.0, 1677.0, MatchOutcome::Loss);
    CHECK(update.delta_i == Approx(expected).margin(1e-12));
    CHECK(update.delta_j == Approx(-expected).margin(1e-12));
}

TEST_CASE("rating updates are zero-sum") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> rating(1000.0, 2300.0);
    const MatchOutcome outcomes[] = {MatchOutcome::Loss, MatchOutcome::Draw, MatchOutcome::Win};
    for (int i = 0; i < 300; ++i) {
        const auto update = rating_update(rating(rng), rating(rng), outcomes[i % 3]);
        CHECK(std::fabs(update.delta_i + update.delta_j) < 1e-12);
    }
}
