// SPDX-License-Identifier: Apache-2.0
#include "groupcb/indices.hpp"

#include <algorithm>
#include <array>
#include <catch2/catch.hpp>
#include <cmath>
#include <random>
#include <vector>

#include "groupcb/elo.hpp"
#include "test_support.hpp"

using testsupport::team;
using testsupport::worked_group_c;

namespace {

groupcb::GroupRecord equal_ratings_group(double rating = 1800.0) {
    return groupcb::make_group(
        "A",
        {team("Club A1", 1, rating), team("Club A2", 2, rating), team("Club A3", 3, rating),
         team("Club A4", 4, rating)},
        {"Club A1", "Club A2", "Club A3", "Club A4"});
}

groupcb::GroupRecord random_group(std::mt19937& rng) {
    std::uniform_real_distribution<double> rating(1300.0, 2200.0);
    return groupcb::make_group(
        "R",
        {team("W", 1, rating(rng)), team("X", 2, rating(rng)), team("Y", 3, rating(rng)),
         team("Z", 4, rating(rng))},
        {"W", "X", "Y", "Z"});
}

groupcb::SeasonDataset dataset_of(const groupcb::GroupRecord& group, int copies = 8) {
    groupcb::SeasonDataset dataset;
    dataset.season = 2023;
    for (int i = 0; i < copies; ++i) dataset.groups.push_back(group);
    return dataset;
}

}  // namespace

TEST_CASE("worked example reproduces the group C index values") {
    const auto group = worked_group_c();
    CHECK(groupcb::ucb1a(group) == Approx(4.138).margin(1e-3));
    CHECK(groupcb::cb1a(group) == Approx(0.379).margin(1e-3));
    CHECK(groupcb::ucb2a(group) == Approx(1.932).margin(1e-3));
    CHECK(groupcb::cb2a(group) == Approx(0.288).margin(1e-3));

    const auto ep = groupcb::ex_post_indices(group);
    CHECK(ep.cb1p == 2.0 / 3.0);
    CHECK(ep.cb2p == 1.0);
    CHECK(ep.cb3p == 2.0 / 3.0);
    CHECK(ep.cb4p == 3.0 / 5.0);
}

TEST_CASE("equal ratings give perfectly balanced ex ante values") {
    const auto group = equal_ratings_group();
    CHECK(groupcb::ucb1a(group) == 3.0);
    CHECK(groupcb::cb1a(group) == 0.0);
    CHECK(groupcb::ucb2a(group) == 1.5);
    CHECK(groupcb::cb2a(group) == 0.0);
}

TEST_CASE("ucb1a and ucb2a agree with explicit pair enumeration") {
    std::mt19937 rng(2023);
    for (int i = 0; i < 200; ++i) {
        const auto group = random_group(rng);

        double sum6 = 0.0;
        for (int a = 0; a < 4; ++a) {
            for (int b = a + 1; b < 4; ++b) {
                const double p = groupcb::win_probability(group.teams[static_cast<std::size_t>(a)].elo,
                                                          group.teams[static_cast<std::size_t>(b)].elo);
                sum6 += std::max(p, 1.0 - p);
            }
        }
        CHECK(groupcb::ucb1a(group) == Approx(sum6).margin(1e-12));

        // three strongest by rounded rating (distinct with probability ~1)
        std::array<int, 4> order = {0, 1, 2, 3};
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const auto& ta = group.teams[static_cast<std::size_t>(a)];
            const auto& tb = group.teams[static_cast<std::size_t>(b)];
            return ta.elo != tb.elo ? ta.elo > tb.elo : ta.elo_raw > tb.elo_raw;
        });
        double sum3 = 0.0;
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                const double p = groupcb::win_probability(
                    group.teams[static_cast<std::size_t>(order[static_cast<std::size_t>(a)])].elo,
                    group.teams[static_cast<std::size_t>(order[static_cast<std::size_t>(b)])].elo);
                sum3 += std::max(p, 1.0 - p);
            }
        }
        CHECK(groupcb::ucb2a(group) == Approx(sum3).margin(1e-12));
    }
}

TEST_CASE("one runaway team pushes cb1a towards one half") {
    auto group_for_gap = [](double gap) {
        return groupcb::make_group(
            "G",
            {team("Giant", 1, 1500.0 + gap), team("B", 2, 1500.0), team("C", 3, 1500.0),
             team("D", 4, 1500.0)},
            {"Giant", "B", "C", "D"});
    };
    // limit: three pairs saturate at 1, three stay at 1/2 -> cb1a -> 1/2
    const double near = groupcb::cb1a(group_for_gap(2000.0));
    const double nearer = groupcb::cb1a(group_for_gap(4000.0));
    CHECK(std::fabs(nearer - 0.5) < 1e-9);
    CHECK(std::fabs(nearer - 0.5) < std::fabs(near - 0.5));
}

TEST_CASE("missing ratings are rejected") {
    auto group = worked_group_c();
    group.teams[1].elo_raw = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(groupcb::ucb1a(group), groupcb::DomainError);
    CHECK_THROWS_AS(groupcb::ucb2a(group), groupcb::DomainError);
}

TEST_CASE("fully concordant group scores one on every ex post index") {
    auto group = groupcb::make_group(
        "F",
        {team("One", 1, 1900.0), team("Two", 2, 1850.0), team("Three", 3, 1800.0),
         team("Four", 4, 1750.0)},
        {"One", "Two", "Three", "Four"});
    const auto ep = groupcb::ex_post_indices(group);
    CHECK(ep.cb1p == 1.0);
    CHECK(ep.cb2p == 1.0);
    CHECK(ep.cb3p == 1.0);
    CHECK(ep.cb4p == 1.0);
}

TEST_CASE("a final ranking opposite to the pot order scores minus one") {
    auto group = groupcb::make_group(
        "G",
        {team("P1", 1, 1900.0), team("P2", 2, 1850.0), team("P3", 3, 1800.0),
         team("P4", 4, 1750.0)},
        {"P4", "P3", "P2", "P1"});
    const auto ep = groupcb::ex_post_indices(group);
    CHECK(ep.cb1p == -1.0);
    CHECK(ep.cb2p == -1.0);
}

TEST_CASE("translation of all ratings leaves the indices unchanged") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> shift(-500, 500);
    for (int i = 0; i < 100; ++i) {
        const auto group = random_group(rng);
        auto shifted = group;
        const int k = shift(rng);
        for (auto& t : shifted.teams) {
            t.elo_raw += k;
            t.elo += k;
        }
        CHECK(groupcb::cb1a(shifted) == Approx(groupcb::cb1a(group)).margin(1e-12));
        CHECK(groupcb::cb2a(shifted) == Approx(groupcb::cb2a(group)).margin(1e-12));
        CHECK(groupcb::elo_benchmark_ranking(shifted) == groupcb::elo_benchmark_ranking(group));
    }
}

TEST_CASE("ucb1a decomposes into ucb2a plus the weakest-team pairs") {
    std::mt19937 rng(8080);
    for (int i = 0; i < 100; ++i) {
        const auto group = random_group(rng);
        const auto order = groupcb::elo_benchmark_ranking(group);
        const auto& weakest = group.teams[static_cast<std::size_t>(order[3])];
        double tail = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double p = groupcb::win_probability(
                group.teams[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])].elo, weakest.elo);
            tail += std::max(p, 1.0 - p);
        }
        CHECK(groupcb::ucb1a(group) == Approx(groupcb::ucb2a(group) + tail).margin(1e-12));
    }
}

TEST_CASE("indices do not depend on the listing order of teams or groups") {
    const auto group = worked_group_c();
    const auto reference = groupcb::group_indices(group);

    // same group with the team array permuted
    auto permuted = groupcb::make_group(
        "C",
        {group.teams[2], group.teams[0], group.teams[3], group.teams[1]},
        {"Real Madrid", "Napoli", "Braga", "Union Berlin"});
    const auto shuffled = groupcb::group_indices(permuted);
    CHECK(shuffled.cb1a == Approx(reference.cb1a).margin(1e-15));
    CHECK(shuffled.cb2a == Approx(reference.cb2a).margin(1e-15));
    CHECK(shuffled.cb1p == reference.cb1p);
    CHECK(shuffled.cb2p == reference.cb2p);
    CHECK(shuffled.cb3p == reference.cb3p);
    CHECK(shuffled.cb4p == reference.cb4p);

    // season mean with groups in a different order
    std::mt19937 rng(13);
    auto dataset = dataset_of(group);
    dataset.groups[3] = permuted;
    auto reordered = dataset;
    std::shuffle(reordered.groups.begin(), reordered.groups.end(), rng);
    for (groupcb::Measure m : groupcb::kAllMeasures) {
        CHECK(groupcb::season_mean(m, reordered) == Approx(groupcb::season_mean(m, dataset)).margin(1e-15));
    }
}

TEST_CASE("season mean over eight identical groups is the group value") {
    const auto group = worked_group_c();
    const auto dataset = dataset_of(group);
    const auto gi = groupcb::group_indices(group);
    CHECK(groupcb::season_mean(groupcb::Measure::Cb1A, dataset) == Approx(gi.cb1a).margin(1e-15));
    CHECK(groupcb::season_mean(groupcb::Measure::Cb4P, dataset) == Approx(gi.cb4p).margin(1e-15));

    const auto si = groupcb::season_indices(dataset);
    CHECK(si.season == 2023);
    CHECK(si.means.cb2p == Approx(gi.cb2p).margin(1e-15));
}

TEST_CASE("season mean requires exactly eight groups") {
    const auto group = worked_group_c();
    CHECK_THROWS_AS(groupcb::season_mean(groupcb::Measure::Cb1A, dataset_of(group, 7)),
                    groupcb::DomainError);
    CHECK_THROWS_AS(groupcb::season_indices(dataset_of(group, 9)), groupcb::DomainError);
}

TEST_CASE("season mean equals the direct sum oracle") {
    std::mt19937 rng(4711);
    groupcb::SeasonDataset dataset;
    dataset.season = 2020;
    for (int i = 0; i < 8; ++i) dataset.groups.push_back(random_group(rng));
    for (groupcb::Measure m : groupcb::kAllMeasures) {
        double sum = 0.0;
        for (const auto& g : dataset.groups) sum += groupcb::index_value(groupcb::group_indices(g), m);
        CHECK(groupcb::season_mean(m, dataset) == Approx(sum / 8.0).margin(1e-15));
    }
}

TEST_CASE("hhi of the extreme share vectors") {
    CHECK(groupcb::hhi({0.25, 0.25, 0.25, 0.25}) == 0.25);
    CHECK(groupcb::hhi({1.0, 0.0, 0.0, 0.0}) == 1.0);
    // strict cascade of wins in a double round robin: shares 18/36, 12/36, 6/36, 0
    const double cascade = groupcb::hhi({18.0 / 36.0, 12.0 / 36.0, 6.0 / 36.0, 0.0});
    CHECK(cascade == Approx(0.3889).margin(1e-4));
    CHECK(cascade == Approx(504.0 / 1296.0).margin(1e-12));
    CHECK(cascade == Approx(groupcb::kHhiCascadePoints).margin(1e-12));
}

TEST_CASE("hhi rejects invalid share vectors") {
    CHECK_THROWS_AS(groupcb::hhi({0.5, 0.5, 0.5, 0.5}), groupcb::DomainError);
    CHECK_THROWS_AS(groupcb::hhi({-0.1, 0.5, 0.3, 0.3}), groupcb::DomainError);
}

TEST_CASE("dcb normalisation endpoints and midpoint") {
    CHECK(groupcb::dcb(0.25, 0.25, 1.0) == 0.0);
    CHECK(groupcb::dcb(1.0, 0.25, 1.0) == 1.0);
    const double mid = 0.5 * (groupcb::kHhiAllDrawPoints + groupcb::kHhiCascadePoints);
    CHECK(groupcb::dcb(mid, groupcb::kHhiAllDrawPoints, groupcb::kHhiCascadePoints) ==
          Approx(std::sqrt(0.5)).margin(1e-12));
}

TEST_CASE("dcb rejects out-of-range inputs") {
    CHECK_THROWS_AS(groupcb::dcb(0.2, 0.25, 1.0), groupcb::DomainError);
    CHECK_THROWS_AS(groupcb::dcb(1.1, 0.25, 1.0), groupcb::DomainError);
    CHECK_THROWS_AS(groupcb::dcb(0.5, 1.0, 0.25), groupcb::DomainError);
}
