// SPDX-License-Identifier: Apache-2.0
//
// Rank permutations, Kendall tau, and the position-restricted tau variant
// that ignores the pair formed by the final first and second place.

#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <ranges>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "groupcb/error.hpp"
#include "groupcb/types.hpp"

namespace groupcb {

/// Outcome of comparing one unordered team pair across two rankings.
template <typename Id>
struct PairVerdict {
    Id team_a{};                          // ranked above team_b in the benchmark
    Id team_b{};
    bool concordant = false;              // both rankings order the pair the same way
    bool occupies_final_top_two = false;  // {a, b} are exactly the final 1st and 2nd
};

namespace detail {

template <typename Id>
std::vector<std::size_t> final_positions(std::span<const Id> benchmark,
                                         std::span<const Id> final_ranking) {
    const std::size_t n = benchmark.size();
    if (n < 2 || final_ranking.size() != n) {
        throw DomainError("rankings must cover the same teams (need n >= 2)");
    }
    // positions[i] = place of benchmark[i] in the final ranking, 0-based
    std::vector<std::size_t> positions(n);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (std::size_t p = 0; p < n; ++p) {
            if (!used[p] && final_ranking[p] == benchmark[i]) {
                positions[i] = p;
                used[p] = true;
                found = true;
                break;
            }
        }
        if (!found) {
            throw DomainError("rankings are not over the same team set");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (benchmark[j] == benchmark[i]) {
                throw DomainError("ranking repeats a team");
            }
        }
    }
    return positions;
}

template <typename Id>
std::vector<PairVerdict<Id>> pair_verdicts_impl(std::span<const Id> benchmark,
                                                std::span<const Id> final_ranking) {
    const auto positions = final_positions(benchmark, final_ranking);
    const std::size_t n = benchmark.size();
    std::vector<PairVerdict<Id>> verdicts;
    verdicts.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            PairVerdict<Id> v;
            v.team_a = benchmark[i];
            v.team_b = benchmark[j];
            // benchmark puts a above b; concordant iff the final agrees
            v.concordant = positions[i] < positions[j];
            const auto lo = std::min(positions[i], positions[j]);
            const auto hi = std::max(positions[i], positions[j]);
            v.occupies_final_top_two = (lo == 0 && hi == 1);
            verdicts.push_back(std::move(v));
        }
    }
    return verdicts;
}

template <typename R>
concept IdRange = std::ranges::contiguous_range<R> &&
                  std::ranges::sized_range<R> &&
                  std::equality_comparable<std::ranges::range_value_t<R>>;

template <IdRange R>
auto as_span(const R& range) {
    using Id = std::ranges::range_value_t<R>;
    return std::span<const Id>(std::ranges::data(range), std::ranges::size(range));
}

}  // namespace detail

/// All n(n-1)/2 pair verdicts between a benchmark ranking and the final
/// ranking, both given best first over the same team set.
template <detail::IdRange B, detail::IdRange F>
    requires std::same_as<std::ranges::range_value_t<B>, std::ranges::range_value_t<F>>
auto pair_verdicts(const B& benchmark, const F& final_ranking) {
    return detail::pair_verdicts_impl(detail::as_span(benchmark), detail::as_span(final_ranking));
}

/// Kendall rank correlation: (concordant - discordant) / total pairs.
/// Rankings are tie-free permutations, so the plain tau-a denominator applies.
template <detail::IdRange B, detail::IdRange F>
    requires std::same_as<std::ranges::range_value_t<B>, std::ranges::range_value_t<F>>
double kendall_tau(const B& benchmark, const F& final_ranking) {
    const auto verdicts = pair_verdicts(benchmark, final_ranking);
    long concordant = 0;
    for (const auto& v : verdicts) concordant += v.concordant ? 1 : 0;
    const long total = static_cast<long>(verdicts.size());
    const long discordant = total - concordant;
    return static_cast<double>(concordant - discordant) / static_cast<double>(total);
}

/// Kendall tau over the pairs that are NOT the (final 1st, final 2nd) pair.
/// Exactly one pair is exempt, so the denominator is n(n-1)/2 - 1.
template <detail::IdRange B, detail::IdRange F>
    requires std::same_as<std::ranges::range_value_t<B>, std::ranges::range_value_t<F>>
double kendall_tau_top2_exempt(const B& benchmark, const F& final_ranking) {
    const auto verdicts = pair_verdicts(benchmark, final_ranking);
    long concordant = 0;
    long counted = 0;
    for (const auto& v : verdicts) {
        if (v.occupies_final_top_two) continue;
        ++counted;
        concordant += v.concordant ? 1 : 0;
    }
    const long discordant = counted - concordant;
    return static_cast<double>(concordant - discordant) / static_cast<double>(counted);
}

/// Ex ante benchmark from the pot allocation: teams ordered by pot number.
/// Returns indices into group.teams, best first.
inline std::array<int, 4> pot_benchmark_ranking(const GroupRecord& group) {
    std::array<int, 4> order = {0, 1, 2, 3};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (group.teams[static_cast<std::size_t>(i)].pot ==
                group.teams[static_cast<std::size_t>(j)].pot) {
                std::ostringstream msg;
                msg << "group " << group.label << ": duplicate pot "
                    << group.teams[static_cast<std::size_t>(i)].pot << " ('"
                    << group.teams[static_cast<std::size_t>(i)].name << "' and '"
                    << group.teams[static_cast<std::size_t>(j)].name << "')";
                throw DomainError(msg.str());
            }
        }
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return group.teams[static_cast<std::size_t>(a)].pot <
               group.teams[static_cast<std::size_t>(b)].pot;
    });
    return order;
}

/// Ex ante benchmark from the ratings: teams ordered by rounded rating
/// descending, ties broken by the raw rating, residual exact ties by club
/// name ascending (reported through `warnings`).
inline std::array<int, 4> elo_benchmark_ranking(const GroupRecord& group,
                                                std::vector<std::string>* warnings = nullptr) {
    for (const TeamEntry& team : group.teams) {
        if (!std::isfinite(team.elo_raw)) {
            throw DomainError("group " + group.label + ": team '" + team.name +
                              "' has no Elo rating");
        }
    }
    auto sort_name = [&](int i) -> const std::string& {
        const TeamEntry& t = group.teams[static_cast<std::size_t>(i)];
        return t.club.empty() ? t.name : t.club;
    };
    std::array<int, 4> order = {0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const TeamEntry& ta = group.teams[static_cast<std::size_t>(a)];
        const TeamEntry& tb = group.teams[static_cast<std::size_t>(b)];
        if (ta.elo != tb.elo) return ta.elo > tb.elo;
        if (ta.elo_raw != tb.elo_raw) return ta.elo_raw > tb.elo_raw;
        return sort_name(a) < sort_name(b);
    });
    if (warnings != nullptr) {
        for (int k = 0; k + 1 < 4; ++k) {
            const TeamEntry& ta = group.teams[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
            const TeamEntry& tb = group.teams[static_cast<std::size_t>(order[static_cast<std::size_t>(k + 1)])];
            if (ta.elo == tb.elo && ta.elo_raw == tb.elo_raw) {
                warnings->push_back("group " + group.label + ": exact rating tie between '" +
                                    ta.name + "' and '" + tb.name + "' resolved by name order");
            }
        }
    }
    return order;
}

}  // namespace groupcb
