// SPDX-License-Identifier: Apache-2.0
//
// The six competitive-balance indices for one group, their seasonal means,
// and the HHI / DCB concentration baselines.
//
// Ex ante: CB1A from all six pairwise win probabilities, CB2A from the three
// pairs among the three strongest teams, both min-max normalised to [0, 1]
// (lower = more balanced). Ex post: Kendall tau between the final ranking and
// an ex ante benchmark (pot allocation or Elo ranking), with and without the
// top-two exemption.

#pragma once

#include <array>
#include <cmath>
#include <string>

#include "groupcb/elo.hpp"
#include "groupcb/error.hpp"
#include "groupcb/ranking.hpp"
#include "groupcb/types.hpp"

namespace groupcb {

namespace detail {

inline void require_ratings(const GroupRecord& group) {
    for (const TeamEntry& team : group.teams) {
        if (!std::isfinite(team.elo_raw)) {
            throw DomainError("group " + group.label + ": team '" + team.name +
                              "' has no Elo rating");
        }
    }
}

/// Win probability of the stronger side of a pair.
inline double stronger_side_probability(double rating_a, double rating_b) {
    const double p = win_probability(rating_a, rating_b);
    return std::max(p, 1.0 - p);
}

}  // namespace detail

/// Sum over all six pairs of the stronger team's win probability, in [3, 6].
/// Computed from rounded ratings; the raw values only break ranking ties.
inline double ucb1a(const GroupRecord& group) {
    detail::require_ratings(group);
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            sum += detail::stronger_side_probability(
                static_cast<double>(group.teams[static_cast<std::size_t>(i)].elo),
                static_cast<double>(group.teams[static_cast<std::size_t>(j)].elo));
        }
    }
    return sum;
}

/// UCB1A min-max normalised to [0, 1]: UCB1A / 3 - 1.
inline double cb1a(const GroupRecord& group) {
    return ucb1a(group) / 3.0 - 1.0;
}

/// Same sum over the three pairs among the three strongest teams, in [1.5, 3].
/// "Strongest" uses the Elo benchmark order including its tie-breaks.
inline double ucb2a(const GroupRecord& group) {
    const std::array<int, 4> order = elo_benchmark_ranking(group);
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            sum += detail::stronger_side_probability(
                static_cast<double>(group.teams[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])].elo),
                static_cast<double>(group.teams[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])].elo));
        }
    }
    return sum;
}

/// UCB2A min-max normalised to [0, 1]: 2 * UCB2A / 3 - 1.
inline double cb2a(const GroupRecord& group) {
    return 2.0 * ucb2a(group) / 3.0 - 1.0;
}

/// The four ex post indices of one group.
struct ExPostIndices {
    double cb1p;  // pot benchmark, all pairs
    double cb2p;  // pot benchmark, final top-two pair exempt
    double cb3p;  // Elo benchmark, all pairs
    double cb4p;  // Elo benchmark, final top-two pair exempt
};

inline ExPostIndices ex_post_indices(const GroupRecord& group) {
    const std::array<int, 4> pot = pot_benchmark_ranking(group);
    const std::array<int, 4> elo = elo_benchmark_ranking(group);
    const std::array<int, 4>& final_order = group.final_order;
    return {
        kendall_tau(pot, final_order),
        kendall_tau_top2_exempt(pot, final_order),
        kendall_tau(elo, final_order),
        kendall_tau_top2_exempt(elo, final_order),
    };
}

/// All six indices of one group.
struct GroupIndices {
    double cb1a;
    double cb2a;
    double cb1p;
    double cb2p;
    double cb3p;
    double cb4p;
};

inline GroupIndices group_indices(const GroupRecord& group) {
    const ExPostIndices ep = ex_post_indices(group);
    return {cb1a(group), cb2a(group), ep.cb1p, ep.cb2p, ep.cb3p, ep.cb4p};
}

inline double index_value(const GroupIndices& indices, Measure m) {
    switch (m) {
        case Measure::Cb1A: return indices.cb1a;
        case Measure::Cb2A: return indices.cb2a;
        case Measure::Cb1P: return indices.cb1p;
        case Measure::Cb2P: return indices.cb2p;
        case Measure::Cb3P: return indices.cb3p;
        case Measure::Cb4P: return indices.cb4p;
    }
    throw DomainError("index_value: unknown measure");
}

/// Season-level value of one measure: the arithmetic mean over the eight groups.
inline double season_mean(Measure measure, const SeasonDataset& dataset) {
    if (dataset.groups.size() != 8) {
        throw DomainError("season " + std::to_string(dataset.season) + ": expected 8 groups, got " +
                          std::to_string(dataset.groups.size()));
    }
    double sum = 0.0;
    for (const GroupRecord& group : dataset.groups) {
        sum += index_value(group_indices(group), measure);
    }
    return sum / 8.0;
}

/// All six seasonal means of a dataset.
struct SeasonIndices {
    int season;
    GroupIndices means;
};

inline SeasonIndices season_indices(const SeasonDataset& dataset) {
    if (dataset.groups.size() != 8) {
        throw DomainError("season " + std::to_string(dataset.season) + ": expected 8 groups, got " +
                          std::to_string(dataset.groups.size()));
    }
    GroupIndices sums{0, 0, 0, 0, 0, 0};
    for (const GroupRecord& group : dataset.groups) {
        const GroupIndices gi = group_indices(group);
        sums.cb1a += gi.cb1a;
        sums.cb2a += gi.cb2a;
        sums.cb1p += gi.cb1p;
        sums.cb2p += gi.cb2p;
        sums.cb3p += gi.cb3p;
        sums.cb4p += gi.cb4p;
    }
    return {dataset.season,
            {sums.cb1a / 8.0, sums.cb2a / 8.0, sums.cb1p / 8.0,
             sums.cb2p / 8.0, sums.cb3p / 8.0, sums.cb4p / 8.0}};
}

/// Four nonnegative shares summing to one.
using ShareVector = std::array<double, 4>;

/// Herfindahl-Hirschman index: sum of squared shares, in [0.25, 1] for four
/// participants.
inline double hhi(const ShareVector& shares) {
    double sum = 0.0;
    double hhi_value = 0.0;
    for (double share : shares) {
        if (!std::isfinite(share) || share < 0.0) {
            throw DomainError("hhi: shares must be nonnegative");
        }
        sum += share;
        hhi_value += share * share;
    }
    if (std::fabs(sum - 1.0) > 1e-9) {
        throw DomainError("hhi: shares must sum to 1");
    }
    return hhi_value;
}

// HHI bounds used as DCB normalisation constants for four-team groups.
inline constexpr double kHhiEqualShares = 0.25;
inline constexpr double kHhiSingleWinner = 1.0;
// Point-share extremes of a double round robin with 3/1/0 scoring: all draws
// give equal shares; a strict cascade of wins gives shares 18/36, 12/36,
// 6/36, 0 and HHI 504/1296.
inline constexpr double kHhiAllDrawPoints = 0.25;
inline constexpr double kHhiCascadePoints = 504.0 / 1296.0;

/// Distance to competitive balance: the square-root min-max normalisation
/// sqrt((HHI - HHI_min) / (HHI_max - HHI_min)), in [0, 1].
inline double dcb(double hhi_value, double hhi_min, double hhi_max) {
    if (!std::isfinite(hhi_value) || !std::isfinite(hhi_min) || !std::isfinite(hhi_max)) {
        throw DomainError("dcb: inputs must be finite");
    }
    if (!(hhi_min < hhi_max)) {
        throw DomainError("dcb: hhi_min must be below hhi_max");
    }
    if (hhi_value < hhi_min || hhi_value > hhi_max) {
        throw DomainError("dcb: HHI outside [hhi_min, hhi_max]");
    }
    return std::sqrt((hhi_value - hhi_min) / (hhi_max - hhi_min));
}

}  // namespace groupcb
