// SPDX-License-Identifier: Apache-2.0
//
// Elo rating mathematics: win probabilities and post-match updates.
// Pure functions, no state.

#pragma once

#include <cmath>

#include "groupcb/error.hpp"

namespace groupcb {

/// Rating points per factor-of-ten step in the odds.
inline constexpr double kEloScale = 400.0;

/// Fixed update gain.
inline constexpr double kEloKFactor = 20.0;

/// Match result from the first team's perspective.
enum class MatchOutcome { Loss, Draw, Win };

/// Score value of an outcome: 1 for a win, 0.5 for a draw, 0 for a loss.
constexpr double outcome_score(MatchOutcome outcome) noexcept {
    switch (outcome) {
        case MatchOutcome::Win: return 1.0;
        case MatchOutcome::Draw: return 0.5;
        case MatchOutcome::Loss: return 0.0;
    }
    return 0.0;  // unreachable
}

/// Expected probability that the first team beats the second:
/// 1 / (1 + 10^(-(r_i - r_j) / 400)).
inline double win_probability(double rating_i, double rating_j) {
    if (!std::isfinite(rating_i) || !std::isfinite(rating_j)) {
        throw DomainError("win_probability: ratings must be finite");
    }
    return 1.0 / (1.0 + std::pow(10.0, -(rating_i - rating_j) / kEloScale));
}

/// Rating changes for both sides after one match. Zero-sum by construction.
struct RatingUpdate {
    double delta_i;
    double delta_j;
};

/// delta_i = K * (score - expected score); the opponent receives the negation.
inline RatingUpdate rating_update(double rating_i, double rating_j, MatchOutcome outcome) {
    const double expected = win_probability(rating_i, rating_j);
    const double delta = kEloKFactor * (outcome_score(outcome) - expected);
    return {delta, -delta};
}

}  // namespace groupcb
