// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for the test suites.

#pragma once

#include <array>
#include <string>
#include <utility>

#include "groupcb/snapshot.hpp"
#include "groupcb/types.hpp"

namespace testsupport {

inline groupcb::TeamEntry team(std::string name, int pot, double raw_rating) {
    groupcb::TeamEntry entry;
    entry.name = std::move(name);
    entry.pot = pot;
    entry.elo_raw = raw_rating;
    entry.elo = groupcb::round_rating(raw_rating);
    return entry;
}

/// The 2023/24 Group C worked example: Napoli 1911 (pot 1), Real Madrid 1917
/// (pot 2), Braga 1677 (pot 3), Union Berlin 1757 (pot 4); final ranking
/// Real Madrid, Napoli, Braga, Union Berlin.
inline groupcb::GroupRecord worked_group_c() {
    return groupcb::make_group(
        "C",
        {team("Napoli", 1, 1911.0), team("Real Madrid", 2, 1917.0), team("Braga", 3, 1677.0),
         team("Union Berlin", 4, 1757.0)},
        {"Real Madrid", "Napoli", "Braga", "Union Berlin"});
}

}  // namespace testsupport
