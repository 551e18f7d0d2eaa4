// SPDX-License-Identifier: Apache-2.0
//
// Core domain types shared across the library.

#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "groupcb/error.hpp"

namespace groupcb {

/// One club inside a group.
struct TeamEntry {
    std::string name;   // display name as given by the data source
    std::string club;   // normalized snapshot key; may be empty for hand-built groups
    int pot = 0;        // seeding pot, 1..4
    double elo_raw = std::numeric_limits<double>::quiet_NaN();  // rating before rounding
    int elo = 0;        // rating rounded to the nearest integer

    bool operator==(const TeamEntry&) const = default;
};

/// A four-team group together with its final ranking.
struct GroupRecord {
    std::string label;                 // "A".."H"
    std::array<TeamEntry, 4> teams;
    std::array<int, 4> final_order{};  // indices into `teams`, group winner first

    bool operator==(const GroupRecord&) const = default;
};

struct Provenance {
    std::string source;         // free-text note from the season file
    std::string season_path;    // where the season file was read from
    std::string snapshot_date;  // rating snapshot the teams were resolved against

    bool operator==(const Provenance&) const = default;
};

/// A season: exactly eight groups. Seasons are labeled by the first calendar
/// year (2003 means 2003/04).
struct SeasonDataset {
    int season = 0;
    std::vector<GroupRecord> groups;
    Provenance provenance;

    bool operator==(const SeasonDataset&) const = default;
};

/// The six competitive-balance measures.
enum class Measure { Cb1A, Cb2A, Cb1P, Cb2P, Cb3P, Cb4P };

inline constexpr std::array<Measure, 6> kAllMeasures = {
    Measure::Cb1A, Measure::Cb2A, Measure::Cb1P,
    Measure::Cb2P, Measure::Cb3P, Measure::Cb4P,
};

constexpr const char* measure_name(Measure m) noexcept {
    switch (m) {
        case Measure::Cb1A: return "CB1A";
        case Measure::Cb2A: return "CB2A";
        case Measure::Cb1P: return "CB1P";
        case Measure::Cb2P: return "CB2P";
        case Measure::Cb3P: return "CB3P";
        case Measure::Cb4P: return "CB4P";
    }
    return "?";
}

/// True for the two measures computed before any match is played.
constexpr bool is_ex_ante(Measure m) noexcept {
    return m == Measure::Cb1A || m == Measure::Cb2A;
}

/// Case-insensitive measure lookup ("cb1a", "CB3P", ...).
inline std::optional<Measure> parse_measure(std::string_view token) {
    auto eq = [](std::string_view a, std::string_view b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            char ca = a[i], cb = b[i];
            if (ca >= 'a' && ca <= 'z') ca = static_cast<char>(ca - 'a' + 'A');
            if (cb >= 'a' && cb <= 'z') cb = static_cast<char>(cb - 'a' + 'A');
            if (ca != cb) return false;
        }
        return true;
    };
    for (Measure m : kAllMeasures) {
        if (eq(token, measure_name(m))) return m;
    }
    return std::nullopt;
}

/// One (season, value) point of a seasonal series.
struct SeasonValue {
    int season;
    double value;

    bool operator==(const SeasonValue&) const = default;
};

/// Per-season averaged values of one measure.
struct IndexSeries {
    Measure measure;
    std::vector<SeasonValue> points;

    bool operator==(const IndexSeries&) const = default;
};

/// Builds a group from four team entries plus the final ranking given as
/// display names, winner first.
inline GroupRecord make_group(std::string label, std::array<TeamEntry, 4> teams,
                              const std::array<std::string, 4>& final_names) {
    GroupRecord group;
    group.label = std::move(label);
    group.teams = std::move(teams);
    for (std::size_t rank = 0; rank < final_names.size(); ++rank) {
        int found = -1;
        for (int i = 0; i < 4; ++i) {
            if (group.teams[static_cast<std::size_t>(i)].name == final_names[rank]) {
                if (found >= 0) {
                    throw DomainError("make_group: duplicate team name '" + final_names[rank] + "'");
                }
                found = i;
            }
        }
        if (found < 0) {
            throw DomainError("make_group: final ranking names unknown team '" +
                              final_names[rank] + "'");
        }
        group.final_order[rank] = found;
    }
    // final_order must be a permutation of 0..3
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (group.final_order[static_cast<std::size_t>(i)] ==
                group.final_order[static_cast<std::size_t>(j)]) {
                throw DomainError("make_group: final ranking repeats a team");
            }
        }
    }
    return group;
}

}  // namespace groupcb
