// SPDX-License-Identifier: Apache-2.0
//
// Season files: the JSON input format holding pots, group compositions and
// final rankings for one season. See docs/season_file_format.md for the
// exact schema.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "groupcb/error.hpp"
#include "groupcb/snapshot.hpp"

namespace groupcb {

struct SeasonTeam {
    std::string name;   // display name
    std::string club;   // optional explicit snapshot name; empty = derive from `name`
    int pot = 0;        // 1..4
    int final_rank = 0; // 1..4, group winner first

    bool operator==(const SeasonTeam&) const = default;
};

struct SeasonGroup {
    std::string label;  // "A".."H"
    std::vector<SeasonTeam> teams;

    bool operator==(const SeasonGroup&) const = default;
};

struct SeasonFile {
    int season = 0;             // first calendar year of the season
    std::string source;         // optional provenance note
    std::string snapshot_date;  // optional override of the default snapshot date
    std::vector<SeasonGroup> groups;

    bool operator==(const SeasonFile&) const = default;
};

/// Ratings are taken on 1 September of the season's first year unless the
/// file overrides the date.
inline std::string default_snapshot_date(int season) {
    return std::to_string(season) + "-09-01";
}

/// Schema validation; throws FormatError naming the offending group.
inline void validate_season_file(const SeasonFile& file) {
    if (file.season < 1900 || file.season > 2999) {
        throw FormatError("season file: implausible season year " + std::to_string(file.season));
    }
    if (!file.snapshot_date.empty() && !is_iso_date(file.snapshot_date)) {
        throw FormatError("season file: snapshot_date must be YYYY-MM-DD, got '" +
                          file.snapshot_date + "'");
    }
    if (file.groups.size() != 8) {
        throw FormatError("season file: expected 8 groups, got " +
                          std::to_string(file.groups.size()));
    }
    for (const SeasonGroup& group : file.groups) {
        if (group.label.size() != 1 || group.label[0] < 'A' || group.label[0] > 'H') {
            throw FormatError("season file: group label '" + group.label +
                              "' is not one of A..H");
        }
        if (group.teams.size() != 4) {
            throw FormatError("group " + group.label + ": expected 4 teams, got " +
                              std::to_string(group.teams.size()));
        }
        bool pot_seen[5] = {};
        bool rank_seen[5] = {};
        for (const SeasonTeam& team : group.teams) {
            if (team.name.empty()) {
                throw FormatError("group " + group.label + ": team with empty name");
            }
            if (team.pot < 1 || team.pot > 4 || pot_seen[team.pot]) {
                throw FormatError("group " + group.label +
                                  ": pots are not a permutation of 1..4");
            }
            pot_seen[team.pot] = true;
            if (team.final_rank < 1 || team.final_rank > 4 || rank_seen[team.final_rank]) {
                throw FormatError("group " + group.label +
                                  ": final ranks are not a permutation of 1..4");
            }
            rank_seen[team.final_rank] = true;
        }
        for (std::size_t i = 0; i < group.teams.size(); ++i) {
            for (std::size_t j = i + 1; j < group.teams.size(); ++j) {
                if (group.teams[i].name == group.teams[j].name) {
                    throw FormatError("group " + group.label + ": duplicate team name '" +
                                      group.teams[i].name + "'");
                }
            }
        }
    }
    for (std::size_t i = 0; i < file.groups.size(); ++i) {
        for (std::size_t j = i + 1; j < file.groups.size(); ++j) {
            if (file.groups[i].label == file.groups[j].label) {
                throw FormatError("season file: duplicate group label '" +
                                  file.groups[i].label + "'");
            }
        }
    }
}

/// Parses and validates season file JSON.
inline SeasonFile parse_season_file(std::string_view json_text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("season file is not valid JSON: ") + e.what());
    }

    SeasonFile file;
    try {
        if (!root.is_object()) throw FormatError("season file: top level must be an object");
        file.season = root.at("season").get<int>();
        file.source = root.value("source", std::string{});
        file.snapshot_date = root.value("snapshot_date", std::string{});
        for (const auto& group_json : root.at("groups")) {
            SeasonGroup group;
            group.label = group_json.at("label").get<std::string>();
            for (const auto& team_json : group_json.at("teams")) {
                SeasonTeam team;
                team.name = team_json.at("name").get<std::string>();
                team.club = team_json.value("club", std::string{});
                team.pot = team_json.at("pot").get<int>();
                team.final_rank = team_json.at("final_rank").get<int>();
                group.teams.push_back(std::move(team));
            }
            file.groups.push_back(std::move(group));
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("season file: ") + e.what());
    }

    validate_season_file(file);
    return file;
}

/// Canonical serialization: two-space indent, alphabetical keys, optional
/// fields omitted when empty. parse -> serialize -> parse is a fixed point.
inline std::string serialize_season_file(const SeasonFile& file) {
    nlohmann::json root;
    root["season"] = file.season;
    if (!file.source.empty()) root["source"] = file.source;
    if (!file.snapshot_date.empty()) root["snapshot_date"] = file.snapshot_date;
    root["groups"] = nlohmann::json::array();
    for (const SeasonGroup& group : file.groups) {
        nlohmann::json group_json;
        group_json["label"] = group.label;
        group_json["teams"] = nlohmann::json::array();
        for (const SeasonTeam& team : group.teams) {
            nlohmann::json team_json;
            team_json["name"] = team.name;
            if (!team.club.empty()) team_json["club"] = team.club;
            team_json["pot"] = team.pot;
            team_json["final_rank"] = team.final_rank;
            group_json["teams"].push_back(std::move(team_json));
        }
        root["groups"].push_back(std::move(group_json));
    }
    return root.dump(2) + "\n";
}

}  // namespace groupcb
