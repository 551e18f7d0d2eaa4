// SPDX-License-Identifier: Apache-2.0
//
// Joining a season file with a rating snapshot into a SeasonDataset.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groupcb/error.hpp"
#include "groupcb/fetch.hpp"
#include "groupcb/normalize.hpp"
#include "groupcb/season.hpp"
#include "groupcb/snapshot.hpp"
#include "groupcb/types.hpp"

namespace groupcb {

struct LoadOptions {
    /// When set, this file is parsed directly and no fetch happens.
    std::filesystem::path snapshot_file;
    /// Otherwise the snapshot comes from the cache (or the network) here.
    std::optional<FetchOptions> fetch;
    /// Extra name aliases (normalized alias -> normalized snapshot key);
    /// they take precedence over the built-in table.
    std::map<std::string, std::string> extra_aliases;
};

/// The snapshot key a team resolves to: the explicit `club` field when given,
/// else the display name, normalized and passed through the alias tables.
inline std::string resolve_club_key(const SeasonTeam& team,
                                    const std::map<std::string, std::string>& extra_aliases) {
    std::string key = normalize_club_name(team.club.empty() ? team.name : team.club);
    if (const auto it = extra_aliases.find(key); it != extra_aliases.end()) {
        return it->second;
    }
    const auto& defaults = default_club_aliases();
    if (const auto it = defaults.find(key); it != defaults.end()) {
        return it->second;
    }
    return key;
}

/// Pure join of a validated season file against a snapshot. Throws
/// DomainError with nearest-name suggestions when a club cannot be resolved.
inline SeasonDataset resolve_season(const SeasonFile& file, const EloSnapshot& snapshot,
                                    const std::map<std::string, std::string>& extra_aliases = {}) {
    SeasonDataset dataset;
    dataset.season = file.season;
    dataset.provenance.source = file.source;
    dataset.provenance.snapshot_date = snapshot.as_of_date;

    std::vector<std::string> snapshot_keys;
    snapshot_keys.reserve(snapshot.entries.size());
    for (const auto& [key, entry] : snapshot.entries) {
        snapshot_keys.push_back(key);
    }

    for (const SeasonGroup& group : file.groups) {
        GroupRecord record;
        record.label = group.label;
        for (std::size_t i = 0; i < group.teams.size(); ++i) {
            const SeasonTeam& team = group.teams[i];
            const std::string key = resolve_club_key(team, extra_aliases);
            const SnapshotEntry* entry = snapshot.find(key);
            if (entry == nullptr) {
                std::string message = "season " + std::to_string(file.season) + " group " +
                                      group.label + ": club '" + team.name + "' (key '" + key +
                                      "') not found in snapshot " + snapshot.as_of_date;
                const auto suggestions = nearest_names(key, snapshot_keys, 3);
                if (!suggestions.empty()) {
                    message += "; nearest names:";
                    for (const std::string& s : suggestions) message += " '" + s + "'";
                }
                throw DomainError(message);
            }
            TeamEntry resolved;
            resolved.name = team.name;
            resolved.club = key;
            resolved.pot = team.pot;
            resolved.elo_raw = entry->rating;
            resolved.elo = round_rating(entry->rating);
            record.teams[i] = std::move(resolved);
            record.final_order[static_cast<std::size_t>(team.final_rank - 1)] =
                static_cast<int>(i);
        }
        dataset.groups.push_back(std::move(record));
    }
    return dataset;
}

/// Reads and parses a snapshot CSV from disk.
inline EloSnapshot read_snapshot_file(const std::filesystem::path& path) {
    return parse_snapshot(detail::read_file_bytes(path));
}

/// Reads, validates and parses a season file from disk.
inline SeasonFile read_season_file(const std::filesystem::path& path) {
    return parse_season_file(detail::read_file_bytes(path));
}

/// Full load: season file from disk, snapshot per options, join by club name.
inline SeasonDataset load_season(const std::filesystem::path& season_path,
                                 const LoadOptions& options = {}) {
    const SeasonFile file = read_season_file(season_path);
    const std::string date =
        file.snapshot_date.empty() ? default_snapshot_date(file.season) : file.snapshot_date;

    EloSnapshot snapshot;
    if (!options.snapshot_file.empty()) {
        snapshot = read_snapshot_file(options.snapshot_file);
        if (snapshot.as_of_date.empty()) snapshot.as_of_date = date;
    } else if (options.fetch.has_value()) {
        snapshot = fetch_snapshot(date, *options.fetch);
    } else {
        throw DomainError("load_season: no snapshot source configured (set snapshot_file or fetch)");
    }

    SeasonDataset dataset = resolve_season(file, snapshot, options.extra_aliases);
    dataset.provenance.season_path = season_path.string();
    return dataset;
}

}  // namespace groupcb
