// SPDX-License-Identifier: Apache-2.0
//
// Parser for club rating snapshots: CSV text with a header row of at least
// Rank,Club,Country,Level,Elo,From,To (extra columns are tolerated).

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "groupcb/error.hpp"
#include "groupcb/normalize.hpp"

namespace groupcb {

/// One club row from a snapshot.
struct SnapshotEntry {
    std::string club;     // name as written in the file
    std::string country;  // federation code, may be empty
    double rating = 0.0;  // unrounded Elo

    bool operator==(const SnapshotEntry&) const = default;
};

/// Ratings of all clubs on one date, keyed by normalized club name.
struct EloSnapshot {
    std::string as_of_date;  // YYYY-MM-DD
    std::map<std::string, SnapshotEntry> entries;
    std::vector<std::string> warnings;

    const SnapshotEntry* find(std::string_view normalized_name) const {
        const auto it = entries.find(std::string(normalized_name));
        return it == entries.end() ? nullptr : &it->second;
    }

    bool operator==(const EloSnapshot& other) const {
        return as_of_date == other.as_of_date && entries == other.entries;
    }
};

/// Nearest integer, halves away from zero.
inline int round_rating(double raw) {
    if (!std::isfinite(raw)) {
        throw DomainError("round_rating: rating must be finite");
    }
    return static_cast<int>(std::llround(raw));
}

/// "YYYY-MM-DD" with a plausible month and day.
inline bool is_iso_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (text[i] < '0' || text[i] > '9') return false;
    }
    const int month = (text[5] - '0') * 10 + (text[6] - '0');
    const int day = (text[8] - '0') * 10 + (text[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

namespace detail {

// Minimal CSV field splitter; understands double-quoted fields.
inline std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace detail

/// Parses snapshot CSV text. Throws FormatError naming the missing column or
/// the offending line. An empty body yields an empty snapshot with a warning.
inline EloSnapshot parse_snapshot(std::string_view text) {
    static constexpr const char* kRequired[] = {"Rank", "Club",  "Country", "Level",
                                                "Elo",  "From",  "To"};
    EloSnapshot snapshot;

    std::size_t pos = 0;
    int line_number = 0;
    bool saw_header = false;
    std::size_t col_club = 0, col_country = 0, col_elo = 0, col_from = 0;
    std::size_t min_fields = 0;

    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_number;
        if (detail::trim(line).empty()) continue;

        const auto fields = detail::split_csv_line(line);
        if (!saw_header) {
            std::map<std::string, std::size_t> columns;
            for (std::size_t i = 0; i < fields.size(); ++i) {
                columns.emplace(std::string(detail::trim(fields[i])), i);
            }
            for (const char* name : kRequired) {
                if (columns.find(name) == columns.end()) {
                    throw FormatError(std::string("snapshot header is missing column '") + name + "'");
                }
            }
            col_club = columns.at("Club");
            col_country = columns.at("Country");
            col_elo = columns.at("Elo");
            col_from = columns.at("From");
            min_fields = std::max({col_club, col_country, col_elo, col_from}) + 1;
            saw_header = true;
            continue;
        }

        if (fields.size() < min_fields) {
            throw FormatError("snapshot line " + std::to_string(line_number) + ": expected at least " +
                              std::to_string(min_fields) + " fields, got " +
                              std::to_string(fields.size()));
        }
        SnapshotEntry entry;
        entry.club = std::string(detail::trim(fields[col_club]));
        entry.country = std::string(detail::trim(fields[col_country]));
        if (entry.club.empty()) {
            throw FormatError("snapshot line " + std::to_string(line_number) + ": empty club name");
        }
        const std::string_view elo_text = detail::trim(fields[col_elo]);
        const auto [end, ec] = std::from_chars(elo_text.data(), elo_text.data() + elo_text.size(),
                                               entry.rating);
        if (ec != std::errc{} || end != elo_text.data() + elo_text.size() ||
            !std::isfinite(entry.rating)) {
            throw FormatError("snapshot line " + std::to_string(line_number) +
                              ": cannot parse Elo value '" + std::string(elo_text) + "'");
        }
        if (snapshot.as_of_date.empty()) {
            const std::string_view from = detail::trim(fields[col_from]);
            if (is_iso_date(from)) snapshot.as_of_date = std::string(from);
        }
        std::string key = normalize_club_name(entry.club);
        if (key.empty()) {
            throw FormatError("snapshot line " + std::to_string(line_number) + ": club name '" +
                              entry.club + "' normalizes to nothing");
        }
        if (!snapshot.entries.emplace(std::move(key), std::move(entry)).second) {
            throw FormatError("snapshot line " + std::to_string(line_number) + ": duplicate club '" +
                              std::string(detail::trim(fields[col_club])) + "' after normalization");
        }
    }

    if (!saw_header) {
        throw FormatError("snapshot is empty: no header row");
    }
    if (snapshot.entries.empty()) {
        snapshot.warnings.push_back("snapshot has a header but no data rows");
    }
    return snapshot;
}

}  // namespace groupcb
