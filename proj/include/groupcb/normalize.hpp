// SPDX-License-Identifier: Apache-2.0
//
// Club-name normalization: the join key between season files and rating
// snapshots. Lower case, Latin diacritics folded to ASCII, punctuation
// stripped, whitespace collapsed to single spaces.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace groupcb {

namespace detail {

// ASCII fold for the Latin-1 Supplement letters (U+00C0..U+00FF).
inline const char* fold_latin1(std::uint32_t cp) {
    if ((cp >= 0xC0 && cp <= 0xC5) || (cp >= 0xE0 && cp <= 0xE5)) return "a";
    if (cp == 0xC6 || cp == 0xE6) return "ae";
    if (cp == 0xC7 || cp == 0xE7) return "c";
    if ((cp >= 0xC8 && cp <= 0xCB) || (cp >= 0xE8 && cp <= 0xEB)) return "e";
    if ((cp >= 0xCC && cp <= 0xCF) || (cp >= 0xEC && cp <= 0xEF)) return "i";
    if (cp == 0xD0 || cp == 0xF0) return "d";
    if (cp == 0xD1 || cp == 0xF1) return "n";
    if ((cp >= 0xD2 && cp <= 0xD6) || (cp >= 0xF2 && cp <= 0xF6)) return "o";
    if (cp == 0xD8 || cp == 0xF8) return "o";
    if ((cp >= 0xD9 && cp <= 0xDC) || (cp >= 0xF9 && cp <= 0xFC)) return "u";
    if (cp == 0xDD || cp == 0xFD || cp == 0xFF) return "y";
    if (cp == 0xDE || cp == 0xFE) return "th";
    if (cp == 0xDF) return "ss";
    return "";  // signs (section, multiplication, ...) are dropped
}

// ASCII fold for Latin Extended-A (U+0100..U+017F).
inline const char* fold_latin_ext_a(std::uint32_t cp) {
    struct Range {
        std::uint32_t lo, hi;
        const char* out;
    };
    static constexpr Range kRanges[] = {
        {0x100, 0x105, "a"}, {0x106, 0x10D, "c"},  {0x10E, 0x111, "d"},
        {0x112, 0x11B, "e"}, {0x11C, 0x123, "g"},  {0x124, 0x127, "h"},
        {0x128, 0x131, "i"}, {0x132, 0x133, "ij"}, {0x134, 0x135, "j"},
        {0x136, 0x138, "k"}, {0x139, 0x142, "l"},  {0x143, 0x14B, "n"},
        {0x14C, 0x151, "o"}, {0x152, 0x153, "oe"}, {0x154, 0x159, "r"},
        {0x15A, 0x161, "s"}, {0x162, 0x167, "t"},  {0x168, 0x173, "u"},
        {0x174, 0x175, "w"}, {0x176, 0x178, "y"},  {0x179, 0x17E, "z"},
        {0x17F, 0x17F, "s"},
    };
    for (const Range& r : kRanges) {
        if (cp >= r.lo && cp <= r.hi) return r.out;
    }
    return "";
}

}  // namespace detail

/// Canonical join key for a club name. Unknown non-Latin characters are
/// dropped like punctuation.
inline std::string normalize_club_name(std::string_view name) {
    std::string folded;
    folded.reserve(name.size());
    std::size_t i = 0;
    while (i < name.size()) {
        const auto byte = static_cast<unsigned char>(name[i]);
        if (byte < 0x80) {
            const char c = static_cast<char>(byte);
            if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
                folded.push_back(c);
            } else if (c >= 'A' && c <= 'Z') {
                folded.push_back(static_cast<char>(c - 'A' + 'a'));
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                folded.push_back(' ');
            }
            // remaining ASCII (punctuation) is stripped
            ++i;
        } else if ((byte & 0xE0) == 0xC0 && i + 1 < name.size() &&
                   (static_cast<unsigned char>(name[i + 1]) & 0xC0) == 0x80) {
            const std::uint32_t cp = (static_cast<std::uint32_t>(byte & 0x1F) << 6) |
                                     (static_cast<unsigned char>(name[i + 1]) & 0x3F);
            if (cp <= 0xFF) {
                folded.append(detail::fold_latin1(cp));
            } else if (cp <= 0x17F) {
                folded.append(detail::fold_latin_ext_a(cp));
            }
            i += 2;
        } else {
            // longer UTF-8 sequences and stray bytes are dropped
            ++i;
            while (i < name.size() && (static_cast<unsigned char>(name[i]) & 0xC0) == 0x80) ++i;
        }
    }
    // collapse whitespace runs, trim ends
    std::string out;
    out.reserve(folded.size());
    for (char c : folded) {
        if (c == ' ') {
            if (!out.empty() && out.back() != ' ') out.push_back(' ');
        } else {
            out.push_back(c);
        }
    }
    if (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

/// Built-in aliases between common club spellings and the names used by the
/// ratings snapshots. Keys and values are normalized. The table is heuristic,
/// not canonical: extend or override it per load when a join fails.
inline const std::map<std::string, std::string>& default_club_aliases() {
    static const std::map<std::string, std::string> kAliases = {
        {"manchester city", "man city"},
        {"manchester united", "man united"},
        {"bayern munich", "bayern"},
        {"bayern munchen", "bayern"},
        {"fc bayern munchen", "bayern"},
        {"paris saint germain", "paris sg"},
        {"paris saintgermain", "paris sg"},
        {"psg", "paris sg"},
        {"inter milan", "inter"},
        {"internazionale", "inter"},
        {"fc internazionale milano", "inter"},
        {"ac milan", "milan"},
        {"atletico madrid", "atletico"},
        {"atletico de madrid", "atletico"},
        {"borussia dortmund", "dortmund"},
        {"borussia monchengladbach", "gladbach"},
        {"bayer leverkusen", "leverkusen"},
        {"rb leipzig", "leipzig"},
        {"real sociedad", "sociedad"},
        {"fc porto", "porto"},
        {"sl benfica", "benfica"},
        {"sporting cp", "sporting"},
        {"sporting lisbon", "sporting"},
        {"fc barcelona", "barcelona"},
        {"sc braga", "braga"},
        {"1 fc union berlin", "union berlin"},
        {"fc copenhagen", "copenhagen"},
        {"fc kobenhavn", "copenhagen"},
        {"newcastle united", "newcastle"},
        {"fc salzburg", "salzburg"},
        {"red bull salzburg", "salzburg"},
        {"psv eindhoven", "psv"},
        {"red star belgrade", "crvena zvezda"},
        {"bsc young boys", "young boys"},
        {"afc ajax", "ajax"},
        {"tottenham hotspur", "tottenham"},
        {"galatasaray sk", "galatasaray"},
        {"sevilla fc", "sevilla"},
        {"arsenal fc", "arsenal"},
        {"chelsea fc", "chelsea"},
        {"liverpool fc", "liverpool"},
        {"celtic fc", "celtic"},
        {"ss lazio", "lazio"},
        {"rc lens", "lens"},
        {"royal antwerp", "antwerp"},
        {"royal antwerp fc", "antwerp"},
    };
    return kAliases;
}

/// Plain Levenshtein distance.
inline std::size_t edit_distance(std::string_view a, std::string_view b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    std::vector<std::size_t> prev(m + 1);
    std::vector<std::size_t> curr(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        curr[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t substitution = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, substitution});
        }
        std::swap(prev, curr);
    }
    return prev[m];
}

/// The `count` candidates closest to `key` in edit distance, nearest first;
/// ties broken alphabetically.
inline std::vector<std::string> nearest_names(std::string_view key,
                                              std::span<const std::string> candidates,
                                              std::size_t count = 3) {
    std::vector<std::pair<std::size_t, std::string>> scored;
    scored.reserve(candidates.size());
    for (const std::string& candidate : candidates) {
        scored.emplace_back(edit_distance(key, candidate), candidate);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<std::string> out;
    for (std::size_t i = 0; i < scored.size() && i < count; ++i) {
        out.push_back(scored[i].second);
    }
    return out;
}

}  // namespace groupcb
