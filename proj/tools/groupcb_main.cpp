// SPDX-License-Identifier: Apache-2.0
//
// groupcb: competitive-balance indices and trend tests for four-team
// group stages.
//
//   groupcb compute  --season FILE [--snapshot FILE] [--cache-dir DIR] ...
//   groupcb trend    [--measure M] [--from Y] [--to Y] [--dataset DIR] ...
//   groupcb fetch    --date YYYY-MM-DD [--cache-dir DIR]
//   groupcb plotdata --measure M [--from Y] [--to Y] [--output PATH]
//
// Exit codes: 0 success, 1 input error, 2 fetch error.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "groupcb/groupcb.hpp"

namespace {

// Shortest decimal form that round-trips the exact double; used for CSV.
std::string csv_double(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

std::string fixed_digits(double value, int digits) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << value;
    return out.str();
}

struct CommonFlags {
    std::string cache_dir;
    std::string snapshot_file;
    std::string aliases_file;
    std::string format = "table";
    bool offline = false;
};

std::filesystem::path resolved_cache_dir(const CommonFlags& flags) {
    return flags.cache_dir.empty() ? groupcb::default_cache_dir()
                                   : std::filesystem::path(flags.cache_dir);
}

groupcb::FetchOptions make_fetch_options(const CommonFlags& flags) {
    groupcb::FetchOptions options;
    options.cache_dir = resolved_cache_dir(flags);
    if (const char* base = std::getenv("GROUPCB_ELO_BASE_URL"); base != nullptr && *base != '\0') {
        options.base_url = base;
    }
    if (flags.offline) {
        options.transport = [](const std::string&) -> groupcb::HttpResponse {
            return {0, {}, "network disabled (--offline)"};
        };
        options.max_attempts = 1;
    }
    return options;
}

std::map<std::string, std::string> load_aliases(const std::string& path) {
    std::map<std::string, std::string> aliases;
    if (path.empty()) return aliases;
    std::ifstream in(path);
    if (!in) {
        throw groupcb::Error("cannot open aliases file: " + path);
    }
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw groupcb::FormatError("aliases file is not valid JSON: " + std::string(e.what()));
    }
    if (!root.is_object()) {
        throw groupcb::FormatError("aliases file must be a JSON object of alias -> snapshot name");
    }
    for (const auto& [key, value] : root.items()) {
        aliases[groupcb::normalize_club_name(key)] =
            groupcb::normalize_club_name(value.get<std::string>());
    }
    return aliases;
}

groupcb::LoadOptions make_load_options(const CommonFlags& flags) {
    groupcb::LoadOptions options;
    options.extra_aliases = load_aliases(flags.aliases_file);
    if (!flags.snapshot_file.empty()) {
        options.snapshot_file = flags.snapshot_file;
    } else {
        options.fetch = make_fetch_options(flags);
    }
    return options;
}

// ---- compute ---------------------------------------------------------

int cmd_compute(const std::string& season_path, const CommonFlags& flags) {
    const groupcb::SeasonDataset dataset =
        groupcb::load_season(season_path, make_load_options(flags));

    std::vector<const groupcb::GroupRecord*> groups;
    for (const auto& group : dataset.groups) groups.push_back(&group);
    std::sort(groups.begin(), groups.end(),
              [](const auto* a, const auto* b) { return a->label < b->label; });

    const groupcb::SeasonIndices means = groupcb::season_indices(dataset);

    std::vector<std::string> warnings;
    for (const auto* group : groups) groupcb::elo_benchmark_ranking(*group, &warnings);
    for (const auto& warning : warnings) std::cerr << "warning: " << warning << '\n';

    if (flags.format == "csv") {
        std::cout << "group,cb1a,cb2a,cb1p,cb2p,cb3p,cb4p\n";
        for (const auto* group : groups) {
            const auto gi = groupcb::group_indices(*group);
            std::cout << group->label << ',' << csv_double(gi.cb1a) << ',' << csv_double(gi.cb2a)
                      << ',' << csv_double(gi.cb1p) << ',' << csv_double(gi.cb2p) << ','
                      << csv_double(gi.cb3p) << ',' << csv_double(gi.cb4p) << '\n';
        }
        const auto& m = means.means;
        std::cout << "mean," << csv_double(m.cb1a) << ',' << csv_double(m.cb2a) << ','
                  << csv_double(m.cb1p) << ',' << csv_double(m.cb2p) << ',' << csv_double(m.cb3p)
                  << ',' << csv_double(m.cb4p) << '\n';
        return 0;
    }

    std::cout << "season " << dataset.season << " (snapshot " << dataset.provenance.snapshot_date
              << ", " << dataset.groups.size() << " groups)\n\n";
    std::cout << std::left << std::setw(7) << "group";
    for (groupcb::Measure m : groupcb::kAllMeasures) {
        std::cout << std::right << std::setw(9) << groupcb::measure_name(m);
    }
    std::cout << '\n';
    auto print_row = [](const std::string& label, const groupcb::GroupIndices& gi) {
        std::cout << std::left << std::setw(7) << label;
        for (double v : {gi.cb1a, gi.cb2a, gi.cb1p, gi.cb2p, gi.cb3p, gi.cb4p}) {
            std::cout << std::right << std::setw(9) << fixed_digits(v, 4);
        }
        std::cout << '\n';
    };
    for (const auto* group : groups) {
        print_row(group->label, groupcb::group_indices(*group));
    }
    print_row("mean", means.means);
    return 0;
}

// ---- trend -----------------------------------------------------------

std::vector<groupcb::IndexSeries> dataset_series(const std::string& dataset_dir,
                                                 const CommonFlags& flags) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dataset_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    if (files.empty()) {
        throw groupcb::DomainError("no .json season files in " + dataset_dir);
    }
    std::sort(files.begin(), files.end());

    std::vector<groupcb::IndexSeries> series;
    for (groupcb::Measure m : groupcb::kAllMeasures) series.push_back({m, {}});
    const groupcb::LoadOptions options = make_load_options(flags);
    std::vector<int> seen;
    for (const auto& file : files) {
        const auto dataset = groupcb::load_season(file, options);
        if (std::find(seen.begin(), seen.end(), dataset.season) != seen.end()) {
            throw groupcb::DomainError("season " + std::to_string(dataset.season) +
                                       " appears twice in " + dataset_dir);
        }
        seen.push_back(dataset.season);
        const auto si = groupcb::season_indices(dataset);
        for (auto& s : series) {
            s.points.push_back({si.season, groupcb::index_value(si.means, s.measure)});
        }
    }
    return series;
}

int cmd_trend(const std::string& measure_token, int from_year, int to_year,
              const std::string& dataset_dir, const CommonFlags& flags) {
    std::vector<groupcb::Measure> measures;
    if (measure_token == "all") {
        measures.assign(groupcb::kAllMeasures.begin(), groupcb::kAllMeasures.end());
    } else if (const auto m = groupcb::parse_measure(measure_token)) {
        measures.push_back(*m);
    } else {
        throw groupcb::DomainError("unknown measure '" + measure_token +
                                   "' (expected cb1a, cb2a, cb1p, cb2p, cb3p, cb4p or all)");
    }

    std::vector<groupcb::IndexSeries> source;
    if (dataset_dir.empty()) {
        for (groupcb::Measure m : measures) source.push_back(groupcb::reference_index_series(m));
    } else {
        for (const auto& s : dataset_series(dataset_dir, flags)) {
            if (std::find(measures.begin(), measures.end(), s.measure) != measures.end()) {
                source.push_back(s);
            }
        }
    }

    if (flags.format == "csv") {
        std::cout << "measure,from,to,n,intercept,slope,r_squared,t_stat,p_value\n";
        for (const auto& s : source) {
            const auto fit = groupcb::fit_trend(s, from_year, to_year);
            std::cout << groupcb::measure_name(s.measure) << ',' << from_year << ',' << to_year
                      << ',' << fit.n << ',' << csv_double(fit.intercept) << ','
                      << csv_double(fit.slope) << ',' << csv_double(fit.r_squared) << ','
                      << csv_double(fit.t_stat) << ',' << csv_double(fit.p_value) << '\n';
        }
        return 0;
    }

    std::cout << std::left << std::setw(9) << "measure" << std::setw(12) << "period";
    for (const char* header : {"intercept", "slope", "r_squared", "t_stat", "p_value", "n"}) {
        std::cout << std::right << std::setw(11) << header;
    }
    std::cout << '\n';
    for (const auto& s : source) {
        const auto fit = groupcb::fit_trend(s, from_year, to_year);
        std::cout << std::left << std::setw(9) << groupcb::measure_name(s.measure)
                  << std::setw(12) << (std::to_string(from_year) + "-" + std::to_string(to_year))
                  << std::right << std::setw(11) << fixed_digits(fit.intercept, 4)
                  << std::setw(11) << fixed_digits(fit.slope, 6)
                  << std::setw(11) << fixed_digits(fit.r_squared, 3)
                  << std::setw(11) << fixed_digits(fit.t_stat, 4)
                  << std::setw(11) << fixed_digits(fit.p_value, 4)
                  << std::setw(11) << fit.n << '\n';
    }
    return 0;
}

// ---- fetch -----------------------------------------------------------

int cmd_fetch(const std::string& date, const CommonFlags& flags) {
    const auto options = make_fetch_options(flags);
    const auto snapshot = groupcb::fetch_snapshot(date, options);
    for (const auto& warning : snapshot.warnings) {
        std::cerr << "warning: " << warning << '\n';
    }
    std::cout << groupcb::snapshot_cache_path(options.cache_dir, date).string() << " ("
              << snapshot.entries.size() << " clubs)\n";
    return 0;
}

// ---- plotdata --------------------------------------------------------

int cmd_plotdata(const std::string& measure_token, int from_year, int to_year,
                 const std::string& output_path) {
    const auto measure = groupcb::parse_measure(measure_token);
    if (!measure) {
        throw groupcb::DomainError("unknown measure '" + measure_token + "'");
    }
    const auto series = groupcb::reference_index_series(*measure);
    const auto fit = groupcb::fit_trend(series, from_year, to_year);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!output_path.empty() && output_path != "-") {
        file.open(output_path, std::ios::trunc);
        if (!file) {
            throw groupcb::Error("cannot write output file: " + output_path);
        }
        out = &file;
    }
    *out << "kind,season,value\n";
    for (const auto& point : series.points) {
        if (point.season < from_year || point.season > to_year) continue;
        *out << "point," << point.season << ',' << csv_double(point.value) << '\n';
    }
    for (int season : {from_year, to_year}) {
        *out << "trend," << season << ','
             << csv_double(fit.intercept + fit.slope * season) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Competitive-balance indices and trend tests for four-team group stages"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string season_path;
    std::string dataset_dir;
    std::string measure = "all";
    std::string date;
    std::string output_path = "-";
    int from_year = groupcb::kReferenceFirstSeason;
    int to_year = groupcb::kReferenceLastSeason;

    auto* compute = app.add_subcommand("compute", "Per-group indices and season means");
    compute->add_option("--season", season_path, "season file (JSON)")->required();
    compute->add_option("--snapshot", flags.snapshot_file, "rating snapshot CSV to join against");
    compute->add_option("--cache-dir", flags.cache_dir, "snapshot cache directory");
    compute->add_option("--aliases", flags.aliases_file, "extra club aliases (JSON object)");
    compute->add_option("--format", flags.format, "table or csv")
        ->check(CLI::IsMember({"table", "csv"}));
    compute->add_flag("--offline", flags.offline, "never touch the network");

    auto* trend = app.add_subcommand("trend", "Linear season trend of the index series");
    trend->add_option("--measure", measure, "cb1a, cb2a, cb1p, cb2p, cb3p, cb4p or all");
    trend->add_option("--from", from_year, "first season (default 2003)");
    trend->add_option("--to", to_year, "last season, inclusive (default 2023)");
    trend->add_option("--dataset", dataset_dir,
                      "directory of season files to recompute the series from "
                      "(default: bundled reference series)");
    trend->add_option("--snapshot", flags.snapshot_file, "rating snapshot CSV to join against");
    trend->add_option("--cache-dir", flags.cache_dir, "snapshot cache directory");
    trend->add_option("--aliases", flags.aliases_file, "extra club aliases (JSON object)");
    trend->add_option("--format", flags.format, "table or csv")
        ->check(CLI::IsMember({"table", "csv"}));
    trend->add_flag("--offline", flags.offline, "never touch the network");

    auto* fetch = app.add_subcommand("fetch", "Download a rating snapshot into the cache");
    fetch->add_option("--date", date, "snapshot date, YYYY-MM-DD")->required();
    fetch->add_option("--cache-dir", flags.cache_dir, "snapshot cache directory");

    auto* plotdata = app.add_subcommand("plotdata",
                                        "Scatter points plus fitted trendline endpoints as CSV");
    plotdata->add_option("--measure", measure, "cb1a, cb2a, cb1p, cb2p, cb3p or cb4p")->required();
    plotdata->add_option("--from", from_year, "first season (default 2003)");
    plotdata->add_option("--to", to_year, "last season, inclusive (default 2023)");
    plotdata->add_option("--output", output_path, "output file, or - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (compute->parsed()) return cmd_compute(season_path, flags);
        if (trend->parsed()) return cmd_trend(measure, from_year, to_year, dataset_dir, flags);
        if (fetch->parsed()) return cmd_fetch(date, flags);
        if (plotdata->parsed()) return cmd_plotdata(measure, from_year, to_year, output_path);
    } catch (const groupcb::FetchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
