// SPDX-License-Identifier: Apache-2.0
//
// Snapshot download with an on-disk cache: one file per date, raw bytes as
// received. A date is fetched over HTTP at most once; later calls are served
// from the cache without touching the network.

#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>

#include "httplib.h"

#include "groupcb/error.hpp"
#include "groupcb/snapshot.hpp"

namespace groupcb {

/// Default public ratings endpoint; GET /YYYY-MM-DD returns snapshot CSV.
inline constexpr const char* kDefaultEloBaseUrl = "http://api.clubelo.com";

/// Transport result. status 0 signals a transport-level failure (retryable),
/// with the detail in `error`.
struct HttpResponse {
    int status = 0;
    std::string body;
    std::string error;
};

using Transport = std::function<HttpResponse(const std::string& path)>;

struct FetchOptions {
    std::filesystem::path cache_dir;
    std::string base_url = kDefaultEloBaseUrl;
    Transport transport;  // when unset, an HTTP client against base_url
    int max_attempts = 3;
    std::chrono::milliseconds initial_backoff{1000};  // doubled after each failure
    std::function<void(std::chrono::milliseconds)> sleep_fn;  // injectable for tests
};

/// Cache layout: one file per date.
inline std::filesystem::path snapshot_cache_path(const std::filesystem::path& cache_dir,
                                                 const std::string& date) {
    return cache_dir / (date + ".csv");
}

/// Cache directory resolution: $GROUPCB_CACHE_DIR, then the user cache
/// directory, then ./groupcb-cache.
inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("GROUPCB_CACHE_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
        return std::filesystem::path(xdg) / "groupcb";
    }
    if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
        return std::filesystem::path(home) / ".cache" / "groupcb";
    }
    return "groupcb-cache";
}

namespace detail {

inline std::string read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

inline Transport make_http_transport(const std::string& base_url) {
    return [base_url](const std::string& path) -> HttpResponse {
        httplib::Client client(base_url);
        client.set_connection_timeout(std::chrono::seconds(10));
        client.set_read_timeout(std::chrono::seconds(30));
        client.set_follow_location(true);
        const httplib::Result result = client.Get(path);
        if (!result) {
            return {0, {}, httplib::to_string(result.error())};
        }
        return {result->status, result->body, {}};
    };
}

// Serializes writes into the cache directory within this process.
inline std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

inline void write_cache_file(const std::filesystem::path& path, const std::string& bytes) {
    const std::lock_guard<std::mutex> lock(cache_mutex());
    std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot write cache file: " + tmp.string());
        }
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            throw Error("short write to cache file: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace detail

/// Returns the snapshot for `date` (YYYY-MM-DD). Served from the cache when
/// present; otherwise downloaded with up to max_attempts tries on transport
/// failures (backoff 1 s, 2 s, ...) and written to the cache. A non-success
/// HTTP status is fatal immediately and carries the status.
inline EloSnapshot fetch_snapshot(const std::string& date, const FetchOptions& options) {
    if (!is_iso_date(date)) {
        throw DomainError("fetch_snapshot: date must be YYYY-MM-DD, got '" + date + "'");
    }
    if (options.cache_dir.empty()) {
        throw DomainError("fetch_snapshot: cache_dir is required");
    }
    const std::filesystem::path cache_file = snapshot_cache_path(options.cache_dir, date);
    if (std::filesystem::exists(cache_file)) {
        EloSnapshot snapshot = parse_snapshot(detail::read_file_bytes(cache_file));
        snapshot.as_of_date = date;
        return snapshot;
    }

    const Transport transport =
        options.transport ? options.transport : detail::make_http_transport(options.base_url);
    const auto sleep_fn = options.sleep_fn
                              ? options.sleep_fn
                              : [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
    const std::string path = "/" + date;

    std::string last_error;
    std::chrono::milliseconds backoff = options.initial_backoff;
    for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
        const HttpResponse response = transport(path);
        if (response.status == 0) {
            last_error = response.error.empty() ? "transport failure" : response.error;
            if (attempt < options.max_attempts) {
                sleep_fn(backoff);
                backoff *= 2;
            }
            continue;
        }
        if (response.status < 200 || response.status >= 300) {
            throw FetchError("GET " + options.base_url + path + " returned status " +
                                 std::to_string(response.status),
                             response.status);
        }
        detail::write_cache_file(cache_file, response.body);
        EloSnapshot snapshot = parse_snapshot(response.body);
        snapshot.as_of_date = date;
        return snapshot;
    }
    throw FetchError("GET " + options.base_url + path + " failed after " +
                     std::to_string(options.max_attempts) + " attempts: " + last_error);
}

}  // namespace groupcb
