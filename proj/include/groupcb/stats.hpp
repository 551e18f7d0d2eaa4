// SPDX-License-Identifier: Apache-2.0
//
// Simple linear regression of an index series on the season year, with R^2
// and a two-sided slope significance test.

#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "groupcb/error.hpp"
#include "groupcb/special_functions.hpp"
#include "groupcb/types.hpp"

namespace groupcb {

/// Two-sided tail probability P(|T| >= |t|) of Student's t with df degrees
/// of freedom, via I_{df/(df+t^2)}(df/2, 1/2).
inline double student_t_sf(double t, int df) {
    if (df < 1) {
        throw DomainError("student_t_sf: df must be at least 1");
    }
    if (!std::isfinite(t)) {
        throw DomainError("student_t_sf: t must be finite");
    }
    const double x = df / (df + t * t);
    return regularized_incomplete_beta(0.5 * df, 0.5, x);
}

/// Ordinary least squares fit of value = intercept + slope * season.
struct TrendFit {
    double intercept;
    double slope;      // per year
    double r_squared;
    double t_stat;     // slope / standard error, infinite for an exact fit
    double p_value;    // two-sided, H0: slope = 0
    int n;             // seasons used
};

/// Fits the points of `series` whose season lies in [from_year, to_year],
/// both ends inclusive. The regressor is the calendar year itself.
inline TrendFit fit_trend(std::span<const SeasonValue> series, int from_year, int to_year) {
    std::vector<SeasonValue> selected;
    selected.reserve(series.size());
    for (const SeasonValue& point : series) {
        if (point.season < from_year || point.season > to_year) continue;
        for (const SeasonValue& other : selected) {
            if (other.season == point.season) {
                throw DomainError("fit_trend: duplicate season " + std::to_string(point.season));
            }
        }
        selected.push_back(point);
    }
    const int n = static_cast<int>(selected.size());
    if (n < 3) {
        throw DomainError("fit_trend: need at least 3 seasons in [" + std::to_string(from_year) +
                          ", " + std::to_string(to_year) + "], got " + std::to_string(n));
    }

    double t_mean = 0.0;
    double y_mean = 0.0;
    for (const SeasonValue& p : selected) {
        t_mean += p.season;
        y_mean += p.value;
    }
    t_mean /= n;
    y_mean /= n;

    bool constant = true;
    for (const SeasonValue& p : selected) {
        if (p.value != selected.front().value) {
            constant = false;
            break;
        }
    }
    if (constant) {
        throw DegenerateFitError("fit_trend: constant series, no trend to fit");
    }

    double sxx = 0.0;
    double sxy = 0.0;
    double sst = 0.0;
    for (const SeasonValue& p : selected) {
        const double dt = p.season - t_mean;
        const double dy = p.value - y_mean;
        sxx += dt * dt;
        sxy += dt * dy;
        sst += dy * dy;
    }

    const double slope = sxy / sxx;
    const double intercept = y_mean - slope * t_mean;

    double ssr = 0.0;
    for (const SeasonValue& p : selected) {
        const double residual = p.value - (intercept + slope * p.season);
        ssr += residual * residual;
    }

    TrendFit fit;
    fit.intercept = intercept;
    fit.slope = slope;
    fit.n = n;
    fit.r_squared = 1.0 - ssr / sst;
    if (ssr <= 0.0) {
        // exact fit: zero residual variance
        fit.r_squared = 1.0;
        fit.t_stat = std::copysign(std::numeric_limits<double>::infinity(), slope);
        fit.p_value = 0.0;
        return fit;
    }
    const double slope_se = std::sqrt(ssr / (n - 2) / sxx);
    fit.t_stat = slope / slope_se;
    fit.p_value = student_t_sf(fit.t_stat, n - 2);
    return fit;
}

inline TrendFit fit_trend(const IndexSeries& series, int from_year, int to_year) {
    return fit_trend(std::span<const SeasonValue>(series.points), from_year, to_year);
}

}  // namespace groupcb
