// SPDX-License-Identifier: Apache-2.0
//
// Regularized incomplete beta function, evaluated by continued fraction.

#pragma once

#include <cmath>

#include "groupcb/error.hpp"

namespace groupcb {

namespace detail {

// Continued fraction for the incomplete beta function, modified Lentz
// iteration. Converges quickly for x < (a + 1) / (a + b + 2).
inline double incomplete_beta_cf(double a, double b, double x) {
    constexpr double kTol = 1e-12;
    constexpr double kTiny = 1e-300;
    constexpr int kMaxIterations = 400;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double numerator = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + numerator * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + numerator / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        numerator = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + numerator * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + numerator / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) <= kTol) return h;
    }
    throw Error("incomplete beta continued fraction did not converge");
}

}  // namespace detail

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in [0, 1].
inline double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("regularized_incomplete_beta: a and b must be positive and finite");
    }
    if (!(x >= 0.0) || !(x <= 1.0)) {
        throw DomainError("regularized_incomplete_beta: x must lie in [0, 1]");
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    // x^a (1-x)^b / (a B(a, b)), shared by both symmetric branches.
    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                             a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * detail::incomplete_beta_cf(a, b, x) / a;
    }
    return 1.0 - front * detail::incomplete_beta_cf(b, a, 1.0 - x) / b;
}

}  // namespace groupcb
