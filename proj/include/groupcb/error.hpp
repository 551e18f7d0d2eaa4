// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace groupcb {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid values or violated preconditions on domain operations.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Malformed input text (snapshot CSV, season files).
class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

/// A trend cannot be fitted because the response series is constant.
class DegenerateFitError : public DomainError {
public:
    explicit DegenerateFitError(const std::string& msg) : DomainError(msg) {}
};

/// Snapshot download failure. Carries the HTTP status when one was received;
/// status() is 0 for transport-level failures.
class FetchError : public Error {
public:
    explicit FetchError(const std::string& msg, int status = 0)
        : Error(msg), status_(status) {}

    int status() const noexcept { return status_; }

private:
    int status_;
};

}  // namespace groupcb
