#pragma once

#include <stdexcept>
#include <string>

namespace kleinian {

/// Caller violated a precondition (bad rank, mixed orders, unsupported format).
/// Maps to CLI exit code 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal invariant failed (broken table, non-integer multiplicity, ...).
/// Maps to CLI exit code 3.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace kleinian
