#pragma once

#include <stdexcept>
#include <string>

namespace stpm {

// Malformed or inconsistent input data (files, datasets). CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user-facing configuration (flags, parameter combinations). CLI maps this to exit code 1.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant. CLI maps this to exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace stpm
