#pragma once

#include <stdexcept>
#include <string>

namespace eifforge {

// Input problems: malformed files, schema violations, bad graph specs.
struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Degenerate arithmetic at evaluation or fitting time: division by zero,
// non-finite values, empty folds, zero-variance columns.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace eifforge
