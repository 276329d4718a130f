#pragma once

#include <stdexcept>
#include <string>

namespace chanassign {

/// Input text could not be parsed. `line` is 1-based; 0 when unknown.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg
                                       : msg),
          line(line_) {}
};

/// A requested table would exceed the configured entry budget.
struct SizingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A brute-force search exceeded its configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace chanassign
