#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace utdd {

/// Raised when an input is well-formed but carries no usable information
/// (zero variance, singular regression design, all-zero residual).
class DegenerateInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse failure in a text input. `line()` is 1-based; 0 means "whole document".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace utdd
