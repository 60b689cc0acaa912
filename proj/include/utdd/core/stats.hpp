#pragma once

#include <cstddef>
#include <span>

namespace utdd {

/// Mean and population standard deviation of a residual sequence.
struct ResidualStats {
    double mean = 0.0;
    double std = 0.0;
    std::size_t n = 0;

    friend bool operator==(const ResidualStats&, const ResidualStats&) = default;
};

double mean(std::span<const double> values);

/// Population standard deviation (divides by n). Empty input yields 0.
double population_std(std::span<const double> values);

/// Throws std::invalid_argument for fewer than two values.
ResidualStats residual_stats(std::span<const double> values);

} // namespace utdd
