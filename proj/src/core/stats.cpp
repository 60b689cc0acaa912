#include "utdd/core/stats.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace utdd {

double mean(std::span<const double> values) {
    if (values.empty()) {
        return 0.0;
    }
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double population_std(std::span<const double> values) {
    if (values.empty()) {
        return 0.0;
    }
    const double m = mean(values);
    double ss = 0.0;
    for (double v : values) {
        ss += (v - m) * (v - m);
    }
    return std::sqrt(ss / static_cast<double>(values.size()));
}

ResidualStats residual_stats(std::span<const double> values) {
    if (values.size() < 2) {
        throw std::invalid_argument("residual statistics need at least two values");
    }
    return {mean(values), population_std(values), values.size()};
}

} // namespace utdd
