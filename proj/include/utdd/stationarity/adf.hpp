#pragma once

#include "utdd/core/time_series.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace utdd::stationarity {

/// Asymptotic 5% critical value of the Dickey-Fuller t-ratio, constant-only regression.
inline constexpr double kAdfCriticalValue5pct = -2.86;

struct AdfResult {
    /// t-ratio of the lagged-level coefficient.
    double statistic = 0.0;
    std::size_t lags_used = 0;
    std::size_t observations = 0;
    double critical_value_5pct = kAdfCriticalValue5pct;
    bool stationary = false;
};

struct NdiffsResult {
    std::size_t k = 0;
    /// One entry per differencing level where the ADF regression was run.
    std::vector<AdfResult> trail;
};

/// Schwert rule: floor(12 * (n / 100)^(1/4)).
std::size_t schwert_lags(std::size_t n);

/// Augmented Dickey-Fuller test with intercept and no trend:
///   dx_t = a + g * x_{t-1} + sum_{i=1..L} d_i * dx_{t-i} + e_t
/// `lags` defaults to the Schwert rule. Throws std::invalid_argument when fewer than
/// 10 regression rows (or fewer than regressors + 2) remain; DegenerateInputError
/// for a singular design such as a constant series.
AdfResult adf_test(std::span<const double> values, std::optional<std::size_t> lags = std::nullopt);
AdfResult adf_test(const TimeSeries& series, std::optional<std::size_t> lags = std::nullopt);

/// Smallest k <= max_diff whose k-th difference passes the ADF test. A candidate whose
/// population std is below 1e-10 * (1 + |mean|) counts as stationary without testing.
/// Levels where the regression is singular count as non-stationary and leave no trail entry.
/// Throws std::invalid_argument for fewer than 30 points.
NdiffsResult ndiffs(std::span<const double> values, std::size_t max_diff = 4);
NdiffsResult ndiffs(const TimeSeries& series, std::size_t max_diff = 4);

} // namespace utdd::stationarity
