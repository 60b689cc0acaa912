#include "utdd/stationarity/adf.hpp"

#include "utdd/core/errors.hpp"
#include "utdd/core/stats.hpp"
#include "utdd/stationarity/ols.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace utdd::stationarity {

namespace {
constexpr std::size_t kMinRegressionRows = 10;
constexpr std::size_t kMinNdiffsLength = 30;
constexpr double kDegenerateStdRatio = 1e-10;

bool is_degenerate(std::span<const double> values) {
    return population_std(values) < kDegenerateStdRatio * (1.0 + std::abs(mean(values)));
}
} // namespace

std::size_t schwert_lags(std::size_t n) {
    return static_cast<std::size_t>(std::floor(12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
}

AdfResult adf_test(std::span<const double> values, std::optional<std::size_t> lags) {
    const std::size_t n = values.size();
    const std::size_t lag_order = lags.value_or(schwert_lags(n));
    const std::size_t regressors = lag_order + 2;
    const std::size_t rows = n > lag_order + 1 ? n - lag_order - 1 : 0;
    if (rows < kMinRegressionRows || rows < regressors + 2) {
        throw std::invalid_argument("ADF regression with " + std::to_string(lag_order) + " lags on " +
                                    std::to_string(n) + " points leaves too few observations");
    }

    Eigen::MatrixXd design(rows, regressors);
    Eigen::VectorXd response(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t t = r + lag_order + 1;
        response(r) = values[t] - values[t - 1];
        design(r, 0) = 1.0;
        design(r, 1) = values[t - 1];
        for (std::size_t i = 1; i <= lag_order; ++i) {
            design(r, i + 1) = values[t - i] - values[t - i - 1];
        }
    }

    const OlsFit fit = ols(design, response);
    AdfResult result;
    result.statistic = fit.coefficients(1) / fit.standard_errors(1);
    result.lags_used = lag_order;
    result.observations = rows;
    result.stationary = result.statistic < result.critical_value_5pct;
    return result;
}

AdfResult adf_test(const TimeSeries& series, std::optional<std::size_t> lags) {
    return adf_test(series.values(), lags);
}

NdiffsResult ndiffs(std::span<const double> values, std::size_t max_diff) {
    if (values.size() < kMinNdiffsLength) {
        throw std::invalid_argument("ndiffs needs at least 30 points, got " + std::to_string(values.size()));
    }
    NdiffsResult result;
    for (std::size_t k = 0; k <= max_diff; ++k) {
        const std::vector<double> candidate = diff(values, k);
        if (is_degenerate(candidate)) {
            result.k = k;
            return result;
        }
        try {
            const AdfResult adf = adf_test(candidate);
            result.trail.push_back(adf);
            if (adf.stationary) {
                result.k = k;
                return result;
            }
        } catch (const DegenerateInputError&) {
            // singular regression at this level (e.g. a pure ramp): keep differencing
        }
    }
    result.k = max_diff;
    return result;
}

NdiffsResult ndiffs(const TimeSeries& series, std::size_t max_diff) {
    return ndiffs(series.values(), max_diff);
}

} // namespace utdd::stationarity
