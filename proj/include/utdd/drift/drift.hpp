#pragma once

#include "utdd/core/features.hpp"
#include "utdd/core/stats.hpp"
#include "utdd/core/time_series.hpp"
#include "utdd/embeddings/boosted.hpp"
#include "utdd/stationarity/adf.hpp"

#include <optional>
#include <span>
#include <vector>

namespace utdd::drift {

inline constexpr double kDefaultThreshold = 0.1;

struct DriftConfig {
    /// Absolute boosting tolerance; relative default when unset.
    std::optional<double> epsilon;
    std::size_t max_diff = 4;
    double threshold = kDefaultThreshold;
    /// Score the current window under the reference model instead of refitting it.
    bool reuse_model = false;
    /// Exogenous codes for the current window, keyed by feature name and aligned with the
    /// undifferenced current series. Exogenous FeatureSpecs themselves carry reference codes.
    embeddings::ExogenousCodes current_exogenous;
};

/// Deseasonalized view of one window on its differenced grid.
struct WindowDecomposition {
    TimeSeries observed;
    std::vector<double> seasonal;
    std::vector<double> residual;
    /// Model fitted to this window; empty when the window was scored under another model.
    std::optional<embeddings::BoostedModel> model;
    double z = 0.0;
};

struct DriftReport {
    double z_ref = 0.0;
    double z_curr = 0.0;
    double delta = 0.0;
    double threshold = kDefaultThreshold;
    bool drifted = false;
    std::vector<double> residual_curr;
    /// Grid of residual_curr.
    Timestamp residual_curr_start;
    std::chrono::seconds step{0};
    stationarity::NdiffsResult differencing;
    bool reuse_model = false;
};

struct DriftAnalysis {
    DriftReport report;
    WindowDecomposition reference;
    WindowDecomposition current;
};

/// Mean absolute deviation over population std: a scale- and shift-invariant scalar
/// (sqrt(2/pi) for Gaussian data). Throws std::invalid_argument for fewer than two
/// values and DegenerateInputError for (numerically) zero spread.
double compute_zscore(std::span<const double> residual);

/// |z_curr - z_ref| >= threshold.
bool detect(double z_ref, double z_curr, double threshold);

/// Full pipeline: differencing order estimated on the reference window and applied to
/// both windows, boosted seasonal fit per window, residual z-statistics, verdict.
/// Throws DegenerateInputError if either window's seasonal fit leaves no residual spread.
DriftAnalysis analyze(const TimeSeries& reference, const TimeSeries& current,
                      const std::vector<FeatureSpec>& features, const DriftConfig& config = {});

DriftReport utdd(const TimeSeries& reference, const TimeSeries& current, const std::vector<FeatureSpec>& features,
                 const DriftConfig& config = {});

} // namespace utdd::drift
