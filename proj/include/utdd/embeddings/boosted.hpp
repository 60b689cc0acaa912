#pragma once

#include "utdd/core/features.hpp"
#include "utdd/core/stats.hpp"
#include "utdd/core/time_series.hpp"
#include "utdd/embeddings/embedding.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace utdd::embeddings {

/// Stagewise sequence of embeddings, each fitted to the residual left by its predecessors.
struct BoostedModel {
    std::vector<EmbeddingModel> stages;
    /// RMS stage contribution below which fitting stopped.
    double epsilon = 0.0;
    /// Differencing order applied to the series before the first stage.
    std::size_t k_diffs = 0;
    /// Statistics of the final training residual.
    ResidualStats ref_stats;
    /// Final training residual has (numerically) zero variance; unusable for drift scoring.
    bool degenerate = false;
};

struct BoostedFit {
    BoostedModel model;
    /// Differenced training values (the boosting target F_0).
    TimeSeries target;
    /// Final residual F_L on the same grid as `target`.
    TimeSeries residual;
};

/// Exogenous code columns keyed by feature name, aligned with a prediction grid.
using ExogenousCodes = std::map<std::string, std::vector<CategoryCode>>;

/// Relative default: 1e-3 times the population std of the boosting target.
double default_epsilon(std::span<const double> target);

/// Differences `series` k_diffs times, then fits one embedding per feature in order,
/// stopping (without appending) at the first stage whose RMS contribution is below
/// epsilon. Exogenous features carry codes aligned with the undifferenced series.
/// Throws std::invalid_argument for an empty feature list, non-positive epsilon, or a
/// differenced series shorter than twice the largest cardinality.
BoostedFit boosted_fit_detailed(const TimeSeries& series, const std::vector<FeatureSpec>& features,
                                std::optional<double> epsilon, std::size_t k_diffs);

BoostedModel boosted_fit(const TimeSeries& series, const std::vector<FeatureSpec>& features,
                         std::optional<double> epsilon, std::size_t k_diffs);

/// Sum of all stage predictions at each point of `grid` (timestamps only are used).
/// Exogenous stages look their codes up in `exogenous` by feature name.
std::vector<double> boosted_predict(const BoostedModel& model, const TimeSeries& grid,
                                    const ExogenousCodes& exogenous = {});

} // namespace utdd::embeddings
