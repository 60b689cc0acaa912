#pragma once

#include "utdd/core/features.hpp"

#include <map>
#include <span>
#include <vector>

namespace utdd::embeddings {

/// Scalar embedding of one categorical feature: each category maps to the mean of
/// the target over that category (the least-squares optimum for a one-hot design).
struct EmbeddingModel {
    /// Exogenous codes are not retained; only kind, cardinality, name and holidays.
    FeatureSpec feature;
    std::map<CategoryCode, double> table;
    /// Fallback for categories not seen during fitting.
    double global_mean = 0.0;
    /// Training sum of squares explained by this stage.
    double sse_reduction = 0.0;

    /// Throws std::invalid_argument if code >= cardinality.
    double predict(CategoryCode code) const;
};

/// Throws std::invalid_argument on length mismatch, fewer than two points, or invalid codes.
EmbeddingModel fit_embedding(std::span<const CategoryCode> codes, std::span<const double> target,
                             const FeatureSpec& spec);

std::vector<double> predict_embedding(const EmbeddingModel& model, std::span<const CategoryCode> codes);

} // namespace utdd::embeddings
