#include "utdd/embeddings/boosted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace utdd::embeddings {

namespace {

constexpr double kDefaultEpsilonRatio = 1e-3;
constexpr double kDegenerateResidualRatio = 1e-12;

double rms(std::span<const double> values) {
    double ss = 0.0;
    for (double v : values) {
        ss += v * v;
    }
    return std::sqrt(ss / static_cast<double>(values.size()));
}

double max_abs(std::span<const double> values) {
    double m = 0.0;
    for (double v : values) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

std::vector<CategoryCode> stage_codes(const FeatureSpec& feature, const TimeSeries& grid,
                                      const ExogenousCodes& exogenous) {
    if (feature.kind != FeatureKind::exogenous) {
        return extract_feature(grid, feature);
    }
    const auto it = exogenous.find(feature.name);
    if (it == exogenous.end()) {
        throw std::invalid_argument("no codes supplied for exogenous feature '" + feature.name + "'");
    }
    FeatureSpec with_codes = feature;
    with_codes.exogenous_codes = it->second;
    return extract_feature(grid, with_codes);
}

} // namespace

double default_epsilon(std::span<const double> target) {
    return std::max(kDefaultEpsilonRatio * population_std(target), std::numeric_limits<double>::min());
}

BoostedFit boosted_fit_detailed(const TimeSeries& series, const std::vector<FeatureSpec>& features,
                                std::optional<double> epsilon, std::size_t k_diffs) {
    if (features.empty()) {
        throw std::invalid_argument("boosted fit needs at least one feature");
    }
    if (epsilon && !(*epsilon > 0.0)) {
        throw std::invalid_argument("boosting epsilon must be positive");
    }
    std::uint32_t max_cardinality = 0;
    for (const auto& f : features) {
        f.validate();
        max_cardinality = std::max(max_cardinality, f.cardinality);
    }
    if (k_diffs >= series.size() || series.size() - k_diffs < 2 * static_cast<std::size_t>(max_cardinality)) {
        throw std::invalid_argument("series of " + std::to_string(series.size()) + " points is too short for " +
                                    std::to_string(k_diffs) + " differences and cardinality " +
                                    std::to_string(max_cardinality));
    }

    const TimeSeries target = diff(series, k_diffs);
    std::vector<double> residual(target.values().begin(), target.values().end());

    BoostedModel model;
    model.k_diffs = k_diffs;
    model.epsilon = epsilon.value_or(default_epsilon(residual));

    for (const auto& feature : features) {
        const FeatureSpec aligned = feature.drop_front(feature.kind == FeatureKind::exogenous ? k_diffs : 0);
        const auto codes = extract_feature(target, aligned);
        EmbeddingModel stage = fit_embedding(codes, residual, aligned);
        const auto contribution = predict_embedding(stage, codes);
        if (rms(contribution) < model.epsilon) {
            break;
        }
        for (std::size_t i = 0; i < residual.size(); ++i) {
            residual[i] -= contribution[i];
        }
        model.stages.push_back(std::move(stage));
    }

    model.ref_stats = residual_stats(residual);
    model.degenerate = model.ref_stats.std <= kDegenerateResidualRatio * max_abs(target.values());
    TimeSeries residual_series = target.with_values(std::move(residual));
    return {std::move(model), target, std::move(residual_series)};
}

BoostedModel boosted_fit(const TimeSeries& series, const std::vector<FeatureSpec>& features,
                         std::optional<double> epsilon, std::size_t k_diffs) {
    return boosted_fit_detailed(series, features, epsilon, k_diffs).model;
}

std::vector<double> boosted_predict(const BoostedModel& model, const TimeSeries& grid,
                                    const ExogenousCodes& exogenous) {
    std::vector<double> out(grid.size(), 0.0);
    for (const auto& stage : model.stages) {
        const auto codes = stage_codes(stage.feature, grid, exogenous);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] += stage.predict(codes[i]);
        }
    }
    return out;
}

} // namespace utdd::embeddings
