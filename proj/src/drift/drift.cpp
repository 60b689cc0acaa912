#include "utdd/drift/drift.hpp"

#include "utdd/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace utdd::drift {

namespace {

constexpr double kDegenerateSpreadRatio = 1e-12;

WindowDecomposition fitted_window(const embeddings::BoostedFit& fit, const char* which) {
    if (fit.model.degenerate) {
        throw DegenerateInputError(std::string(which) +
                                   " window: seasonal fit leaves a zero-variance residual; nothing to score");
    }
    WindowDecomposition w{fit.target, {}, {fit.residual.values().begin(), fit.residual.values().end()}, fit.model,
                          0.0};
    w.seasonal.resize(w.residual.size());
    for (std::size_t i = 0; i < w.residual.size(); ++i) {
        w.seasonal[i] = w.observed[i] - w.residual[i];
    }
    w.z = compute_zscore(w.residual);
    return w;
}

std::vector<FeatureSpec> features_for_current(const std::vector<FeatureSpec>& features,
                                              const embeddings::ExogenousCodes& current) {
    std::vector<FeatureSpec> out = features;
    for (auto& f : out) {
        if (f.kind != FeatureKind::exogenous) {
            continue;
        }
        const auto it = current.find(f.name);
        if (it == current.end()) {
            throw std::invalid_argument("no current-window codes for exogenous feature '" + f.name + "'");
        }
        f.exogenous_codes = it->second;
    }
    return out;
}

} // namespace

double compute_zscore(std::span<const double> residual) {
    if (residual.size() < 2) {
        throw std::invalid_argument("z-statistic needs at least two residuals");
    }
    const double m = mean(residual);
    const double sd = population_std(residual);
    double mad = 0.0;
    double largest = 0.0;
    for (double r : residual) {
        mad += std::abs(r - m);
        largest = std::max(largest, std::abs(r));
    }
    if (sd == 0.0 || sd <= kDegenerateSpreadRatio * largest) {
        throw DegenerateInputError("residual has zero spread; z-statistic undefined");
    }
    mad /= static_cast<double>(residual.size());
    return mad / sd;
}

bool detect(double z_ref, double z_curr, double threshold) {
    return std::abs(z_curr - z_ref) >= threshold;
}

DriftAnalysis analyze(const TimeSeries& reference, const TimeSeries& current, const std::vector<FeatureSpec>& features,
                      const DriftConfig& config) {
    if (!(config.threshold > 0.0)) {
        throw std::invalid_argument("drift threshold must be positive");
    }
    if (reference.step() != current.step()) {
        throw std::invalid_argument("reference and current windows must share the same step");
    }

    const auto differencing = stationarity::ndiffs(reference, config.max_diff);
    const std::size_t k = differencing.k;

    const auto ref_fit = embeddings::boosted_fit_detailed(reference, features, config.epsilon, k);
    WindowDecomposition ref = fitted_window(ref_fit, "reference");

    WindowDecomposition cur = [&] {
        if (!config.reuse_model) {
            const auto cur_fit = embeddings::boosted_fit_detailed(
                current, features_for_current(features, config.current_exogenous), config.epsilon, k);
            return fitted_window(cur_fit, "current");
        }
        if (k >= current.size()) {
            throw std::invalid_argument("current window is too short for the reference differencing order");
        }
        embeddings::ExogenousCodes shifted;
        for (const auto& [name, codes] : config.current_exogenous) {
            if (codes.size() != current.size()) {
                throw std::invalid_argument("current-window codes for '" + name + "' do not match the window length");
            }
            shifted.emplace(name, std::vector<CategoryCode>(codes.begin() + static_cast<std::ptrdiff_t>(k), codes.end()));
        }
        const TimeSeries observed = diff(current, k);
        WindowDecomposition w{observed, embeddings::boosted_predict(*ref.model, observed, shifted), {}, std::nullopt,
                              0.0};
        w.residual.resize(observed.size());
        for (std::size_t i = 0; i < observed.size(); ++i) {
            w.residual[i] = observed[i] - w.seasonal[i];
        }
        w.z = compute_zscore(w.residual);
        return w;
    }();

    DriftReport report;
    report.z_ref = ref.z;
    report.z_curr = cur.z;
    report.delta = std::abs(cur.z - ref.z);
    report.threshold = config.threshold;
    report.drifted = detect(ref.z, cur.z, config.threshold);
    report.residual_curr = cur.residual;
    report.residual_curr_start = cur.observed.start();
    report.step = cur.observed.step();
    report.differencing = differencing;
    report.reuse_model = config.reuse_model;
    return {std::move(report), std::move(ref), std::move(cur)};
}

DriftReport utdd(const TimeSeries& reference, const TimeSeries& current, const std::vector<FeatureSpec>& features,
                 const DriftConfig& config) {
    return analyze(reference, current, features, config).report;
}

} // namespace utdd::drift
