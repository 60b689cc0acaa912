#include "utdd/embeddings/embedding.hpp"

#include "utdd/core/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace utdd::embeddings {

namespace {

void check_code(CategoryCode code, const FeatureSpec& spec) {
    if (code >= spec.cardinality) {
        throw std::invalid_argument("category code " + std::to_string(code) + " is outside [0, " +
                                    std::to_string(spec.cardinality) + ") for feature " + spec.label());
    }
}

} // namespace

double EmbeddingModel::predict(CategoryCode code) const {
    check_code(code, feature);
    const auto it = table.find(code);
    return it == table.end() ? global_mean : it->second;
}

EmbeddingModel fit_embedding(std::span<const CategoryCode> codes, std::span<const double> target,
                             const FeatureSpec& spec) {
    if (codes.size() != target.size()) {
        throw std::invalid_argument("embedding codes and target differ in length (" + std::to_string(codes.size()) +
                                    " vs " + std::to_string(target.size()) + ")");
    }
    if (target.size() < 2) {
        throw std::invalid_argument("embedding fit needs at least two points");
    }
    spec.validate();

    std::vector<double> sums(spec.cardinality, 0.0);
    std::vector<std::size_t> counts(spec.cardinality, 0);
    for (std::size_t i = 0; i < codes.size(); ++i) {
        check_code(codes[i], spec);
        sums[codes[i]] += target[i];
        ++counts[codes[i]];
    }

    EmbeddingModel model;
    model.feature = spec.drop_front(spec.exogenous_codes.size());
    model.global_mean = mean(target);
    for (CategoryCode c = 0; c < spec.cardinality; ++c) {
        if (counts[c] > 0) {
            model.table.emplace(c, sums[c] / static_cast<double>(counts[c]));
        }
    }

    double total = 0.0;
    double remaining = 0.0;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        const double centred = target[i] - model.global_mean;
        const double resid = target[i] - model.table.at(codes[i]);
        total += centred * centred;
        remaining += resid * resid;
    }
    model.sse_reduction = std::max(0.0, total - remaining);
    return model;
}

std::vector<double> predict_embedding(const EmbeddingModel& model, std::span<const CategoryCode> codes) {
    std::vector<double> out;
    out.reserve(codes.size());
    for (CategoryCode c : codes) {
        out.push_back(model.predict(c));
    }
    return out;
}

} // namespace utdd::embeddings
