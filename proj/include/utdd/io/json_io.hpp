#pragma once

#include "utdd/drift/drift.hpp"
#include "utdd/embeddings/boosted.hpp"
#include "utdd/simulate/simulate.hpp"
#include "utdd/stationarity/adf.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>

namespace utdd::io {

inline constexpr int kModelFormatVersion = 1;

/// Model document: the boosted model plus, optionally, the differencing trail that chose k_diffs.
struct ModelDocument {
    embeddings::BoostedModel model;
    std::optional<stationarity::NdiffsResult> differencing;
};

nlohmann::json to_json(const stationarity::AdfResult& adf);
nlohmann::json to_json(const stationarity::NdiffsResult& result);
nlohmann::json to_json(const ModelDocument& doc);
nlohmann::json to_json(const drift::DriftReport& report);

/// Throws ParseError on missing or mistyped fields.
ModelDocument model_from_json(const nlohmann::json& j);
drift::DriftReport report_from_json(const nlohmann::json& j);
sim::SimConfig sim_config_from_json(const nlohmann::json& j);

/// Parses a file; syntax errors surface as ParseError with the offending line number.
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

} // namespace utdd::io
