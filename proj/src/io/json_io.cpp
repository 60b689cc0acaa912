#include "utdd/io/json_io.hpp"

#include "utdd/core/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace utdd::io {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(0, std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

template <typename T>
T get(const json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const json::type_error&) {
        throw ParseError(0, std::string("field '") + key + "' has the wrong type");
    }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    return get<T>(j, key);
}

Timestamp get_timestamp(const json& j, const char* key) {
    try {
        return parse_timestamp(get<std::string>(j, key));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, std::string("field '") + key + "': " + e.what());
    }
}

std::set<Date> get_dates(const json& j, const char* key) {
    std::set<Date> out;
    if (!j.contains(key)) {
        return out;
    }
    for (const auto& d : get<std::vector<std::string>>(j, key)) {
        try {
            out.insert(parse_date(d));
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, std::string("field '") + key + "': " + e.what());
        }
    }
    return out;
}

json dates_to_json(const std::set<Date>& dates) {
    json arr = json::array();
    for (const auto& d : dates) {
        arr.push_back(format_date(d));
    }
    return arr;
}

json stats_to_json(const ResidualStats& s) {
    return {{"mean", s.mean}, {"std", s.std}, {"n", s.n}};
}

ResidualStats stats_from_json(const json& j) {
    return {get<double>(j, "mean"), get<double>(j, "std"), get<std::size_t>(j, "n")};
}

stationarity::AdfResult adf_from_json(const json& j) {
    stationarity::AdfResult r;
    r.statistic = get<double>(j, "statistic");
    r.lags_used = get<std::size_t>(j, "lags_used");
    r.observations = get_or<std::size_t>(j, "observations", 0);
    r.critical_value_5pct = get<double>(j, "critical_value_5pct");
    r.stationary = get<bool>(j, "stationary");
    return r;
}

stationarity::NdiffsResult ndiffs_from_json(const json& j) {
    stationarity::NdiffsResult r;
    r.k = get<std::size_t>(j, "k");
    for (const auto& entry : field(j, "trail")) {
        r.trail.push_back(adf_from_json(entry));
    }
    return r;
}

json stage_to_json(const embeddings::EmbeddingModel& stage) {
    json table = json::object();
    for (const auto& [code, value] : stage.table) {
        table[std::to_string(code)] = value;
    }
    json j = {{"feature", std::string(to_string(stage.feature.kind))},
              {"cardinality", stage.feature.cardinality},
              {"table", std::move(table)},
              {"global_mean", stage.global_mean},
              {"sse_reduction", stage.sse_reduction}};
    if (stage.feature.kind == FeatureKind::exogenous) {
        j["name"] = stage.feature.name;
    }
    if (stage.feature.kind == FeatureKind::is_holiday) {
        j["holidays"] = dates_to_json(stage.feature.holidays);
    }
    return j;
}

embeddings::EmbeddingModel stage_from_json(const json& j) {
    embeddings::EmbeddingModel stage;
    const auto kind_name = get<std::string>(j, "feature");
    const auto kind = parse_feature_kind(kind_name);
    if (!kind) {
        throw ParseError(0, "unknown feature kind '" + kind_name + "'");
    }
    stage.feature.kind = *kind;
    stage.feature.cardinality = get<std::uint32_t>(j, "cardinality");
    stage.feature.name = get_or<std::string>(j, "name", "");
    stage.feature.holidays = get_dates(j, "holidays");
    try {
        stage.feature.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
    for (const auto& [key, value] : field(j, "table").items()) {
        CategoryCode code = 0;
        try {
            std::size_t used = 0;
            const unsigned long parsed = std::stoul(key, &used);
            if (used != key.size() || parsed >= stage.feature.cardinality) {
                throw std::out_of_range(key);
            }
            code = static_cast<CategoryCode>(parsed);
        } catch (const std::exception&) {
            throw ParseError(0, "invalid category key '" + key + "' in embedding table");
        }
        if (!value.is_number()) {
            throw ParseError(0, "embedding table value for '" + key + "' is not a number");
        }
        stage.table.emplace(code, value.get<double>());
    }
    stage.global_mean = get<double>(j, "global_mean");
    stage.sse_reduction = get_or<double>(j, "sse_reduction", 0.0);
    return stage;
}

} // namespace

json to_json(const stationarity::AdfResult& adf) {
    return {{"statistic", adf.statistic},
            {"lags_used", adf.lags_used},
            {"observations", adf.observations},
            {"critical_value_5pct", adf.critical_value_5pct},
            {"stationary", adf.stationary}};
}

json to_json(const stationarity::NdiffsResult& result) {
    json trail = json::array();
    for (const auto& adf : result.trail) {
        trail.push_back(to_json(adf));
    }
    return {{"k", result.k}, {"trail", std::move(trail)}};
}

json to_json(const ModelDocument& doc) {
    const auto& m = doc.model;
    json stages = json::array();
    for (const auto& stage : m.stages) {
        stages.push_back(stage_to_json(stage));
    }
    json j = {{"format", "utdd.boosted_model"},
              {"version", kModelFormatVersion},
              {"k_diffs", m.k_diffs},
              {"epsilon", m.epsilon},
              {"degenerate", m.degenerate},
              {"ref_stats", stats_to_json(m.ref_stats)},
              {"stages", std::move(stages)}};
    if (doc.differencing) {
        j["differencing"] = to_json(*doc.differencing);
    }
    return j;
}

ModelDocument model_from_json(const json& j) {
    if (get<std::string>(j, "format") != "utdd.boosted_model") {
        throw ParseError(0, "not a boosted model document");
    }
    if (const int version = get<int>(j, "version"); version != kModelFormatVersion) {
        throw ParseError(0, "unsupported model version " + std::to_string(version));
    }
    ModelDocument doc;
    doc.model.k_diffs = get<std::size_t>(j, "k_diffs");
    doc.model.epsilon = get<double>(j, "epsilon");
    doc.model.degenerate = get_or<bool>(j, "degenerate", false);
    doc.model.ref_stats = stats_from_json(field(j, "ref_stats"));
    for (const auto& stage : field(j, "stages")) {
        doc.model.stages.push_back(stage_from_json(stage));
    }
    if (j.contains("differencing")) {
        doc.differencing = ndiffs_from_json(j.at("differencing"));
    }
    return doc;
}

json to_json(const drift::DriftReport& report) {
    return {{"format", "utdd.drift_report"},
            {"version", kModelFormatVersion},
            {"z_ref", report.z_ref},
            {"z_curr", report.z_curr},
            {"delta", report.delta},
            {"threshold", report.threshold},
            {"drifted", report.drifted},
            {"reuse_model", report.reuse_model},
            {"differencing", to_json(report.differencing)},
            {"residual_curr_start", format_timestamp(report.residual_curr_start)},
            {"step_seconds", report.step.count()},
            {"residual_curr", report.residual_curr}};
}

drift::DriftReport report_from_json(const json& j) {
    if (get<std::string>(j, "format") != "utdd.drift_report") {
        throw ParseError(0, "not a drift report document");
    }
    drift::DriftReport r;
    r.z_ref = get<double>(j, "z_ref");
    r.z_curr = get<double>(j, "z_curr");
    r.delta = get<double>(j, "delta");
    r.threshold = get<double>(j, "threshold");
    r.drifted = get<bool>(j, "drifted");
    r.reuse_model = get_or<bool>(j, "reuse_model", false);
    r.differencing = ndiffs_from_json(field(j, "differencing"));
    r.residual_curr_start = get_timestamp(j, "residual_curr_start");
    r.step = std::chrono::seconds{get<long long>(j, "step_seconds")};
    r.residual_curr = get<std::vector<double>>(j, "residual_curr");
    return r;
}

sim::SimConfig sim_config_from_json(const json& j) {
    sim::SimConfig cfg;
    cfg.start = get_timestamp(j, "start");
    cfg.step = std::chrono::seconds{get_or<long long>(j, "step_seconds", 3600)};
    cfg.n = get<std::size_t>(j, "n");
    if (j.contains("trend")) {
        const auto& t = j.at("trend");
        cfg.trend.level = get_or<double>(t, "level", 0.0);
        cfg.trend.slope = get_or<double>(t, "slope", 0.0);
    }
    if (j.contains("components")) {
        for (const auto& c : j.at("components")) {
            sim::SeasonalComponentConfig comp;
            comp.s = get<std::size_t>(c, "s");
            comp.sigma_omega = get_or<double>(c, "sigma_omega", 0.0);
            if (c.contains("init_gamma")) {
                comp.init_gamma = get<std::vector<double>>(c, "init_gamma");
            }
            if (c.contains("init_gamma_star")) {
                comp.init_gamma_star = get<std::vector<double>>(c, "init_gamma_star");
            }
            cfg.components.push_back(std::move(comp));
        }
    }
    cfg.sigma_eps = get_or<double>(j, "sigma_eps", 0.0);
    cfg.weekend_scale = get_or<double>(j, "weekend_scale", 1.0);
    cfg.holiday_offset = get_or<double>(j, "holiday_offset", 0.0);
    cfg.holidays = get_dates(j, "holidays");
    cfg.seed = get_or<std::uint64_t>(j, "seed", 0);
    if (j.contains("drift")) {
        const auto& d = j.at("drift");
        sim::DriftInjection drift;
        drift.from = get_timestamp(d, "from");
        drift.noise_scale = get_or<double>(d, "noise_scale", 1.0);
        drift.level_shift = get_or<double>(d, "level_shift", 0.0);
        drift.seasonal_scale = get_or<double>(d, "seasonal_scale", 1.0);
        cfg.drift = drift;
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
    return cfg;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
        const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte > 0 ? byte - 1 : 0), '\n'));
        throw ParseError(line, "invalid JSON in '" + path.string() + "'");
    }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out << j.dump(2) << '\n';
}

} // namespace utdd::io
