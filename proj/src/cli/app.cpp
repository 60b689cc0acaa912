#include "utdd/cli/app.hpp"

#include "utdd/core/errors.hpp"
#include "utdd/core/features.hpp"
#include "utdd/drift/drift.hpp"
#include "utdd/embeddings/boosted.hpp"
#include "utdd/io/csv.hpp"
#include "utdd/io/json_io.hpp"
#include "utdd/simulate/simulate.hpp"
#include "utdd/stationarity/adf.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace utdd::cli {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kMinWindowPoints = 30;

struct FeatureOptions {
    std::string features = "day_of_week,hour_of_day,is_holiday,month_of_year";
    std::vector<std::string> holidays;
};

struct SimulateOptions {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
};

struct FitOptions {
    std::string input;
    std::string from;
    std::string to;
    FeatureOptions features;
    std::optional<double> epsilon;
    std::size_t max_diff = 4;
    std::string model_out;
};

struct DetectOptions {
    std::string input;
    std::string ref_from;
    std::string ref_to;
    std::string cur_from;
    std::string cur_to;
    FeatureOptions features;
    std::optional<double> epsilon;
    std::size_t max_diff = 4;
    double threshold = drift::kDefaultThreshold;
    bool reuse_model = false;
    std::string report_out;
    std::string plots_dir;
};

struct ReportOptions {
    std::string report;
};

void add_feature_options(CLI::App& cmd, FeatureOptions& opts) {
    cmd.add_option("--features", opts.features, "Comma-separated feature kinds, fitted in order")
        ->capture_default_str();
    cmd.add_option("--holidays", opts.holidays, "Holiday dates (YYYY-MM-DD) for is_holiday")->delimiter(',');
}

std::vector<FeatureSpec> build_features(const FeatureOptions& opts) {
    std::set<Date> holidays;
    for (const auto& h : opts.holidays) {
        holidays.insert(parse_date(h));
    }
    std::vector<FeatureSpec> out;
    std::stringstream ss(opts.features);
    std::string name;
    while (std::getline(ss, name, ',')) {
        const auto kind = parse_feature_kind(name);
        if (!kind) {
            throw std::invalid_argument("unknown feature '" + name + "'");
        }
        switch (*kind) {
        case FeatureKind::hour_of_day:
            out.push_back(FeatureSpec::hour_of_day());
            break;
        case FeatureKind::day_of_week:
            out.push_back(FeatureSpec::day_of_week());
            break;
        case FeatureKind::month_of_year:
            out.push_back(FeatureSpec::month_of_year());
            break;
        case FeatureKind::is_weekend:
            out.push_back(FeatureSpec::is_weekend());
            break;
        case FeatureKind::is_holiday:
            out.push_back(FeatureSpec::is_holiday(holidays));
            break;
        case FeatureKind::exogenous:
            throw std::invalid_argument("exogenous features need code columns and are library-only");
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("feature list is empty");
    }
    return out;
}

TimeSeries load_window(const TimeSeries& series, const std::string& from, const std::string& to, const char* what) {
    const Timestamp lo = parse_timestamp(from);
    const Timestamp hi = parse_timestamp(to);
    if (lo >= hi) {
        throw std::invalid_argument(std::string(what) + " window: --from must precede --to");
    }
    TimeSeries window = series.window(lo, hi);
    if (window.size() < kMinWindowPoints) {
        throw std::invalid_argument(std::string(what) + " window holds " + std::to_string(window.size()) +
                                    " points; at least 30 are required");
    }
    return window;
}

int cmd_simulate(const SimulateOptions& opts, std::ostream& out) {
    sim::SimConfig cfg;
    try {
        cfg = io::sim_config_from_json(io::read_json_file(opts.config));
    } catch (const ParseError& e) {
        throw ParseError(e.line(), opts.config + ": " + e.what());
    }
    if (const char* env = std::getenv("UTDD_SEED"); env != nullptr && *env != '\0') {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("UTDD_SEED is not an unsigned integer: '") + env + "'");
        }
    }
    if (opts.seed) {
        cfg.seed = *opts.seed;
    }
    const TimeSeries series = sim::simulate_series(cfg);
    io::write_series_csv(fs::path(opts.out), series);
    out << "n: " << series.size() << '\n'
        << "range: " << format_timestamp(series.start()) << " .. "
        << format_timestamp(series.time_at(series.size() - 1)) << '\n'
        << "seed: " << cfg.seed << '\n';
    return kExitOk;
}

int cmd_fit(const FitOptions& opts, std::ostream& out, std::ostream& err) {
    const auto features = build_features(opts.features);
    const TimeSeries series = io::read_series_csv(fs::path(opts.input));
    const TimeSeries window = load_window(series, opts.from, opts.to, "fit");

    io::ModelDocument doc;
    doc.differencing = stationarity::ndiffs(window, opts.max_diff);
    doc.model = embeddings::boosted_fit(window, features, opts.epsilon, doc.differencing->k);
    io::write_json_file(opts.model_out, io::to_json(doc));

    const auto& m = doc.model;
    out << "k_diffs: " << m.k_diffs << '\n' << "epsilon: " << io::format_double(m.epsilon) << '\n';
    out << "stages: " << m.stages.size() << '\n';
    for (std::size_t i = 0; i < m.stages.size(); ++i) {
        out << "  [" << i << "] " << m.stages[i].feature.label()
            << " sse_reduction=" << io::format_double(m.stages[i].sse_reduction) << '\n';
    }
    out << "ref_stats: mean=" << io::format_double(m.ref_stats.mean) << " std=" << io::format_double(m.ref_stats.std)
        << " n=" << m.ref_stats.n << '\n';
    if (m.stages.empty()) {
        err << "warning: no embedding stage exceeded epsilon; the model is empty\n";
    }
    if (m.degenerate) {
        err << "warning: training residual has zero variance; the model cannot score drift\n";
    }
    return kExitOk;
}

void write_window_plots(const fs::path& dir, const std::string& stem, const char* tag,
                        const drift::WindowDecomposition& w) {
    const auto& grid = w.observed;
    io::write_csv_table(dir / (stem + "_" + tag + "_fit.csv"), grid.start(), grid.step(),
                        {"observed", "seasonal", "residual"},
                        {std::vector<double>(grid.values().begin(), grid.values().end()), w.seasonal, w.residual});
    io::write_csv_table(dir / (stem + "_" + tag + "_residual.csv"), grid.start(), grid.step(), {"residual"},
                        {w.residual});
}

int cmd_detect(const DetectOptions& opts, std::ostream& out) {
    const auto features = build_features(opts.features);
    const TimeSeries series = io::read_series_csv(fs::path(opts.input));
    const TimeSeries reference = load_window(series, opts.ref_from, opts.ref_to, "reference");
    const TimeSeries current = load_window(series, opts.cur_from, opts.cur_to, "current");

    drift::DriftConfig config;
    config.epsilon = opts.epsilon;
    config.max_diff = opts.max_diff;
    config.threshold = opts.threshold;
    config.reuse_model = opts.reuse_model;
    const auto analysis = drift::analyze(reference, current, features, config);

    const fs::path report_path(opts.report_out);
    io::write_json_file(report_path, io::to_json(analysis.report));
    const fs::path plots = opts.plots_dir.empty() ? report_path.parent_path() : fs::path(opts.plots_dir);
    if (!plots.empty()) {
        fs::create_directories(plots);
    }
    const std::string stem = report_path.stem().string();
    write_window_plots(plots, stem, "ref", analysis.reference);
    write_window_plots(plots, stem, "cur", analysis.current);

    const auto& r = analysis.report;
    out << "k_diffs: " << r.differencing.k << '\n'
        << "z_ref: " << io::format_double(r.z_ref) << '\n'
        << "z_curr: " << io::format_double(r.z_curr) << '\n'
        << "delta: " << io::format_double(r.delta) << " (threshold " << io::format_double(r.threshold) << ")\n"
        << "verdict: " << (r.drifted ? "DRIFT" : "no drift") << '\n';
    return r.drifted ? kExitDrift : kExitOk;
}

int cmd_report(const ReportOptions& opts, std::ostream& out) {
    const auto r = io::report_from_json(io::read_json_file(opts.report));
    out << std::fixed << std::setprecision(6);
    out << "Drift report\n"
        << "  differencing order : " << r.differencing.k << '\n';
    for (std::size_t i = 0; i < r.differencing.trail.size(); ++i) {
        const auto& adf = r.differencing.trail[i];
        out << "    ADF level " << i << "        : stat " << adf.statistic << " (lags " << adf.lags_used << ") "
            << (adf.stationary ? "stationary" : "unit root") << '\n';
    }
    out << "  scoring mode       : " << (r.reuse_model ? "reference model reused" : "independent fits") << '\n'
        << "  z reference        : " << r.z_ref << '\n'
        << "  z current          : " << r.z_curr << '\n'
        << "  delta / threshold  : " << r.delta << " / " << r.threshold << '\n'
        << "  current residuals  : " << r.residual_curr.size() << " from " << format_timestamp(r.residual_curr_start)
        << '\n'
        << "  verdict            : " << (r.drifted ? "DRIFT" : "no drift") << '\n';
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unsupervised temporal drift detection for seasonal time series", "utdd"};
    app.require_subcommand(1);

    SimulateOptions sim_opts;
    auto* simulate = app.add_subcommand("simulate", "Generate a synthetic seasonal series from a JSON config");
    simulate->add_option("--config", sim_opts.config, "Simulation config (JSON)")->required();
    simulate->add_option("--out", sim_opts.out, "Output CSV path")->required();
    simulate->add_option("--seed", sim_opts.seed, "Override the config seed");

    FitOptions fit_opts;
    auto* fit = app.add_subcommand("fit", "Fit the differencing order and boosted seasonal model on a window");
    fit->add_option("--input", fit_opts.input, "Input CSV (timestamp,value)")->required();
    fit->add_option("--from", fit_opts.from, "Window start (inclusive, ISO-8601 UTC)")->required();
    fit->add_option("--to", fit_opts.to, "Window end (exclusive, ISO-8601 UTC)")->required();
    add_feature_options(*fit, fit_opts.features);
    fit->add_option("--epsilon", fit_opts.epsilon, "Absolute boosting tolerance (default: 1e-3 x std)");
    fit->add_option("--max-diff", fit_opts.max_diff, "Maximum differencing order")->capture_default_str();
    fit->add_option("--model-out", fit_opts.model_out, "Model JSON output path")->required();

    DetectOptions det_opts;
    auto* det = app.add_subcommand("detect", "Compare a reference and a current window for drift");
    det->add_option("--input", det_opts.input, "Input CSV (timestamp,value)")->required();
    det->add_option("--ref-from", det_opts.ref_from, "Reference window start")->required();
    det->add_option("--ref-to", det_opts.ref_to, "Reference window end (exclusive)")->required();
    det->add_option("--cur-from", det_opts.cur_from, "Current window start")->required();
    det->add_option("--cur-to", det_opts.cur_to, "Current window end (exclusive)")->required();
    add_feature_options(*det, det_opts.features);
    det->add_option("--epsilon", det_opts.epsilon, "Absolute boosting tolerance (default: 1e-3 x std)");
    det->add_option("--max-diff", det_opts.max_diff, "Maximum differencing order")->capture_default_str();
    det->add_option("--threshold", det_opts.threshold, "Drift threshold on |z_curr - z_ref|")
        ->capture_default_str();
    det->add_flag("--reuse-model", det_opts.reuse_model, "Score the current window under the reference model");
    det->add_option("--report-out", det_opts.report_out, "Drift report JSON output path")->required();
    det->add_option("--plots-dir", det_opts.plots_dir, "Directory for plot CSVs (default: next to the report)");

    ReportOptions rep_opts;
    auto* report = app.add_subcommand("report", "Pretty-print a drift report");
    report->add_option("--report", rep_opts.report, "Drift report JSON")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }

    try {
        if (*simulate) {
            return cmd_simulate(sim_opts, out);
        }
        if (*fit) {
            return cmd_fit(fit_opts, out, err);
        }
        if (*det) {
            return cmd_detect(det_opts, out);
        }
        return cmd_report(rep_opts, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

} // namespace utdd::cli
