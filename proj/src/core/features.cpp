#include "utdd/core/features.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace utdd {

namespace {

constexpr std::array<std::pair<FeatureKind, std::string_view>, 6> kKindNames{{
    {FeatureKind::hour_of_day, "hour_of_day"},
    {FeatureKind::day_of_week, "day_of_week"},
    {FeatureKind::month_of_year, "month_of_year"},
    {FeatureKind::is_weekend, "is_weekend"},
    {FeatureKind::is_holiday, "is_holiday"},
    {FeatureKind::exogenous, "exogenous"},
}};

// ISO weekday: Monday = 1 .. Sunday = 7
CategoryCode iso_weekday_code(Timestamp ts) {
    return std::chrono::weekday{date_of(ts)}.iso_encoding() - 1;
}

} // namespace

std::string_view to_string(FeatureKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

std::optional<FeatureKind> parse_feature_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::optional<std::uint32_t> calendar_cardinality(FeatureKind kind) {
    switch (kind) {
    case FeatureKind::hour_of_day:
        return 24;
    case FeatureKind::day_of_week:
        return 7;
    case FeatureKind::month_of_year:
        return 12;
    case FeatureKind::is_weekend:
    case FeatureKind::is_holiday:
        return 2;
    case FeatureKind::exogenous:
        break;
    }
    return std::nullopt;
}

FeatureSpec FeatureSpec::hour_of_day() { return {FeatureKind::hour_of_day, 24, {}, {}, {}}; }
FeatureSpec FeatureSpec::day_of_week() { return {FeatureKind::day_of_week, 7, {}, {}, {}}; }
FeatureSpec FeatureSpec::month_of_year() { return {FeatureKind::month_of_year, 12, {}, {}, {}}; }
FeatureSpec FeatureSpec::is_weekend() { return {FeatureKind::is_weekend, 2, {}, {}, {}}; }

FeatureSpec FeatureSpec::is_holiday(std::set<Date> holidays) {
    return {FeatureKind::is_holiday, 2, {}, std::move(holidays), {}};
}

FeatureSpec FeatureSpec::exogenous(std::string name, std::uint32_t cardinality, std::vector<CategoryCode> codes) {
    FeatureSpec spec{FeatureKind::exogenous, cardinality, std::move(name), {}, std::move(codes)};
    spec.validate();
    return spec;
}

std::string FeatureSpec::label() const {
    if (kind == FeatureKind::exogenous && !name.empty()) {
        return name;
    }
    return std::string(to_string(kind));
}

void FeatureSpec::validate() const {
    if (cardinality == 0) {
        throw std::invalid_argument("feature cardinality must be positive");
    }
    if (const auto expected = calendar_cardinality(kind); expected && *expected != cardinality) {
        throw std::invalid_argument("feature " + std::string(to_string(kind)) + " must have cardinality " +
                                    std::to_string(*expected));
    }
    if (kind == FeatureKind::exogenous) {
        const auto bad = std::find_if(exogenous_codes.begin(), exogenous_codes.end(),
                                      [this](CategoryCode c) { return c >= cardinality; });
        if (bad != exogenous_codes.end()) {
            throw std::invalid_argument("exogenous feature '" + name + "' has code " + std::to_string(*bad) +
                                        " outside [0, " + std::to_string(cardinality) + ")");
        }
    }
}

FeatureSpec FeatureSpec::drop_front(std::size_t k) const {
    FeatureSpec out = *this;
    if (kind == FeatureKind::exogenous) {
        if (k > exogenous_codes.size()) {
            throw std::invalid_argument("cannot drop more exogenous codes than are present");
        }
        out.exogenous_codes.erase(out.exogenous_codes.begin(),
                                  out.exogenous_codes.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return out;
}

std::vector<CategoryCode> extract_feature(const TimeSeries& series, const FeatureSpec& spec) {
    spec.validate();
    const std::size_t n = series.size();
    if (spec.kind == FeatureKind::exogenous) {
        if (spec.exogenous_codes.size() != n) {
            throw std::invalid_argument("exogenous feature '" + spec.name + "' has " +
                                        std::to_string(spec.exogenous_codes.size()) + " codes for a series of " +
                                        std::to_string(n) + " points");
        }
        return spec.exogenous_codes;
    }

    std::vector<CategoryCode> codes(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Timestamp ts = series.time_at(i);
        switch (spec.kind) {
        case FeatureKind::hour_of_day:
            codes[i] = static_cast<CategoryCode>(std::chrono::floor<std::chrono::hours>(ts - date_of(ts)).count());
            break;
        case FeatureKind::day_of_week:
            codes[i] = iso_weekday_code(ts);
            break;
        case FeatureKind::month_of_year:
            codes[i] = static_cast<unsigned>(std::chrono::year_month_day{date_of(ts)}.month()) - 1;
            break;
        case FeatureKind::is_weekend:
            codes[i] = iso_weekday_code(ts) >= 5 ? 1 : 0;
            break;
        case FeatureKind::is_holiday:
            codes[i] = spec.holidays.contains(date_of(ts)) ? 1 : 0;
            break;
        case FeatureKind::exogenous:
            break;
        }
    }
    return codes;
}

std::vector<FeatureSpec> default_features(std::set<Date> holidays) {
    return {FeatureSpec::day_of_week(), FeatureSpec::hour_of_day(), FeatureSpec::is_holiday(std::move(holidays)),
            FeatureSpec::month_of_year()};
}

} // namespace utdd
