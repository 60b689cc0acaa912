#pragma once

#include "utdd/core/calendar.hpp"
#include "utdd/core/time_series.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace utdd {

enum class FeatureKind { hour_of_day, day_of_week, month_of_year, is_weekend, is_holiday, exogenous };

using CategoryCode = std::uint32_t;

std::string_view to_string(FeatureKind kind);
std::optional<FeatureKind> parse_feature_kind(std::string_view name);

/// A categorical feature derived from timestamps (calendar kinds) or supplied
/// alongside the series (exogenous).
///
/// Codes: hour_of_day 0..23; day_of_week 0 = Monday .. 6 = Sunday;
/// month_of_year 0 = January .. 11; is_weekend / is_holiday 0 = no, 1 = yes.
struct FeatureSpec {
    FeatureKind kind = FeatureKind::day_of_week;
    std::uint32_t cardinality = 7;
    /// Only meaningful for exogenous features; identifies the code column.
    std::string name;
    /// Only for is_holiday.
    std::set<Date> holidays;
    /// Only for exogenous; aligned with the series the spec is applied to.
    std::vector<CategoryCode> exogenous_codes;

    static FeatureSpec hour_of_day();
    static FeatureSpec day_of_week();
    static FeatureSpec month_of_year();
    static FeatureSpec is_weekend();
    static FeatureSpec is_holiday(std::set<Date> holidays);
    static FeatureSpec exogenous(std::string name, std::uint32_t cardinality, std::vector<CategoryCode> codes);

    /// Display label: the kind name, or the column name for exogenous features.
    std::string label() const;

    /// Throws std::invalid_argument if cardinality disagrees with kind or exogenous codes are out of range.
    void validate() const;

    /// Exogenous codes with the first `k` entries removed (to follow a k-th difference).
    FeatureSpec drop_front(std::size_t k) const;
};

/// Cardinality implied by a calendar kind; nullopt for exogenous.
std::optional<std::uint32_t> calendar_cardinality(FeatureKind kind);

/// One code per point of `series`.
std::vector<CategoryCode> extract_feature(const TimeSeries& series, const FeatureSpec& spec);

/// day_of_week, hour_of_day, is_holiday, month_of_year.
std::vector<FeatureSpec> default_features(std::set<Date> holidays = {});

} // namespace utdd
