#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace utdd {

using Timestamp = std::chrono::sys_seconds;
using Date = std::chrono::sys_days;

/// Parses `YYYY-MM-DDTHH:MM:SSZ` (UTC only). Throws std::invalid_argument.
Timestamp parse_timestamp(std::string_view text);

/// Parses `YYYY-MM-DD`. Throws std::invalid_argument.
Date parse_date(std::string_view text);

std::string format_timestamp(Timestamp ts);
std::string format_date(Date date);

inline Date date_of(Timestamp ts) {
    return std::chrono::floor<std::chrono::days>(ts);
}

} // namespace utdd
