#include "utdd/core/calendar.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace utdd {

namespace {

int parse_digits(std::string_view text, std::size_t pos, std::size_t count, std::string_view whole) {
    int value = 0;
    const char* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, first + count, value);
    if (ec != std::errc{} || ptr != first + count) {
        throw std::invalid_argument("malformed date/time: '" + std::string(whole) + "'");
    }
    return value;
}

void expect_char(std::string_view text, std::size_t pos, char c) {
    if (text[pos] != c) {
        throw std::invalid_argument("malformed date/time: '" + std::string(text) + "'");
    }
}

Date checked_date(int y, int m, int d, std::string_view whole) {
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                          std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) {
        throw std::invalid_argument("invalid calendar date: '" + std::string(whole) + "'");
    }
    return Date{ymd};
}

} // namespace

Date parse_date(std::string_view text) {
    if (text.size() != 10) {
        throw std::invalid_argument("expected YYYY-MM-DD, got '" + std::string(text) + "'");
    }
    expect_char(text, 4, '-');
    expect_char(text, 7, '-');
    return checked_date(parse_digits(text, 0, 4, text), parse_digits(text, 5, 2, text),
                        parse_digits(text, 8, 2, text), text);
}

Timestamp parse_timestamp(std::string_view text) {
    if (text.size() != 20) {
        throw std::invalid_argument("expected YYYY-MM-DDTHH:MM:SSZ, got '" + std::string(text) + "'");
    }
    expect_char(text, 10, 'T');
    expect_char(text, 13, ':');
    expect_char(text, 16, ':');
    expect_char(text, 19, 'Z');
    const Date date = parse_date(text.substr(0, 10));
    const int hh = parse_digits(text, 11, 2, text);
    const int mm = parse_digits(text, 14, 2, text);
    const int ss = parse_digits(text, 17, 2, text);
    if (hh > 23 || mm > 59 || ss > 59) {
        throw std::invalid_argument("time of day out of range: '" + std::string(text) + "'");
    }
    return Timestamp{date} + std::chrono::hours{hh} + std::chrono::minutes{mm} + std::chrono::seconds{ss};
}

std::string format_date(Date date) {
    const std::chrono::year_month_day ymd{date};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

std::string format_timestamp(Timestamp ts) {
    const Date date = date_of(ts);
    const std::chrono::hh_mm_ss tod{ts - date};
    char buf[16];
    std::snprintf(buf, sizeof buf, "T%02d:%02d:%02dZ", static_cast<int>(tod.hours().count()),
                  static_cast<int>(tod.minutes().count()), static_cast<int>(tod.seconds().count()));
    return format_date(date) + buf;
}

} // namespace utdd
