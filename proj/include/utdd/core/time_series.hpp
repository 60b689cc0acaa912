#pragma once

#include "utdd/core/calendar.hpp"

#include <chrono>
#include <cstddef>
#include <span>
#include <vector>

namespace utdd {

/// Uniformly spaced, timestamped real-valued sequence. Timestamps are implicit:
/// point n sits at start + n * step. Immutable after construction.
class TimeSeries {
public:
    /// Throws std::invalid_argument if step <= 0, values is empty, or any value is non-finite.
    TimeSeries(Timestamp start, std::chrono::seconds step, std::vector<double> values);

    Timestamp start() const noexcept { return start_; }
    std::chrono::seconds step() const noexcept { return step_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    Timestamp time_at(std::size_t i) const { return start_ + static_cast<long long>(i) * step_; }
    /// One past the last timestamp, i.e. time_at(size()).
    Timestamp end() const { return time_at(values_.size()); }

    /// Points with timestamps in [from, to). Throws std::invalid_argument when
    /// from >= to or the range selects no points.
    TimeSeries window(Timestamp from, Timestamp to) const;

    /// Same grid, new values (length must match).
    TimeSeries with_values(std::vector<double> values) const;

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    Timestamp start_;
    std::chrono::seconds step_;
    std::vector<double> values_;
};

/// k-th order forward difference of a plain sequence. Requires k < values.size().
std::vector<double> diff(std::span<const double> values, std::size_t k);

/// k-th order difference; the result starts k steps later. Throws std::invalid_argument if k >= size.
TimeSeries diff(const TimeSeries& series, std::size_t k);

} // namespace utdd
