#include "utdd/core/time_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace utdd {

TimeSeries::TimeSeries(Timestamp start, std::chrono::seconds step, std::vector<double> values)
    : start_(start), step_(step), values_(std::move(values)) {
    if (step_.count() <= 0) {
        throw std::invalid_argument("time series step must be positive");
    }
    if (values_.empty()) {
        throw std::invalid_argument("time series must hold at least one value");
    }
    const auto bad = std::find_if(values_.begin(), values_.end(), [](double v) { return !std::isfinite(v); });
    if (bad != values_.end()) {
        throw std::invalid_argument("time series value at index " + std::to_string(bad - values_.begin()) +
                                    " is not finite");
    }
}

TimeSeries TimeSeries::window(Timestamp from, Timestamp to) const {
    if (from >= to) {
        throw std::invalid_argument("window start must precede window end");
    }
    // first index with time_at(i) >= bound
    const auto first_at_or_after = [this](Timestamp bound) -> std::size_t {
        if (bound <= start_) {
            return 0;
        }
        const auto offset = (bound - start_).count();
        const auto step = step_.count();
        const auto idx = static_cast<std::size_t>((offset + step - 1) / step);
        return std::min(idx, values_.size());
    };
    const std::size_t lo = first_at_or_after(from);
    const std::size_t hi = first_at_or_after(to);
    if (lo >= hi) {
        throw std::invalid_argument("window [" + format_timestamp(from) + ", " + format_timestamp(to) +
                                    ") contains no points of the series");
    }
    return TimeSeries(time_at(lo), step_, std::vector<double>(values_.begin() + static_cast<std::ptrdiff_t>(lo),
                                                              values_.begin() + static_cast<std::ptrdiff_t>(hi)));
}

TimeSeries TimeSeries::with_values(std::vector<double> values) const {
    if (values.size() != values_.size()) {
        throw std::invalid_argument("replacement values must match the series length");
    }
    return TimeSeries(start_, step_, std::move(values));
}

std::vector<double> diff(std::span<const double> values, std::size_t k) {
    if (k >= values.size()) {
        throw std::invalid_argument("difference order " + std::to_string(k) + " must be below series length " +
                                    std::to_string(values.size()));
    }
    std::vector<double> out(values.begin(), values.end());
    for (std::size_t order = 0; order < k; ++order) {
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
            out[i] = out[i + 1] - out[i];
        }
        out.pop_back();
    }
    return out;
}

TimeSeries diff(const TimeSeries& series, std::size_t k) {
    auto values = diff(series.values(), k);
    return TimeSeries(series.time_at(k), series.step(), std::move(values));
}

} // namespace utdd
