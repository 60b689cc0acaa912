#pragma once

#include "utdd/core/calendar.hpp"
#include "utdd/core/time_series.hpp"
#include "utdd/simulate/rng.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace utdd::sim {

/// One trigonometric seasonal component of length `s` with p = floor(s/2) harmonics at
/// frequencies 2*pi*j/s. Each harmonic pair (gamma_j, gamma*_j) rotates by its frequency
/// every step and receives N(0, sigma_omega^2) shocks. The top harmonic for even s is
/// kept as a full pair at frequency pi.
struct SeasonalComponentConfig {
    std::size_t s = 2;
    double sigma_omega = 0.0;
    /// Initial harmonic states, length p each; drawn N(0,1) when absent.
    std::optional<std::vector<double>> init_gamma;
    std::optional<std::vector<double>> init_gamma_star;

    std::size_t harmonics() const noexcept { return s / 2; }
    void validate() const;
};

struct Trend {
    double level = 0.0;
    double slope = 0.0;
};

/// Regime change applied to every timestamp at or after `from`.
struct DriftInjection {
    Timestamp from;
    double noise_scale = 1.0;
    double level_shift = 0.0;
    double seasonal_scale = 1.0;
};

struct SimConfig {
    Timestamp start;
    std::chrono::seconds step{3600};
    std::size_t n = 1;
    Trend trend;
    std::vector<SeasonalComponentConfig> components;
    double sigma_eps = 0.0;
    /// Multiplies the seasonal sum on Saturdays and Sundays.
    double weekend_scale = 1.0;
    /// Added on holiday dates.
    double holiday_offset = 0.0;
    std::set<Date> holidays;
    std::uint64_t seed = 0;
    std::optional<DriftInjection> drift;

    void validate() const;
};

/// Running state of one seasonal component.
class SeasonalComponent {
public:
    /// Draws any missing initial states from `rng` (all gamma first, then all gamma*).
    SeasonalComponent(const SeasonalComponentConfig& config, NormalRng& rng);

    /// Current seasonal value: sum of gamma_j.
    double value() const;

    /// One rotation step; per harmonic j ascending draws omega then omega*.
    void advance(NormalRng& rng);

    const std::vector<double>& gamma() const noexcept { return gamma_; }
    const std::vector<double>& gamma_star() const noexcept { return gamma_star_; }

private:
    double sigma_omega_;
    std::vector<double> cos_;
    std::vector<double> sin_;
    std::vector<double> gamma_;
    std::vector<double> gamma_star_;
};

std::vector<double> simulate_component(const SeasonalComponentConfig& config, std::size_t n, NormalRng& rng);

struct SimulationTrace {
    TimeSeries series;
    /// Seasonal sum before weekend scaling.
    std::vector<double> seasonal;
    /// The noise term actually added at each step (after any drift scaling).
    std::vector<double> noise;
};

/// x_t = level + slope*t + w(t) * sum_i gamma_t^(i) + h(t) + eps_t, where w is weekend_scale on
/// weekends (else 1) and h is holiday_offset on holidays (else 0). Per step the RNG is
/// consumed by components in declared order, then eps_t.
SimulationTrace simulate_trace(const SimConfig& config);

TimeSeries simulate_series(const SimConfig& config);

} // namespace utdd::sim
