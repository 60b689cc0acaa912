#include "utdd/simulate/simulate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace utdd::sim {

namespace {

std::vector<double> initial_states(const std::optional<std::vector<double>>& given, std::size_t p, NormalRng& rng) {
    if (given) {
        return *given;
    }
    std::vector<double> out(p);
    for (auto& v : out) {
        v = rng.normal();
    }
    return out;
}

bool is_weekend(Timestamp ts) {
    return std::chrono::weekday{date_of(ts)}.iso_encoding() >= 6;
}

} // namespace

void SeasonalComponentConfig::validate() const {
    if (s < 2) {
        throw std::invalid_argument("seasonal length must be at least 2, got " + std::to_string(s));
    }
    if (!(sigma_omega >= 0.0) || !std::isfinite(sigma_omega)) {
        throw std::invalid_argument("sigma_omega must be finite and non-negative");
    }
    const std::size_t p = harmonics();
    if (init_gamma && init_gamma->size() != p) {
        throw std::invalid_argument("init_gamma must have " + std::to_string(p) + " entries for s = " +
                                    std::to_string(s));
    }
    if (init_gamma_star && init_gamma_star->size() != p) {
        throw std::invalid_argument("init_gamma_star must have " + std::to_string(p) + " entries for s = " +
                                    std::to_string(s));
    }
}

void SimConfig::validate() const {
    if (n < 1) {
        throw std::invalid_argument("simulation length must be at least 1");
    }
    if (step.count() <= 0) {
        throw std::invalid_argument("simulation step must be positive");
    }
    if (!(sigma_eps >= 0.0) || !std::isfinite(sigma_eps)) {
        throw std::invalid_argument("sigma_eps must be finite and non-negative");
    }
    for (const auto& c : components) {
        c.validate();
    }
    if (drift && !(drift->noise_scale >= 0.0)) {
        throw std::invalid_argument("drift noise_scale must be non-negative");
    }
}

SeasonalComponent::SeasonalComponent(const SeasonalComponentConfig& config, NormalRng& rng)
    : sigma_omega_(config.sigma_omega) {
    config.validate();
    const std::size_t p = config.harmonics();
    gamma_ = initial_states(config.init_gamma, p, rng);
    gamma_star_ = initial_states(config.init_gamma_star, p, rng);
    cos_.resize(p);
    sin_.resize(p);
    for (std::size_t j = 1; j <= p; ++j) {
        const double lambda = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(config.s);
        cos_[j - 1] = std::cos(lambda);
        sin_[j - 1] = std::sin(lambda);
    }
}

double SeasonalComponent::value() const {
    double sum = 0.0;
    for (double g : gamma_) {
        sum += g;
    }
    return sum;
}

void SeasonalComponent::advance(NormalRng& rng) {
    for (std::size_t j = 0; j < gamma_.size(); ++j) {
        const double omega = sigma_omega_ * rng.normal();
        const double omega_star = sigma_omega_ * rng.normal();
        const double g = gamma_[j];
        const double gs = gamma_star_[j];
        gamma_[j] = g * cos_[j] + gs * sin_[j] + omega;
        gamma_star_[j] = -g * sin_[j] + gs * cos_[j] + omega_star;
    }
}

std::vector<double> simulate_component(const SeasonalComponentConfig& config, std::size_t n, NormalRng& rng) {
    SeasonalComponent component(config, rng);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        out.push_back(component.value());
        component.advance(rng);
    }
    return out;
}

SimulationTrace simulate_trace(const SimConfig& config) {
    config.validate();
    NormalRng rng(config.seed);
    std::vector<SeasonalComponent> components;
    components.reserve(config.components.size());
    for (const auto& c : config.components) {
        components.emplace_back(c, rng);
    }

    std::vector<double> values(config.n);
    std::vector<double> seasonal(config.n);
    std::vector<double> noise(config.n);
    for (std::size_t t = 0; t < config.n; ++t) {
        const Timestamp ts = config.start + static_cast<long long>(t) * config.step;
        double season = 0.0;
        for (auto& c : components) {
            season += c.value();
            c.advance(rng);
        }
        double eps = config.sigma_eps * rng.normal();

        double level = config.trend.level + config.trend.slope * static_cast<double>(t);
        double season_scale = is_weekend(ts) ? config.weekend_scale : 1.0;
        if (config.drift && ts >= config.drift->from) {
            level += config.drift->level_shift;
            season_scale *= config.drift->seasonal_scale;
            eps *= config.drift->noise_scale;
        }
        const double holiday = config.holidays.contains(date_of(ts)) ? config.holiday_offset : 0.0;

        seasonal[t] = season;
        noise[t] = eps;
        values[t] = level + season_scale * season + holiday + eps;
    }
    return {TimeSeries(config.start, config.step, std::move(values)), std::move(seasonal), std::move(noise)};
}

TimeSeries simulate_series(const SimConfig& config) {
    return simulate_trace(config).series;
}

} // namespace utdd::sim
