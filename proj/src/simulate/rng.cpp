#include "utdd/simulate/rng.hpp"

#include <cmath>
#include <numbers>

namespace utdd::sim {

double NormalRng::normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace utdd::sim
