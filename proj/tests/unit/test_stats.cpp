#include "catch_amalgamated.hpp"

#include "test_support.hpp"
#include "utdd/core/stats.hpp"

using namespace utdd;

TEST_CASE("residual stats of a constant sequence", "[stats]") {
    const std::vector<double> v{1, 1, 1, 1};
    const auto s = residual_stats(v);
    REQUIRE(s.mean == 1.0);
    REQUIRE(s.std == 0.0);
    REQUIRE(s.n == 4);
}

TEST_CASE("residual stats use the population standard deviation", "[stats]") {
    const std::vector<double> v{0, 2};
    const auto s = residual_stats(v);
    REQUIRE(s.mean == 1.0);
    REQUIRE(s.std == 1.0);
}

TEST_CASE("residual stats need two values", "[stats]") {
    REQUIRE_THROWS_AS(residual_stats(std::vector<double>{3.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(residual_stats(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("Monte Carlo moments of N(3, 2^2)", "[stats]") {
    const auto draws = utdd::testing::gaussian(10000, 20201031, 3.0, 2.0);
    const auto s = residual_stats(draws);
    REQUIRE(std::abs(s.mean - 3.0) < 0.1);
    REQUIRE(std::abs(s.std - 2.0) < 0.1);
}

TEST_CASE("centering yields zero mean", "[stats][property]") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto v = utdd::testing::gaussian(100 + seed, seed, 1e3 * static_cast<double>(seed), 5.0);
        const double m = mean(v);
        double scale = 0.0;
        for (auto& x : v) {
            scale = std::max(scale, std::abs(x));
            x -= m;
        }
        REQUIRE(std::abs(residual_stats(v).mean) <= 1e-12 * std::max(1.0, scale));
    }
}
