#include "arcsinc/bessel_roots.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "doctest.h"

using namespace arcsinc;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("residual and bracket for the first hundred roots") {
    for (int n = 1; n <= 100; ++n) {
        const double r = bessel_3_2_zero(n);
        const double residual = std::sin(r) - r * std::cos(r);
        CHECK(std::fabs(residual) <= 1e-12 * (1.0 + r * r));

        const auto [lo, hi] = root_bracket(n);
        CHECK(lo == (static_cast<double>(n) + 0.25) * kPi);
        CHECK(hi == (static_cast<double>(n) + 0.5) * kPi);
        CHECK(r > lo);
        CHECK(r < hi);
    }
}

TEST_CASE("frozen leading roots") {
    CHECK(bessel_3_2_zero(0) == 0.0);
    CHECK(std::fabs(bessel_3_2_zero(1) - 4.49340945790906) < 1e-11);
    CHECK(std::fabs(bessel_3_2_zero(2) - 7.7252518369) < 1e-9);
}

TEST_CASE("extremum values alternate and shrink") {
    CHECK(extremum_value(0) == 1.0);
    CHECK(std::fabs(extremum_value(1) - (-0.21723362821122166)) < 1e-13);

    for (int n = 1; n <= 30; ++n) {
        const double v = extremum_value(n);
        const double r = bessel_3_2_zero(n);
        // Height matches the geometric form 1/sqrt(1 + r^2) with sign (-1)^n.
        CHECK(std::fabs(std::fabs(v) - 1.0 / std::sqrt(1.0 + r * r)) < 1e-14);
        CHECK(((n % 2 == 0) ? v > 0.0 : v < 0.0));
        CHECK(std::fabs(v) < std::fabs(extremum_value(n - 1)));
        // The extremum height equals the function value at the root.
        CHECK(std::fabs(v - std::sin(r) / r) < 1e-13);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(bessel_3_2_zero(-1), std::invalid_argument);
    CHECK_THROWS_AS(root_bracket(0), std::invalid_argument);
    CHECK_THROWS_AS(extremum_value(-2), std::invalid_argument);
}

TEST_CASE("concurrent table growth") {
    std::vector<std::thread> pool;
    std::vector<double> out(4, 0.0);
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([t, &out] {
            double acc = 0.0;
            for (int n = 1; n <= 150; ++n) acc += bessel_3_2_zero(n);
            out[static_cast<std::size_t>(t)] = acc;
        });
    }
    for (auto& th : pool) th.join();
    for (int t = 1; t < 4; ++t) CHECK(out[0] == out[static_cast<std::size_t>(t)]);
}
