#include "arcsinc/applications.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "arcsinc/bessel_roots.hpp"
#include "arcsinc/special.hpp"

using namespace arcsinc;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent bisection of sinc(y) = c on (0, pi), written without the
// library's oracle so the comparison crosses implementations.
double bisect_main_lobe(double c) {
    double lo = 1e-12, hi = kPi;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (std::sin(mid) / mid > c)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("main lobe width matches an independent bisection") {
    const FwhmEntry e = fwhm(0);
    const double ref = 2.0 * bisect_main_lobe(1.0 / std::sqrt(2.0));
    CHECK(std::fabs(e.width - ref) <= 1e-10);
    CHECK(std::fabs(e.width - 2.7831147565030203) < 1e-12);
}

TEST_CASE("side lobe widths approach pi/2 from below") {
    const std::vector<FwhmEntry> table = fwhm_table(12);
    CHECK(table.size() == 13);
    double prev_gap = std::numeric_limits<double>::infinity();
    for (const FwhmEntry& e : table) {
        CHECK(e.width > 0.0);
        if (e.m == 0) continue;
        CHECK(e.width < kPi / 2.0);
        const double gap = std::fabs(e.width - kPi / 2.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    // Successive side lobes widen.
    for (std::size_t i = 2; i < table.size(); ++i)
        CHECK(table[i].width > table[i - 1].width);
}

TEST_CASE("half-power ordinates round-trip through sinc^2") {
    for (int m = 0; m <= 6; ++m) {
        const double peak = (m == 0) ? 1.0 : extremum_value(m);
        const double half = peak * peak / 2.0;
        const double xm = peak / std::sqrt(2.0);
        double y_lo, y_hi;
        if (m == 0) {
            const FwhmEntry e = fwhm(0);
            y_hi = e.width / 2.0;
            y_lo = -y_hi;
        } else {
            y_hi = evaluate(m + 1, xm, Method::oracle).value;
            y_lo = evaluate(m, xm, Method::oracle).value;
        }
        const double s_lo = sinc(y_lo), s_hi = sinc(y_hi);
        CHECK(std::fabs(s_lo * s_lo - half) <= 1e-8);
        CHECK(std::fabs(s_hi * s_hi - half) <= 1e-8);
    }
}

TEST_CASE("widths agree across evaluation methods") {
    for (int m : {0, 1, 3}) {
        const double w_oracle = fwhm(m, Method::oracle).width;
        const double w_anger = fwhm(m, Method::series_anger).width;
        const double w_weber = fwhm(m, Method::series_weber).width;
        CHECK(std::fabs(w_anger - w_oracle) <= 2e-8);
        CHECK(std::fabs(w_weber - w_oracle) <= 2e-8);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(fwhm(-1), std::invalid_argument);
    CHECK_THROWS_AS(fwhm_table(-2), std::invalid_argument);
}

TEST_CASE("alternating endpoint series identity") {
    const IdentityReport r = weber_series_identity();
    CHECK(std::string(r.name) == "weber_series_identity");
    CHECK(std::fabs(r.expected - (kPi / 4.0 + 1.0 / kPi)) < 1e-15);
    CHECK(r.abs_error <= 1e-6);
    CHECK(r.work > 1000);
}

TEST_CASE("oscillatory endpoint integral identity") {
    const IdentityReport r = anger_integral_identity();
    CHECK(std::string(r.name) == "anger_integral_identity");
    CHECK(std::fabs(r.expected - kPi / 2.0) < 1e-15);
    CHECK(r.abs_error <= 1e-4);
}
