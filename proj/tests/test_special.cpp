#include "arcsinc/special.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"

using namespace arcsinc;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent slow reference: composite Simpson with a fixed fine grid.
// Deliberately avoids the library's quadrature module so the comparison
// crosses implementations, not just tolerances.
std::complex<double> simpson_reference(double nu, double phi, double x) {
    const int n = 20000;  // even
    const double h = phi / n;
    auto f = [&](double t) {
        return std::exp(std::complex<double>(0.0, x * std::sin(t) - nu * t));
    };
    std::complex<double> acc = f(0.0) + f(phi);
    for (int i = 1; i < n; ++i) acc += f(i * h) * ((i % 2) ? 4.0 : 2.0);
    return acc * (h / 3.0) / kPi;
}

}  // namespace

TEST_CASE("sinc basics") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(std::fabs(sinc(kPi)) < 1e-15);
    CHECK(sinc(2.0) == std::sin(2.0) / 2.0);
    CHECK(sinc(-3.7) == sinc(3.7));  // even function

    // Taylor/ratio crossover: both sides of the switch agree with the limit
    // expansion to machine precision.
    for (double z : {1e-3, 9.9e-3, 1.01e-2, 2e-2}) {
        const double z2 = z * z;
        const double ref =
            1.0 - z2 / 6.0 + z2 * z2 / 120.0 - z2 * z2 * z2 / 5040.0;
        CHECK(std::fabs(sinc(z) - ref) < 1e-15);
    }
}

TEST_CASE("phase transform agrees with an independent reference") {
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> unu(-10.0, 10.0);
    std::uniform_real_distribution<double> uphi(0.05, kPi);
    std::uniform_real_distribution<double> ux(-10.0, 10.0);
    for (int i = 0; i < 40; ++i) {
        const double nu = unu(rng);
        const double phi = uphi(rng);
        const double x = ux(rng);
        const PhaseTransform got = phase_transform(nu, phi, x);
        const std::complex<double> ref = simpson_reference(nu, phi, x);
        CHECK(std::abs(got.value - ref) < 1e-10);
        CHECK(std::abs(got.value) <= phi / kPi + 1e-12);
    }
}

TEST_CASE("full-interval cosine transform reduces to the cylinder function") {
    // For integer order the full cosine phase integral equals J_n.
    for (int n = 0; n <= 5; ++n) {
        for (double x : {0.5, 1.0, 2.5, 7.0}) {
            const SpecialValue a = anger(static_cast<double>(n), x);
            const double ref = std::cyl_bessel_j(static_cast<double>(n), x);
            CHECK(std::fabs(a.value - ref) < 1e-12);
        }
    }
}

TEST_CASE("degenerate arguments") {
    // nu = x = 0: the integrand is 1, so the value is phi/pi exactly.
    const PhaseTransform p = phase_transform(0.0, kPi, 0.0);
    CHECK(std::fabs(p.value.real() - 1.0) < 1e-14);
    CHECK(std::fabs(p.value.imag()) < 1e-14);

    const SpecialValue a = incomplete_anger(0.0, 1.0, 0.0);
    CHECK(std::fabs(a.value - 1.0 / kPi) < 1e-14);
    const SpecialValue w = incomplete_weber(0.0, 1.0, 0.0);
    CHECK(std::fabs(w.value) < 1e-14);

    CHECK_THROWS_AS(phase_transform(1.0, -0.5, 1.0), std::invalid_argument);
}

TEST_CASE("order parity: negating order and argument together") {
    for (double nu : {0.7, 2.3, 5.5}) {
        for (double x : {0.4, 1.9, 8.2}) {
            const SpecialValue a1 = incomplete_anger(nu, 2.0, x);
            const SpecialValue a2 = incomplete_anger(-nu, 2.0, -x);
            CHECK(std::fabs(a1.value - a2.value) < 1e-12);
        }
    }
}

TEST_CASE("three-term recurrences across random parameter triples") {
    // cos-integral: F(nu+1) + F(nu-1) = (2*nu/x)*F(nu)
    //                                  + (2/(pi*x))*sin(x*sin(phi) - nu*phi)
    // sin-integral: G(nu+1) + G(nu-1) = (2*nu/x)*G(nu)
    //                                  + (2/(pi*x))*(cos(x*sin(phi) - nu*phi) - 1)
    std::mt19937 rng(424243u);
    std::uniform_real_distribution<double> unu(-10.0, 10.0);
    std::uniform_real_distribution<double> uphi(0.05, kPi);
    std::uniform_real_distribution<double> uxm(0.3, 10.0);
    std::bernoulli_distribution flip(0.5);

    for (int i = 0; i < 500; ++i) {
        const double nu = unu(rng);
        const double phi = uphi(rng);
        const double x = (flip(rng) ? 1.0 : -1.0) * uxm(rng);

        const SpecialValue ap = incomplete_anger(nu + 1.0, phi, x);
        const SpecialValue am = incomplete_anger(nu - 1.0, phi, x);
        const SpecialValue a0 = incomplete_anger(nu, phi, x);
        const double a_rhs = 2.0 * nu / x * a0.value +
                             2.0 / (kPi * x) * std::sin(x * std::sin(phi) - nu * phi);
        const double a_budget =
            10.0 * (ap.err_estimate + am.err_estimate +
                    std::fabs(2.0 * nu / x) * a0.err_estimate) +
            1e-12;
        CHECK(std::fabs(ap.value + am.value - a_rhs) <= a_budget);

        const SpecialValue wp = incomplete_weber(nu + 1.0, phi, x);
        const SpecialValue wm = incomplete_weber(nu - 1.0, phi, x);
        const SpecialValue w0 = incomplete_weber(nu, phi, x);
        const double w_rhs =
            2.0 * nu / x * w0.value +
            2.0 / (kPi * x) * (std::cos(x * std::sin(phi) - nu * phi) - 1.0);
        const double w_budget =
            10.0 * (wp.err_estimate + wm.err_estimate +
                    std::fabs(2.0 * nu / x) * w0.err_estimate) +
            1e-12;
        CHECK(std::fabs(wp.value + wm.value - w_rhs) <= w_budget);
    }
}
