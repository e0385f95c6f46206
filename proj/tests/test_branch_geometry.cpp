#include "arcsinc/branch_geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "arcsinc/bessel_roots.hpp"

using namespace arcsinc;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("branch domains for the first few indices") {
    const BranchDomain d1 = branch_domain(1);
    CHECK(d1.j2 == 0.0);
    CHECK(d1.x2 == 1.0);
    CHECK(std::fabs(d1.j1 - 4.49340945790906) < 1e-11);
    CHECK(std::fabs(d1.x1 - (-0.21723362821122166)) < 1e-13);
    CHECK(std::fabs(d1.T1 - 1.3518168043) < 1e-9);
    CHECK(std::fabs(d1.T2 - kPi) < 1e-15);

    const BranchDomain d2 = branch_domain(2);
    CHECK(std::fabs(d2.j1 - 4.49340945790906) < 1e-11);
    CHECK(std::fabs(d2.j2 - 7.7252518369) < 1e-9);
    CHECK(d2.x1 < 0.0);
    CHECK(d2.x2 > 0.0);
    CHECK(d2.x2 < 1.0);

    // Negative index mirrors the magnitude-|k| domain.
    const BranchDomain dm2 = branch_domain(-2);
    CHECK(dm2.j1 == d2.j1);
    CHECK(dm2.x1 == d2.x1);
    CHECK(dm2.k == -2);

    CHECK_THROWS_AS(branch_domain(0), std::invalid_argument);
}

TEST_CASE("half-period closed forms") {
    CHECK(std::fabs(half_period_l(1, 0.0) - 1.0) < 1e-15);
    CHECK(std::fabs(half_period_l(5, 0.0) - 1.0) < 1e-15);
    CHECK(std::fabs(half_period_l(1, 1.0) - kPi) < 1e-15);

    // At a branch endpoint the half-period collapses onto |pi*k*x|.
    const BranchDomain d1 = branch_domain(1);
    CHECK(std::fabs(half_period_l(1, d1.x1) - kPi * std::fabs(d1.x1)) < 1e-14);
    CHECK(std::fabs(half_period_l(1, d1.x1) - 0.6824595705) < 1e-9);

    CHECK_THROWS_AS(half_period_l(1, 1.5), std::domain_error);
}

TEST_CASE("slack positivity and endpoint collapse across branches") {
    for (int a = 1; a <= 8; ++a) {
        for (int sgn : {1, -1}) {
            const int k = sgn * a;
            const BranchDomain dom = branch_domain(k);
            CHECK(std::fabs(phase_slack(k, dom.x1)) <= 1e-10);
            CHECK(std::fabs(phase_slack(k, dom.x2)) <= 1e-10);
            for (int i = 1; i < 1000; ++i) {
                const double t = static_cast<double>(i) / 1000.0;
                const double x = dom.x1 + t * (dom.x2 - dom.x1);
                CHECK(phase_slack(k, x) > 0.0);
            }
        }
    }
    // Slack at the center equals l(0) - 0 = 1 for every branch.
    CHECK(std::fabs(phase_slack(3, 0.0) - 1.0) < 1e-15);
}

TEST_CASE("slack is unimodal: increasing below zero, decreasing above") {
    for (int k : {1, 2, 3, 5, 8}) {
        const BranchDomain dom = branch_domain(k);
        const int n = 400;
        double prev = phase_slack(k, dom.x1);
        for (int i = 1; i <= n; ++i) {
            const double x = dom.x1 + (0.0 - dom.x1) * i / n;
            const double s = phase_slack(k, x);
            CHECK(s >= prev);
            prev = s;
        }
        prev = phase_slack(k, 0.0);
        for (int i = 1; i <= n; ++i) {
            const double x = 0.0 + (dom.x2 - 0.0) * i / n;
            const double s = phase_slack(k, x);
            CHECK(s <= prev);
            prev = s;
        }
    }
}

TEST_CASE("endpoint angle identity") {
    // T at an endpoint equals s*(j - pi*|k|)*sign(cos j) with s = (-1)^|k|
    // (sign(cos 0) taken as +1 for the degenerate upper corner of branch 1).
    for (int a = 1; a <= 8; ++a) {
        const BranchDomain dom = branch_domain(a);
        const double s = (a % 2 == 0) ? 1.0 : -1.0;
        const double c1 = std::cos(dom.j1);
        const double sign1 = (c1 >= 0.0) ? 1.0 : -1.0;
        CHECK(std::fabs(dom.T1 - s * (dom.j1 - kPi * a) * sign1) < 1e-12);
        const double c2 = std::cos(dom.j2);
        const double sign2 = (c2 >= 0.0) ? 1.0 : -1.0;
        CHECK(std::fabs(dom.T2 - s * (dom.j2 - kPi * a) * sign2) < 1e-12);
    }
}

TEST_CASE("endpoint phase window: bounded and monotone") {
    // U(t) = sin t - s*x*.t rises monotonically from 0 at t = 0 to
    // |pi*k*x*| at t = T, staying strictly inside the band in between.
    for (int a = 1; a <= 8; ++a) {
        const BranchDomain dom = branch_domain(a);
        const double s = (a % 2 == 0) ? 1.0 : -1.0;
        const struct {
            double xs, T;
        } ends[2] = {{dom.x1, dom.T1}, {dom.x2, dom.T2}};
        for (const auto& e : ends) {
            const double bound = kPi * a * std::fabs(e.xs);
            const int n = 200;
            double prev = 0.0;
            for (int i = 0; i <= n; ++i) {
                const double t = e.T * i / n;
                const double u = std::sin(t) - s * e.xs * t;
                if (i == 0) {
                    CHECK(u == 0.0);
                } else if (i == n) {
                    CHECK(std::fabs(u - bound) < 1e-12);
                } else {
                    CHECK(u > 0.0);
                    CHECK(u < bound);
                }
                CHECK(u >= prev - 1e-15);
                prev = u;
            }
        }
    }
}

TEST_CASE("evaluation geometry at a reference point") {
    const BranchDomain d1 = branch_domain(1);
    const EvalGeometry g = geometry(1, d1.x1);
    CHECK(g.s == -1.0);
    CHECK(std::fabs(g.T - 1.3518168043) < 1e-9);
    CHECK(std::fabs(g.l - 0.6824595705) < 1e-9);
    CHECK(std::fabs(g.slack) < 1e-14);
    // theta = pi^2*k*x/l lands on the band edge -pi at the lower endpoint.
    CHECK(std::fabs(g.theta - (-kPi)) < 1e-12);
    CHECK(std::fabs(g.w - kPi * g.slack / g.l) < 1e-15);

    const EvalGeometry gm = geometry(1, 0.1);
    CHECK(gm.slack > 0.0);
    CHECK(gm.theta > 0.0);
    CHECK(gm.theta < kPi);
}

TEST_CASE("clamping near and beyond the domain") {
    const BranchDomain dom = branch_domain(1);
    CHECK(clamp_to_branch(dom, dom.x2) == dom.x2);
    CHECK(clamp_to_branch(dom, dom.x2 + 0.5e-12) == dom.x2);
    CHECK(clamp_to_branch(dom, dom.x1 - 0.5e-12) == dom.x1);
    CHECK(clamp_to_branch(dom, 0.3) == 0.3);
    CHECK_THROWS_AS(clamp_to_branch(dom, 1.1), std::domain_error);
    CHECK_THROWS_AS(clamp_to_branch(dom, dom.x1 - 1e-6), std::domain_error);
    try {
        clamp_to_branch(dom, -0.9);
    } catch (const std::domain_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("interval [") != std::string::npos);
    }
}
