#include "arcsinc/branch_geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "arcsinc/bessel_roots.hpp"

namespace arcsinc {

BranchDomain branch_domain(int k) {
    if (k == 0) throw std::invalid_argument("branch_domain: branch index must be nonzero");
    const int a = std::abs(k);
    const int n1 = 2 * ((a + 1) / 2) - 1;  // 2*ceil(a/2) - 1, odd
    const int n2 = 2 * (a / 2);            // 2*floor(a/2), even

    BranchDomain d;
    d.k = k;
    d.j1 = bessel_3_2_zero(n1);
    d.j2 = bessel_3_2_zero(n2);
    d.x1 = extremum_value(n1);
    d.x2 = extremum_value(n2);

    const double s = (a % 2 == 0) ? 1.0 : -1.0;
    d.T1 = std::acos(s * d.x1);
    d.T2 = std::acos(s * d.x2);
    return d;
}

double half_period_l(int k, double x) {
    if (k == 0) throw std::invalid_argument("half_period_l: branch index must be nonzero");
    if (!(x >= -1.0 && x <= 1.0))
        throw std::domain_error("half_period_l: x must lie in [-1, 1]");
    const double s = (std::abs(k) % 2 == 0) ? 1.0 : -1.0;
    const double sx = s * x;
    return std::sqrt((1.0 - x) * (1.0 + x)) - sx * std::acos(sx);
}

double phase_slack(int k, double x) {
    return half_period_l(k, x) - std::numbers::pi * std::fabs(static_cast<double>(k) * x);
}

EvalGeometry geometry(int k, double x) {
    if (k == 0) throw std::invalid_argument("geometry: branch index must be nonzero");
    const double pi = std::numbers::pi;

    EvalGeometry g;
    g.k = k;
    g.x = x;
    g.s = (std::abs(k) % 2 == 0) ? 1.0 : -1.0;
    const double sx = g.s * x;
    g.T = std::acos(sx);
    g.l = std::sqrt((1.0 - x) * (1.0 + x)) - sx * g.T;
    g.slack = g.l - pi * std::fabs(static_cast<double>(k) * x);
    g.theta = pi * pi * static_cast<double>(k) * x / g.l;
    g.w = pi * g.slack / g.l;
    g.sig_t = g.s;
    g.a0 = pi / g.l * (g.s - x);
    g.b0 = -pi / g.l * g.s;
    // On a branch domain x never reaches s: for |k| = 1, s = -1 while
    // x in [x1, 1], so |s - x| >= 1 - |x1| there; for |k| >= 2 both
    // endpoints are strict interior extrema with |x| < 1.
    const double d = g.s - x;
    g.c1 = -g.l / (pi * pi * d);
    const double d2 = d * d;
    g.c3 = g.s * g.l * g.l * g.l / (pi * pi * pi * pi * d2 * d2);
    return g;
}

double clamp_to_branch(const BranchDomain& dom, double x) {
    if (x >= dom.x1 && x <= dom.x2) return x;
    if (x >= dom.x1 - kDomainClampTol && x < dom.x1) return dom.x1;
    if (x <= dom.x2 + kDomainClampTol && x > dom.x2) return dom.x2;
    std::ostringstream msg;
    msg.precision(17);
    msg << "x = " << x << " outside branch " << dom.k << " interval ["
        << dom.x1 << ", " << dom.x2 << "]";
    throw std::domain_error(msg.str());
}

}  // namespace arcsinc
