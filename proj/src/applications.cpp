#include "arcsinc/applications.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "arcsinc/accel.hpp"
#include "arcsinc/bessel_roots.hpp"
#include "arcsinc/branch_geometry.hpp"
#include "arcsinc/phase_engine.hpp"

namespace arcsinc {
namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

FwhmEntry fwhm(int m, Method method, const NumericsPolicy& policy) {
    if (m < 0) throw std::invalid_argument("fwhm: lobe index must be >= 0");
    FwhmEntry e;
    e.m = m;
    if (m == 0) {
        // Main lobe: sinc^2(y) = 1/2 at y = +-sinc^{-1}(1/sqrt(2)) on branch 1.
        e.width = 2.0 * evaluate(1, kInvSqrt2, method, policy).value;
        return e;
    }
    // Side lobe m peaks at the extremum between branches m and m+1; the
    // half-power level keeps the extremum's sign.
    const double xm = extremum_value(m) * kInvSqrt2;
    const double hi = evaluate(m + 1, xm, method, policy).value;
    const double lo = evaluate(m, xm, method, policy).value;
    e.width = hi - lo;
    return e;
}

std::vector<FwhmEntry> fwhm_table(int mmax, Method method,
                                  const NumericsPolicy& policy) {
    if (mmax < 0) throw std::invalid_argument("fwhm_table: mmax must be >= 0");
    std::vector<FwhmEntry> out;
    out.reserve(static_cast<std::size_t>(mmax) + 1);
    for (int m = 0; m <= mmax; ++m) out.push_back(fwhm(m, method, policy));
    return out;
}

IdentityReport weber_series_identity(const NumericsPolicy& policy) {
    // Sum_{n>=1} (-1)^n/n * Im C_n over the degenerate branch-1 upper corner
    // (T = pi, l = pi, so the transform's order equals the term index).  The
    // terms decay like n^{-1/2} with period-2 oscillation, so the partial
    // sums carry a (-1)^N N^{-1/2} tail plus a smooth family in N^{-1/2};
    // pair-averaged midpoints kill the alternating part and a fractional
    // Richardson fit in powers of N^{-1/3} absorbs what remains (the
    // pair-averaged tail mixes half-integer and integer powers; the 1/3
    // ladder brackets both within the fitted range).
    const EvalGeometry geo = geometry(1, 1.0);
    engine::PhaseEngine eng(geo);
    engine::EnvelopeTable env(eng, 200.0 * 0.98);

    auto e_minus = [&](double n) {
        if (n >= 200.0)
            return (env.reduced_transform(n) + eng.boundary_tail(n)).imag();
        return eng.transform(n).imag();
    };

    const std::vector<double> big_ns = {96, 144, 216, 324, 486, 729, 1094};
    const long top = static_cast<long>(big_ns.back()) + 1;
    std::vector<double> csum(static_cast<std::size_t>(top) + 1, 0.0);
    double sign = -1.0;
    for (long n = 1; n <= top; ++n, sign = -sign)
        csum[static_cast<std::size_t>(n)] =
            csum[static_cast<std::size_t>(n) - 1] +
            sign / static_cast<double>(n) * e_minus(static_cast<double>(n));

    std::vector<double> xs, ss;
    for (double nd : big_ns) {
        const std::size_t nn = static_cast<std::size_t>(nd);
        xs.push_back(nd + 0.5);
        ss.push_back(0.5 * (csum[nn] + csum[nn + 1]));
    }
    const double measured = richardson_fractional(xs, ss, 5, 3);

    IdentityReport r;
    r.name = "weber_series_identity";
    r.measured = measured;
    r.expected = kPi / 4.0 + 1.0 / kPi;
    r.abs_error = std::fabs(r.measured - r.expected);
    r.work = top;
    (void)policy;
    return r;
}

IdentityReport anger_integral_identity(const NumericsPolicy& policy) {
    // The endpoint integral at the branch-1 upper corner: its closed form is
    // (j - pi)/(-2) with j = 0, i.e. pi/2.
    const EndpointCheck c = integral_endpoint_check(1, /*upper_endpoint=*/true, policy);
    IdentityReport r;
    r.name = "anger_integral_identity";
    r.measured = c.measured;
    r.expected = kPi / 2.0;
    r.abs_error = std::fabs(r.measured - r.expected);
    r.work = c.work;
    return r;
}

}  // namespace arcsinc
