#include "arcsinc/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace arcsinc {

double sinc(double z) {
    // For |z| below the crossover the truncated series
    //   1 - z^2/6 + z^4/120 - z^6/5040
    // has remainder < z^8/362880 ~ 2.8e-22, far below one ulp.
    const double az = std::fabs(z);
    if (az < 1e-2) {
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0 * (1.0 - z2 / 42.0));
    }
    return std::sin(z) / z;
}

PhaseTransform phase_transform(double nu, double phi, double x,
                               const QuadratureConfig& cfg) {
    if (!(phi >= 0.0) || !std::isfinite(phi))
        throw std::invalid_argument("phase_transform: phi must be finite and >= 0");
    if (!std::isfinite(nu) || !std::isfinite(x))
        throw std::invalid_argument("phase_transform: nu and x must be finite");

    PhaseTransform out;
    if (phi == 0.0) return out;

    // |d/dt (x sin t - nu t)| <= |x| + |nu|: split so each initial panel sees
    // at most ~2*pi of phase.
    const double pi = std::numbers::pi;
    const double rate = std::fabs(nu) + std::fabs(x);
    std::size_t n_panels = static_cast<std::size_t>(std::ceil(rate * phi / (2.0 * pi)));
    if (n_panels < 1) n_panels = 1;

    std::vector<double> pts(n_panels + 1);
    for (std::size_t i = 0; i <= n_panels; ++i)
        pts[i] = phi * static_cast<double>(i) / static_cast<double>(n_panels);
    pts.back() = phi;

    const auto f = [nu, x](double t) {
        const double ph = x * std::sin(t) - nu * t;
        return std::complex<double>(std::cos(ph), std::sin(ph));
    };
    QuadComplexResult q = integrate_adaptive(f, pts, cfg);
    out.value = q.value / pi;
    out.err_estimate = q.err_estimate / pi;
    out.n_evals = q.n_evals;
    return out;
}

SpecialValue incomplete_anger(double nu, double phi, double x,
                              const QuadratureConfig& cfg) {
    const PhaseTransform p = phase_transform(nu, phi, x, cfg);
    return SpecialValue{p.value.real(), p.err_estimate};
}

SpecialValue incomplete_weber(double nu, double phi, double x,
                              const QuadratureConfig& cfg) {
    const PhaseTransform p = phase_transform(nu, phi, x, cfg);
    return SpecialValue{-p.value.imag(), p.err_estimate};
}

SpecialValue anger(double nu, double x, const QuadratureConfig& cfg) {
    return incomplete_anger(nu, std::numbers::pi, x, cfg);
}

SpecialValue weber(double nu, double x, const QuadratureConfig& cfg) {
    return incomplete_weber(nu, std::numbers::pi, x, cfg);
}

}  // namespace arcsinc
