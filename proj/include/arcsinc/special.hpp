#pragma once
// Cardinal sine and the finite phase integrals
//
//   incomplete_anger(nu, phi, x) = (1/pi) * Int_0^phi cos(nu*t - x*sin t) dt
//   incomplete_weber(nu, phi, x) = (1/pi) * Int_0^phi sin(nu*t - x*sin t) dt
//
// together with their full-interval (phi = pi) specialisations.  Both are
// evaluated through one complex transform
//
//   phase_transform(nu, phi, x) = (1/pi) * Int_0^phi exp(i*(x*sin t - nu*t)) dt
//
// whose real part is the cosine integral and whose negated imaginary part is
// the sine integral; sharing the evaluation halves the quadrature cost when
// both are needed.  Large |nu| or |x| integrands are pre-split so the phase
// advances at most ~2*pi per initial panel before the adaptive pair rule
// refines further.

#include <complex>
#include <cstddef>

#include "arcsinc/quadrature.hpp"

namespace arcsinc {

/// sin(z)/z continued through the origin.  Near zero a short Taylor
/// polynomial avoids the 0/0 cancellation; the crossover keeps the result
/// correct to machine precision on both sides.
double sinc(double z);

struct SpecialValue {
    double value = 0.0;
    double err_estimate = 0.0;  ///< estimated absolute error of `value`
};

struct PhaseTransform {
    std::complex<double> value{0.0, 0.0};
    double err_estimate = 0.0;
    std::size_t n_evals = 0;
};

/// (1/pi) * Int_0^phi exp(i*(x*sin t - nu*t)) dt, phi >= 0.
PhaseTransform phase_transform(double nu, double phi, double x,
                               const QuadratureConfig& cfg = {});

/// (1/pi) * Int_0^phi cos(nu*t - x*sin t) dt.  |value| <= phi/pi.
SpecialValue incomplete_anger(double nu, double phi, double x,
                              const QuadratureConfig& cfg = {});

/// (1/pi) * Int_0^phi sin(nu*t - x*sin t) dt.  |value| <= phi/pi.
SpecialValue incomplete_weber(double nu, double phi, double x,
                              const QuadratureConfig& cfg = {});

/// Full-interval cosine phase integral (phi = pi).
SpecialValue anger(double nu, double x, const QuadratureConfig& cfg = {});

/// Full-interval sine phase integral (phi = pi).
SpecialValue weber(double nu, double x, const QuadratureConfig& cfg = {});

}  // namespace arcsinc
