#pragma once
// Shared numerical engine behind the series and integral inversion routes
// (and the closed-form identity checks).  Exposed as a header for white-box
// testing; ordinary callers use inverse_sinc.hpp / applications.hpp.
//
// Everything here works on one branch geometry g (see branch_geometry.hpp)
// through the rescaled phase
//
//   psi(t) = (pi/l) * (s*sin t - x*t),   t in [0, T],   psi(T) = s*pi exactly,
//
// and the complex transform
//
//   C(nu) = (1/pi) * Int_0^T exp(i*nu*psi(t)) dt.
//
// Its real part supplies the cosine-integral series coefficients, its
// negated imaginary part the sine-integral ones.  Three facts make large nu
// cheap:
//
//   * the t = 0 boundary contributes a closed-form, purely imaginary tail
//     boundary_tail(nu) = i*(1/(pi*a0*nu) + b0/(pi*a0^4*nu^3));
//   * after removing it, C oscillates purely through the factor
//     exp(i*sig_t*pi*nu) inherited from psi(T) = s*pi;
//   * the remaining envelope G(nu) = exp(-i*sig_t*pi*nu)*(C - boundary_tail)
//     decays algebraically and is smooth on a logarithmic scale, so
//     16-node Chebyshev interpolation on geometric panels reproduces it to
//     ~1e-14 while costing a handful of exact evaluations per panel.

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "arcsinc/branch_geometry.hpp"

namespace arcsinc::engine {

inline constexpr int kChebNodes = 16;
inline constexpr double kPanelRatio = 1.55;

/// Exact evaluation of C(nu) by a composite 16-point Gauss-Legendre rule
/// whose panel count scales with the phase rate, plus the closed-form
/// boundary tail and envelope accessors.
class PhaseEngine {
  public:
    explicit PhaseEngine(const EvalGeometry& g) : g_(g) {}

    const EvalGeometry& geom() const { return g_; }

    double psi(double t) const;

    /// C(nu) by composite quadrature (cost grows linearly with |nu|).
    std::complex<double> transform(double nu);

    /// Closed-form t=0 boundary tail of C(nu); purely imaginary.
    std::complex<double> boundary_tail(double nu) const;

    /// Envelope G(nu) = exp(-i*sig_t*pi*nu) * (transform(nu) - boundary_tail(nu)).
    std::complex<double> envelope(double nu);

    long evals() const { return evals_; }

  private:
    EvalGeometry g_;
    long evals_ = 0;
};

struct ChebPanel {
    double a = 0.0, b = 0.0;
    std::array<double, kChebNodes> xs{};
    std::array<std::complex<double>, kChebNodes> gs{};
};

/// Barycentric Chebyshev interpolation of the envelope on geometric panels
/// [a, a*kPanelRatio] grown on demand from `start` upward.
class EnvelopeTable {
  public:
    EnvelopeTable(PhaseEngine& eng, double start) : eng_(eng), start_(start) {}

    /// Interpolated G(nu); nu must be >= start (panels grow to cover it).
    std::complex<double> envelope_at(double nu);

    /// C(nu) - boundary_tail(nu) reconstructed from the envelope.
    std::complex<double> reduced_transform(double nu);

    std::size_t panel_count() const { return panels_.size(); }

  private:
    const ChebPanel& panel_for(double nu);

    PhaseEngine& eng_;
    double start_;
    std::vector<ChebPanel> panels_;
    std::size_t last_hit_ = 0;
};

enum class SeriesKind { anger, weber };

/// Series terms t_n for either kind, switching from exact transform
/// evaluations to envelope interpolation above `n_switch`.
/// anger:  t_n = (2/n) * Re(C(n) - bnd(n)) * sin(n*theta)
/// weber:  t_n = (2/n) * (-Im(C(n) - bnd(n))) * cos(n*theta)
/// The weber terms come with the smooth boundary families (the 1/n and 1/n^3
/// tails) already subtracted; closed_form_tail returns their analytic sum.
///
/// The envelope table is passed in (rather than owned) so several suppliers
/// and evaluation routes can share one lazily grown table per geometry; its
/// `start` must not exceed n_switch.
class TermSupplier {
  public:
    TermSupplier(PhaseEngine& eng, EnvelopeTable& env, SeriesKind kind,
                 double n_switch = 400.0)
        : eng_(eng), env_(env), kind_(kind), n_switch_(n_switch) {}

    double term(long n);

    /// C(nu) - boundary_tail(nu): exact below n_switch, enveloped above.
    std::complex<double> reduced_transform(double nu);

    std::size_t panel_count() const { return env_.panel_count(); }

  private:
    PhaseEngine& eng_;
    EnvelopeTable& env_;
    SeriesKind kind_;
    double n_switch_;
};

/// Analytic sum of the families subtracted from the weber terms
/// (zero for the anger kind): 2*c1*C2(|theta|) + 2*c3*C4(|theta|) with
///   C2(t) = pi^2/6 - pi*t/2 + t^2/4
///   C4(t) = pi^4/90 - pi^2*t^2/12 + pi*t^3/12 - t^4/48   (t in [0, 2*pi]).
double closed_form_tail(const EvalGeometry& g, SeriesKind kind);

/// Combine a converged series sum with the leading closed-form parts into
/// the branch value y for positive branch index.
double assemble(const EvalGeometry& g, SeriesKind kind, double series_sum);

}  // namespace arcsinc::engine
