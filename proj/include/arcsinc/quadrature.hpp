#pragma once
// Finite-interval quadrature shared by every integral in the library.
//
// The adaptive driver uses an embedded Gauss-7 / Kronrod-15 pair per panel:
// the Kronrod result is the panel value, the (scaled) Gauss/Kronrod
// difference is the panel error, and the panel with the largest error is
// bisected until the global tolerance is met or the subdivision budget runs
// out.  Oscillatory integrands should be pre-split so the phase advances at
// most ~2*pi per initial panel; overloads taking an explicit breakpoint list
// support that.
//
// A fixed 16-point Gauss-Legendre rule is also exposed for composite sweeps
// whose panel widths are already chosen to bound the phase advance; it is the
// low-overhead workhorse of the series and integral engines.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

namespace arcsinc {

struct QuadratureConfig {
    double abs_tol = 1e-12;      ///< absolute tolerance target (> 0)
    double rel_tol = 1e-12;      ///< relative tolerance target (>= 0)
    int max_subdivisions = 200;  ///< panel-bisection budget (>= 1)
    int panel_rule_order = 15;   ///< embedded rule order; 15 = Gauss-7/Kronrod-15
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;  ///< estimated absolute error of `value`
    std::size_t n_evals = 0;    ///< integrand evaluations consumed
    bool converged = true;      ///< false if the subdivision budget ran out first
};

struct QuadComplexResult {
    std::complex<double> value{0.0, 0.0};
    double err_estimate = 0.0;
    std::size_t n_evals = 0;
    bool converged = true;
};

/// Integrate f over [a, b] adaptively.  Throws std::invalid_argument for an
/// unsupported panel_rule_order or a non-positive tolerance pair.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b,
                              const QuadratureConfig& cfg = {});

/// Same, but starting from the consecutive panels [pts[0],pts[1]],
/// [pts[1],pts[2]], ...  (pre-split hook for oscillatory integrands).
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              const std::vector<double>& pts,
                              const QuadratureConfig& cfg = {});

/// Complex-valued counterpart (real and imaginary parts share evaluations).
QuadComplexResult integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                     double a, double b,
                                     const QuadratureConfig& cfg = {});

QuadComplexResult integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                     const std::vector<double>& pts,
                                     const QuadratureConfig& cfg = {});

// Dispatch shims: a raw lambda returning a real scalar would otherwise be
// convertible to both std::function signatures above (double converts to
// complex), making direct calls ambiguous.  These templates win overload
// resolution for such callables and forward to the real-valued driver.
template <class F, std::enable_if_t<std::is_arithmetic_v<std::invoke_result_t<F&, double>>, int> = 0>
QuadResult integrate_adaptive(F&& f, double a, double b,
                              const QuadratureConfig& cfg = {}) {
    const std::function<double(double)> fn = std::forward<F>(f);
    return integrate_adaptive(fn, a, b, cfg);
}

template <class F, std::enable_if_t<std::is_arithmetic_v<std::invoke_result_t<F&, double>>, int> = 0>
QuadResult integrate_adaptive(F&& f, const std::vector<double>& pts,
                              const QuadratureConfig& cfg = {}) {
    const std::function<double(double)> fn = std::forward<F>(f);
    return integrate_adaptive(fn, pts, cfg);
}

// Fixed 16-point Gauss-Legendre rule on (-1, 1): positive half of the
// symmetric node set and the matching weights.  Exposed so inner loops can
// inline the rule without std::function indirection.
namespace gl16 {
inline constexpr std::array<double, 8> nodes = {
    9.50125098376374544e-02, 2.81603550779258915e-01,
    4.58016777657227370e-01, 6.17876244402643771e-01,
    7.55404408355002999e-01, 8.65631202387831755e-01,
    9.44575023073232600e-01, 9.89400934991649939e-01};
inline constexpr std::array<double, 8> weights = {
    1.89450610455068585e-01, 1.82603415044923612e-01,
    1.69156519395002619e-01, 1.49595988816576764e-01,
    1.24628971255534030e-01, 9.51585116824925914e-02,
    6.22535239386477063e-02, 2.71524594117540374e-02};
}  // namespace gl16

/// Fixed 16-point Gauss-Legendre approximation of a complex integrand on
/// [a, b] (no error estimate; callers control accuracy via panel width).
std::complex<double> gauss16(const std::function<std::complex<double>(double)>& f,
                             double a, double b);

}  // namespace arcsinc
