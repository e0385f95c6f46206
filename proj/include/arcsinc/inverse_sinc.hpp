#pragma once
// Branch inversion of the cardinal sine: solve sinc(y) = x on branch k.
//
// Four evaluation routes share one public shape:
//
//   oracle        -- safeguarded bisection of sinc(y) = x on the branch
//                    interval; slow-but-sure reference.
//   series_anger  -- modulated series whose coefficients are finite cosine
//                    phase integrals (values of the incomplete_anger family
//                    at integer order); partial sums are accelerated with
//                    the epsilon algorithm.
//   series_weber  -- companion series built from the sine phase integrals
//                    (incomplete_weber family) with a closed-form smooth
//                    tail subtracted term by term to sharpen convergence.
//   integral      -- semi-infinite oscillatory integral, integrated between
//                    consecutive zeros of its sine factor and accelerated
//                    the same way.
//
// All three non-oracle routes reduce their coefficient evaluations to the
// complex transform C(nu) = (1/pi) Int_0^T exp(i*nu*psi(t)) dt over the
// branch geometry (see branch_geometry.hpp).  For large nu, C is
// reconstructed from a cached Chebyshev interpolation of its slowly varying
// envelope on geometrically growing panels, which makes million-term series
// affordable.
//
// Conventions shared by every route:
//   * branch index k != 0; negative k uses odd symmetry, y(-k,x) = -y(k,x),
//     applied exactly (evaluate(-k,x) == -evaluate(k,x) bit for bit).
//   * x is clamped onto the closed branch interval with tolerance
//     kDomainClampTol; values further outside throw std::domain_error.
//   * at the (clamped) endpoints every route returns the exact extremum
//     location j * sign(k) with zero error estimate -- these are the branch
//     boundary values the series and integral forms attain there.
//   * at x = 0 (interior for |k| >= 2) the exact value pi*k is returned.
//   * in a thin shell next to each endpoint the modulation period of the
//     series exceeds what the term budget can resolve; there the evaluators
//     switch to a local inversion anchored at the endpoint (quadratic model
//     from the extremum curvature, polished by Newton on sinc(y) - x) and
//     report its residual-based error estimate.  The shell is detected from
//     the policy budgets, not a fixed width.
//   * err_estimate is an honest absolute-error estimate: methods report the
//     accelerator's cross-window/consecutive-stage discrepancies, never the
//     requested tolerance.
//
// A route that cannot form any value within its budgets throws
// ConvergenceError (the CLI maps it to exit code 3).

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "arcsinc/branch_geometry.hpp"
#include "arcsinc/quadrature.hpp"

namespace arcsinc {

enum class Method { oracle, series_anger, series_weber, integral, auto_select };

/// Stable label for output records ("oracle", "series_anger", ...).
const char* method_name(Method m);

/// Parse a method name; accepts both underscore and hyphen spellings plus
/// "auto".  Returns std::nullopt for anything else.
std::optional<Method> parse_method(std::string_view name);

struct NumericsPolicy {
    double series_tol = 1e-10;     ///< stop the series accelerator below this
    long max_terms = 400000;       ///< series term budget (>= 8)
    int accel_depth = 256;         ///< max partial-sum samples per accelerator call (>= 8)
    double integral_tol = 1e-9;    ///< stop the integral accelerator below this
    long max_half_periods = 400000;///< segment budget for the integral route (>= 8)
    QuadratureConfig quad{};       ///< finite-interval quadrature settings
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvalResult {
    double value = 0.0;        ///< branch value y (radians)
    double err_estimate = 0.0; ///< estimated absolute error
    long work = 0;             ///< terms / segments / iterations consumed
    Method method = Method::oracle;
};

EvalResult oracle(int k, double x, const NumericsPolicy& policy = {});
EvalResult series_anger(int k, double x, const NumericsPolicy& policy = {});
EvalResult series_weber(int k, double x, const NumericsPolicy& policy = {});
EvalResult integral_rep(int k, double x, const NumericsPolicy& policy = {});

/// Dispatch; auto_select uses series_anger in the interior and the exact
/// endpoint values at clamped endpoints (which series_anger returns anyway).
EvalResult evaluate(int k, double x, Method method = Method::auto_select,
                    const NumericsPolicy& policy = {});

/// Diagnostic for the integral route's endpoint behaviour: evaluates the
/// semi-infinite tail integral at a branch endpoint, where its raw partial
/// sums decay only like a fractional power (the periodic extension loses
/// smoothness there), via fractional-power Richardson extrapolation, and
/// compares with the closed-form endpoint value.
struct EndpointCheck {
    double measured = 0.0;
    double expected = 0.0;
    double abs_error = 0.0;
    long work = 0;  ///< segments consumed
};
EndpointCheck integral_endpoint_check(int k, bool upper_endpoint,
                                      const NumericsPolicy& policy = {});

}  // namespace arcsinc
