#pragma once
// Branch bookkeeping for the inverse of sinc.
//
// Away from the principal maximum, sinc is monotone between consecutive
// extrema, and each such monotone stretch is a branch of the inverse.
// Branch k > 0 maps the value interval [x1, x2] back into the k-th stretch on
// the positive axis; branch -k is its mirror image (odd symmetry).  The
// endpoints are consecutive extrema of sinc:
//
//   j1 = bessel_3_2_zero(2*ceil(|k|/2) - 1)   (negative extremum, x1 < 0)
//   j2 = bessel_3_2_zero(2*floor(|k|/2))      (positive extremum, x2 > 0;
//                                              for |k| = 1, j2 = 0 and x2 = 1)
//
// The auxiliary quantities bundled in EvalGeometry drive both series and the
// integral representation.  With s = (-1)^k and T = arccos(s*x):
//
//   l     = sqrt(1 - x^2) - s*x*T      (half-period normaliser, > 0)
//   slack = l - pi*|k*x|               (>= 0 on the branch; 0 at endpoints)
//   theta = pi^2*k*x / l               (series modulation angle, in [-pi, pi])
//   w     = pi - |theta| = pi*slack/l  (distance of theta from the wrap point)
//
// and the rescaled phase psi(t) = (pi/l)*(s*sin t - x*t) on [0, T] satisfies
// psi(T) = s*pi exactly.  a0 = psi'(0), b0 = psi'''(0); c1 and c3 are the
// coefficients of the closed-form 1/nu and 1/nu^3 tails subtracted from the
// sine-transform coefficients to accelerate the second series.

#include <cstdlib>

namespace arcsinc {

struct BranchDomain {
    int k = 0;        ///< branch index (nonzero; sign selects the axis side)
    double j1 = 0.0;  ///< extremum location bounding |y| above
    double j2 = 0.0;  ///< extremum location bounding |y| below
    double x1 = 0.0;  ///< left value endpoint  (sinc at j1, negative)
    double x2 = 0.0;  ///< right value endpoint (sinc at j2, positive)
    double T1 = 0.0;  ///< arccos((-1)^k * x1)
    double T2 = 0.0;  ///< arccos((-1)^k * x2)
};

/// Domain data for branch k.  Throws std::invalid_argument for k = 0.
BranchDomain branch_domain(int k);

/// Half-period normaliser l(k, x) = sqrt(1-x^2) - (-1)^k * x * arccos((-1)^k x).
/// Requires x in [-1, 1]; the branch index only enters through its parity.
double half_period_l(int k, double x);

/// Phase budget slack l(k, x) - pi*|k*x|.  Positive in the branch interior,
/// zero (to rounding) at the endpoints.
double phase_slack(int k, double x);

struct EvalGeometry {
    int k = 0;
    double x = 0.0;
    double s = 1.0;      ///< (-1)^k
    double T = 0.0;      ///< arccos(s*x)
    double l = 0.0;      ///< half-period normaliser
    double slack = 0.0;  ///< l - pi*|k*x|
    double theta = 0.0;  ///< pi^2*k*x/l
    double w = 0.0;      ///< pi - |theta|, computed as pi*slack/l
    double sig_t = 1.0;  ///< sign of psi(T) (= s)
    double a0 = 0.0;     ///< psi'(0)  = (pi/l)*(s - x)
    double b0 = 0.0;     ///< psi'''(0) = -(pi/l)*s
    double c1 = 0.0;     ///< -l / (pi^2*(s-x))
    double c3 = 0.0;     ///< s*l^3 / (pi^4*(s-x)^4)
};

/// Geometry bundle for one (k, x) evaluation.  Requires k != 0 and x inside
/// the closed branch interval (callers clamp first).
EvalGeometry geometry(int k, double x);

/// Absolute tolerance used when clamping x onto the branch interval.
inline constexpr double kDomainClampTol = 1e-12;

/// Clamp x onto [x1, x2] of branch k.  Values within kDomainClampTol outside
/// are snapped to the endpoint; anything further out throws
/// std::domain_error naming the valid interval.
double clamp_to_branch(const BranchDomain& dom, double x);

}  // namespace arcsinc
