#pragma once
// Sequence-to-limit acceleration used by the series and integral engines.
//
// wynn_epsilon: the epsilon algorithm (a nonlinear Shanks-family transform)
// applied to a run of partial sums.  The estimate is taken from the tips of
// the even columns; because the deep diagonal eventually degrades through
// rounding, the returned value is the tip pair with the smallest consecutive
// difference, and that difference doubles as the error estimate.
//
// levin_u: the Levin u-transform (remainder model omega_n = (beta+n)*a_n),
// same best-diagonal selection.  Windows longer than max_window are
// truncated from the front to keep the recursion's powers in range.
//
// richardson_fractional: least-squares fit of S_N = S + sum_j c_j *
// (N/N0)^(-j/denom) over sample sizes Ns, returning S.  This handles tails
// with fractional power decay (denom = 2 or 3) that defeat the
// exponential-model transforms above.

#include <vector>

namespace arcsinc {

struct AccelResult {
    double value = 0.0;
    double err_estimate = 0.0;
};

/// Epsilon-algorithm limit of a sequence of partial sums (needs >= 2 entries;
/// with fewer, returns the last entry with an infinite error estimate).
AccelResult wynn_epsilon(const std::vector<double>& partial_sums);

/// Levin u-transform limit of a sequence of partial sums.
AccelResult levin_u(const std::vector<double>& partial_sums, double beta = 1.0,
                    int max_window = 60);

/// Fit S_N = S + sum_{j=1..npow} c_j * (N/Ns[0])^(-j/denom) by least squares
/// and return S.  Requires Ns.size() == Ss.size() >= npow + 2 (one degree of
/// overdetermination) and increasing positive Ns.
double richardson_fractional(const std::vector<double>& Ns,
                             const std::vector<double>& Ss, int npow,
                             int denom = 3);

}  // namespace arcsinc
