#pragma once
// Positive roots of tan y = y, indexed from zero.
//
// These are the stationary points of sinc: sinc'(y) = 0 exactly where
// tan y = y, and the n-th positive root lies in ((n + 1/4)*pi, (n + 1/2)*pi).
// Index 0 is the origin (y = 0, the global maximum of sinc).  Each root is
// found once by bracketed Newton iteration on g(y) = sin y - y*cos y (which
// has no poles, unlike tan y - y) and kept in an append-only table guarded by
// a mutex, so repeated queries are O(1) and safe from concurrent callers.

#include <utility>

namespace arcsinc {

/// n-th root of tan y = y (n >= 0; n = 0 returns 0.0).
/// Throws std::invalid_argument for n < 0.
double bessel_3_2_zero(int n);

/// Bracket ((n + 1/4)*pi, (n + 1/2)*pi) that isolates the n-th root (n >= 1).
std::pair<double, double> root_bracket(int n);

/// Value of sinc at the n-th root: the n-th extremum of sinc.  Computed from
/// the root identity |cos y| = 1/sqrt(1 + y^2) with sign (-1)^n, which is
/// better conditioned than evaluating cos at the computed root.
double extremum_value(int n);

}  // namespace arcsinc
