#pragma once
// Applications built on the branch evaluator:
//
//  * fwhm: full width at half maximum of the squared cardinal sine's lobes.
//    Entry m = 0 is the main lobe's width in omega (the solutions of
//    sinc^2 = 1/2 around the origin); entry m >= 1 is the width of side
//    lobe m, the spacing in y between the two points where sinc^2 falls to
//    half the lobe's peak value.  Side-lobe widths increase with m and
//    approach pi/2 from below, so |width - pi/2| decreases.
//
//  * Two closed-form checks exercising the evaluator's machinery at branch
//    endpoints, each returning measured/expected/abs_error:
//      - weber_series_identity: sum_{n>=1} (-1)^n/n * W_n at the degenerate
//        upper corner of branch 1 equals pi/4 + 1/pi, where W_n is the
//        imaginary part of the finite-interval phase transform there.
//      - anger_integral_identity: the oscillatory endpoint integral at the
//        same corner equals pi/2.

#include "arcsinc/inverse_sinc.hpp"

#include <vector>

namespace arcsinc {

struct FwhmEntry {
    int m = 0;         // lobe index (0 = main lobe)
    double width = 0;  // full width at half maximum
};

/// Width of lobe m of sinc^2 (see header comment).  method selects the
/// branch evaluator used for the two crossing points.
FwhmEntry fwhm(int m, Method method = Method::oracle,
               const NumericsPolicy& policy = {});

/// Widths for lobes 0..mmax.
std::vector<FwhmEntry> fwhm_table(int mmax, Method method = Method::oracle,
                                  const NumericsPolicy& policy = {});

struct IdentityReport {
    const char* name = "";
    double measured = 0.0;
    double expected = 0.0;
    double abs_error = 0.0;
    long work = 0;  // terms summed / segments integrated
};

/// Alternating series of endpoint phase-transform values; expected
/// pi/4 + 1/pi.
IdentityReport weber_series_identity(const NumericsPolicy& policy = {});

/// Oscillatory endpoint integral at the branch-1 upper corner; expected
/// pi/2.
IdentityReport anger_integral_identity(const NumericsPolicy& policy = {});

}  // namespace arcsinc
