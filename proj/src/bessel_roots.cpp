#include "arcsinc/bessel_roots.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace arcsinc {
namespace {

double g_of(double y) { return std::sin(y) - y * std::cos(y); }

// Bracketed Newton on g(y) = sin y - y cos y, g'(y) = y sin y.  The bracket
// is maintained throughout; any Newton step that would escape it (or a
// near-zero derivative) falls back to bisection, so convergence is
// unconditional.
double solve_root(int n) {
    const double pi = std::numbers::pi;
    double lo = (n + 0.25) * pi;
    double hi = (n + 0.5) * pi;
    double glo = g_of(lo);
    // g((n+1/2)pi) = (-1)^n, g((n+1/4)pi) has the opposite sign for n >= 1.
    if (glo == 0.0) return lo;
    if (g_of(hi) == 0.0) return hi;

    // Asymptotic seed: the root approaches (n+1/2)pi - 1/((n+1/2)pi).
    const double c = (n + 0.5) * pi;
    double y = c - 1.0 / c;
    if (y <= lo || y >= hi) y = 0.5 * (lo + hi);

    for (int it = 0; it < 200; ++it) {
        const double g = g_of(y);
        if (g == 0.0) return y;
        if ((g > 0.0) == (glo > 0.0)) {
            lo = y;
            glo = g;
        } else {
            hi = y;
        }
        const double dg = y * std::sin(y);
        double ynew = (dg != 0.0) ? y - g / dg : 0.5 * (lo + hi);
        if (!(ynew > lo && ynew < hi)) ynew = 0.5 * (lo + hi);
        if (std::fabs(ynew - y) <= 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(y))
            return ynew;
        y = ynew;
    }
    return y;
}

std::mutex table_mutex;
std::vector<double> root_table{0.0};  // index 0: the origin

}  // namespace

double bessel_3_2_zero(int n) {
    if (n < 0) throw std::invalid_argument("bessel_3_2_zero: index must be >= 0");
    std::lock_guard<std::mutex> lock(table_mutex);
    while (static_cast<int>(root_table.size()) <= n)
        root_table.push_back(solve_root(static_cast<int>(root_table.size())));
    return root_table[static_cast<std::size_t>(n)];
}

std::pair<double, double> root_bracket(int n) {
    if (n < 1) throw std::invalid_argument("root_bracket: index must be >= 1");
    const double pi = std::numbers::pi;
    return {(n + 0.25) * pi, (n + 0.5) * pi};
}

double extremum_value(int n) {
    if (n < 0) throw std::invalid_argument("extremum_value: index must be >= 0");
    if (n == 0) return 1.0;
    const double y = bessel_3_2_zero(n);
    const double mag = 1.0 / std::sqrt(1.0 + y * y);
    return (n % 2 == 0) ? mag : -mag;
}

}  // namespace arcsinc
