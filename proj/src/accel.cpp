#include "arcsinc/accel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace arcsinc {
namespace {

// Best entry of a diagonal of estimates: the one whose distance to its
// predecessor is smallest (later entries win ties, being deeper transforms).
AccelResult pick_best(const std::vector<double>& diag) {
    if (diag.size() < 2)
        return {diag.empty() ? 0.0 : diag.back(),
                std::numeric_limits<double>::infinity()};
    std::size_t best_i = 1;
    double best_d = std::fabs(diag[1] - diag[0]);
    for (std::size_t i = 2; i < diag.size(); ++i) {
        const double d = std::fabs(diag[i] - diag[i - 1]);
        if (d <= best_d) {
            best_d = d;
            best_i = i;
        }
    }
    return {diag[best_i], best_d};
}

}  // namespace

AccelResult wynn_epsilon(const std::vector<double>& partial_sums) {
    const std::size_t n = partial_sums.size();
    if (n == 0) return {0.0, std::numeric_limits<double>::infinity()};
    // A constant tail is its own limit; the cross-difference rule below would
    // otherwise divide by zero on every entry.
    if (std::all_of(partial_sums.begin(), partial_sums.end(),
                    [&](double v) { return v == partial_sums.back(); }))
        return {partial_sums.back(), n > 1 ? 0.0 : std::numeric_limits<double>::infinity()};
    std::vector<double> prev(n + 1, 0.0);
    std::vector<double> cur = partial_sums;
    std::vector<double> ests{cur.back()};
    const double eps = std::numeric_limits<double>::epsilon();
    int k = 0;
    bool saturated = false;
    while (cur.size() > 1 && !saturated) {
        ++k;
        std::vector<double> nxt(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const double d = cur[i + 1] - cur[i];
            // Once a cross difference sinks to rounding level its reciprocal
            // is noise and every deeper column inherits the damage, so the
            // table is truncated here.  On an estimate column (odd k reads
            // even-column data) the near-equal pair itself is a converged
            // estimate worth keeping.
            if (!std::isfinite(d) ||
                std::fabs(d) <=
                    8.0 * eps * std::max(std::fabs(cur[i + 1]), std::fabs(cur[i]))) {
                if (k % 2 == 1) ests.push_back(cur[i + 1]);
                saturated = true;
                break;
            }
            nxt[i] = prev[i + 1] + 1.0 / d;
        }
        if (saturated) break;
        prev.swap(cur);
        cur.swap(nxt);
        if (k % 2 == 0 && !cur.empty()) ests.push_back(cur.back());
    }
    return pick_best(ests);
}

AccelResult levin_u(const std::vector<double>& partial_sums, double beta,
                    int max_window) {
    std::vector<double> s = partial_sums;
    if (max_window > 0 && static_cast<int>(s.size()) > max_window)
        s.erase(s.begin(), s.end() - max_window);
    const std::size_t n = s.size();
    if (n == 0) return {0.0, std::numeric_limits<double>::infinity()};

    std::vector<double> terms(n);
    terms[0] = s[0];
    for (std::size_t i = 1; i < n; ++i) terms[i] = s[i] - s[i - 1];

    std::vector<double> N(n), D(n);
    for (std::size_t i = 0; i < n; ++i) {
        double om = (beta + static_cast<double>(i)) * terms[i];
        if (om == 0.0) om = 1e-300;
        N[i] = s[i] / om;
        D[i] = 1.0 / om;
    }

    std::vector<double> diag;
    diag.push_back(D[0] != 0.0 ? N[0] / D[0] : s[0]);
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<double> Nk(n - k), Dk(n - k);
        for (std::size_t j = 0; j + k < n; ++j) {
            const double bj = beta + static_cast<double>(j);
            const double c = bj *
                             std::pow(bj + static_cast<double>(k) - 1.0,
                                      static_cast<double>(k) - 2.0) /
                             std::pow(bj + static_cast<double>(k),
                                      static_cast<double>(k) - 1.0);
            Nk[j] = N[j + 1] - c * N[j];
            Dk[j] = D[j + 1] - c * D[j];
        }
        N.swap(Nk);
        D.swap(Dk);
        diag.push_back(D[0] != 0.0 ? N[0] / D[0] : diag.back());
    }
    return pick_best(diag);
}

double richardson_fractional(const std::vector<double>& Ns,
                             const std::vector<double>& Ss, int npow,
                             int denom) {
    const std::size_t m = Ns.size();
    const std::size_t cols = static_cast<std::size_t>(npow) + 1;
    if (m != Ss.size() || npow < 0 || denom < 1)
        throw std::invalid_argument("richardson_fractional: bad arguments");
    if (m < cols + 1)
        throw std::invalid_argument("richardson_fractional: need npow + 2 samples");

    // Build the design matrix A[i][j] = (Ns[i]/Ns[0])^(-j/denom) and solve
    // min |A c - Ss| by Householder QR (m x cols, cols <= ~8).
    std::vector<double> A(m * cols);
    for (std::size_t i = 0; i < m; ++i) {
        const double r = Ns[i] / Ns[0];
        A[i * cols] = 1.0;
        for (std::size_t j = 1; j < cols; ++j)
            A[i * cols + j] = std::pow(r, -static_cast<double>(j) / denom);
    }
    std::vector<double> b = Ss;

    for (std::size_t j = 0; j < cols; ++j) {
        double norm = 0.0;
        for (std::size_t i = j; i < m; ++i) norm += A[i * cols + j] * A[i * cols + j];
        norm = std::sqrt(norm);
        if (norm == 0.0)
            throw std::runtime_error("richardson_fractional: singular design matrix");
        double ajj = A[j * cols + j];
        const double alpha = (ajj >= 0.0) ? -norm : norm;
        std::vector<double> v(m, 0.0);
        v[j] = ajj - alpha;
        for (std::size_t i = j + 1; i < m; ++i) v[i] = A[i * cols + j];
        double vtv = 0.0;
        for (std::size_t i = j; i < m; ++i) vtv += v[i] * v[i];
        if (vtv > 0.0) {
            for (std::size_t c = j; c < cols; ++c) {
                double dot = 0.0;
                for (std::size_t i = j; i < m; ++i) dot += v[i] * A[i * cols + c];
                const double f = 2.0 * dot / vtv;
                for (std::size_t i = j; i < m; ++i) A[i * cols + c] -= f * v[i];
            }
            double dot = 0.0;
            for (std::size_t i = j; i < m; ++i) dot += v[i] * b[i];
            const double f = 2.0 * dot / vtv;
            for (std::size_t i = j; i < m; ++i) b[i] -= f * v[i];
        }
    }

    // Back substitution on the upper-triangular cols x cols block.
    std::vector<double> c(cols, 0.0);
    for (std::size_t jj = cols; jj-- > 0;) {
        double acc = b[jj];
        for (std::size_t c2 = jj + 1; c2 < cols; ++c2)
            acc -= A[jj * cols + c2] * c[c2];
        const double diag = A[jj * cols + jj];
        if (diag == 0.0)
            throw std::runtime_error("richardson_fractional: rank-deficient fit");
        c[jj] = acc / diag;
    }
    return c[0];
}

}  // namespace arcsinc
