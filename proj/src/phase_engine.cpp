#include "arcsinc/phase_engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "arcsinc/quadrature.hpp"

namespace arcsinc::engine {
namespace {

constexpr double kPi = std::numbers::pi;

// Chebyshev first-kind angles: node i sits at cos((2i+1)*pi/(2*kChebNodes)).
double cheb_cos(int i) { return std::cos(kPi * (2 * i + 1) / (2.0 * kChebNodes)); }
double cheb_weight(int i) {
    const double w = std::sin(kPi * (2 * i + 1) / (2.0 * kChebNodes));
    return (i % 2 == 0) ? w : -w;
}

}  // namespace

double PhaseEngine::psi(double t) const {
    return kPi / g_.l * (g_.s * std::sin(t) - g_.x * t);
}

std::complex<double> PhaseEngine::transform(double nu) {
    const double T = g_.T;
    // |nu * psi'| <= |nu| * (pi/l) * (1 + |x|).  A 16-node Gauss panel keeps
    // ~1e-15 relative error up to ~2.5*pi of phase, so budget panels at that
    // rate rather than one per half-period.
    const double rate = std::fabs(nu) * (1.0 + std::fabs(g_.x)) / g_.l;
    long npan = static_cast<long>(std::ceil(T * rate / 2.5));
    if (npan < 1) npan = 1;

    const double h = T / static_cast<double>(npan);
    double re = 0.0, im = 0.0;
    for (long p = 0; p < npan; ++p) {
        const double c = (static_cast<double>(p) + 0.5) * h;
        const double hw = 0.5 * h;
        for (int i = 0; i < 8; ++i) {
            const double dx = hw * gl16::nodes[i];
            const double ph1 = nu * psi(c - dx);
            const double ph2 = nu * psi(c + dx);
            const double w = gl16::weights[i];
            re += w * (std::cos(ph1) + std::cos(ph2));
            im += w * (std::sin(ph1) + std::sin(ph2));
        }
    }
    evals_ += 16 * npan;
    const double scale = 0.5 * h / kPi;
    return {re * scale, im * scale};
}

std::complex<double> PhaseEngine::boundary_tail(double nu) const {
    const double a0 = g_.a0;
    const double im = 1.0 / (kPi * a0 * nu) +
                      g_.b0 / (kPi * a0 * a0 * a0 * a0 * nu * nu * nu);
    return {0.0, im};
}

std::complex<double> PhaseEngine::envelope(double nu) {
    const double ph = -g_.sig_t * kPi * nu;
    return std::complex<double>(std::cos(ph), std::sin(ph)) *
           (transform(nu) - boundary_tail(nu));
}

const ChebPanel& EnvelopeTable::panel_for(double nu) {
    if (!panels_.empty()) {
        const ChebPanel& hit = panels_[last_hit_];
        if (nu >= hit.a && nu <= hit.b) return hit;
        for (std::size_t i = 0; i < panels_.size(); ++i) {
            if (nu >= panels_[i].a && nu <= panels_[i].b) {
                last_hit_ = i;
                return panels_[i];
            }
        }
    }
    // Grow geometrically (consecutive panels overlap slightly so roundoff at
    // a seam cannot leave a gap) until nu is covered.
    while (panels_.empty() || nu > panels_.back().b) {
        ChebPanel p;
        p.a = panels_.empty() ? std::max(start_, 1.0) : panels_.back().b * 0.995;
        p.b = p.a * kPanelRatio;
        const double mid = 0.5 * (p.a + p.b);
        const double half = 0.5 * (p.b - p.a);
        for (int i = 0; i < kChebNodes; ++i) {
            p.xs[i] = mid + half * cheb_cos(i);
            p.gs[i] = eng_.envelope(p.xs[i]);
        }
        panels_.push_back(p);
    }
    last_hit_ = panels_.size() - 1;
    const ChebPanel& last = panels_[last_hit_];
    if (nu < last.a || nu > last.b)
        throw std::logic_error("EnvelopeTable: nu below the panelled range");
    return last;
}

std::complex<double> EnvelopeTable::envelope_at(double nu) {
    const ChebPanel& p = panel_for(nu);
    std::complex<double> num{0.0, 0.0};
    double den = 0.0;
    for (int i = 0; i < kChebNodes; ++i) {
        const double d = nu - p.xs[i];
        if (std::fabs(d) < 1e-12) return p.gs[i];
        const double q = cheb_weight(i) / d;
        num += q * p.gs[i];
        den += q;
    }
    return num / den;
}

std::complex<double> EnvelopeTable::reduced_transform(double nu) {
    const double ph = eng_.geom().sig_t * kPi * nu;
    return std::complex<double>(std::cos(ph), std::sin(ph)) * envelope_at(nu);
}

double TermSupplier::term(long n) {
    const EvalGeometry& g = eng_.geom();
    const std::complex<double> cr = reduced_transform(static_cast<double>(n));
    const double dn = static_cast<double>(n);
    if (kind_ == SeriesKind::anger)
        return 2.0 / dn * cr.real() * std::sin(g.theta * dn);
    return 2.0 / dn * (-cr.imag()) * std::cos(g.theta * dn);
}

std::complex<double> TermSupplier::reduced_transform(double nu) {
    if (nu <= n_switch_) return eng_.transform(nu) - eng_.boundary_tail(nu);
    return env_.reduced_transform(nu);
}

double closed_form_tail(const EvalGeometry& g, SeriesKind kind) {
    if (kind == SeriesKind::anger) return 0.0;
    const double t = std::fabs(g.theta);
    const double pi2 = kPi * kPi;
    const double c2 = pi2 / 6.0 - kPi * t / 2.0 + t * t / 4.0;
    const double c4 = pi2 * pi2 / 90.0 - pi2 * t * t / 12.0 +
                      kPi * t * t * t / 12.0 - t * t * t * t / 48.0;
    return 2.0 * g.c1 * c2 + 2.0 * g.c3 * c4;
}

double assemble(const EvalGeometry& g, SeriesKind kind, double series_sum) {
    const double root = std::sqrt(std::max(0.0, (1.0 - g.x) * (1.0 + g.x)));
    if (kind == SeriesKind::anger) {
        const double lead = kPi * static_cast<double>(g.k) / g.l * root;
        return lead + g.s * series_sum;
    }
    const double sk = (g.k > 0) ? 1.0 : -1.0;
    const double sx = (g.x > 0) ? 1.0 : -1.0;
    const double lead1 = std::fabs(g.x) / g.l * (1.0 - g.T * g.T / 2.0);
    const double lead2 = g.s / g.l * (root * g.T - 1.0);
    return kPi * static_cast<double>(g.k) + sk * (lead1 + sx * (lead2 + series_sum));
}

}  // namespace arcsinc::engine
