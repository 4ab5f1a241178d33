#include "nlosc/semiclassical.hpp"

#include <algorithm>
#include <cmath>

namespace nlosc {

namespace {

// Golden-section search for the maximum of g on [a, b]; used only to decide
// whether a folded surface still reaches the requested energy.
double golden_max(const std::function<double(double)>& g, double a, double b) {
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double g1 = g(x1), g2 = g(x2);
    for (int iter = 0; iter < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(b)); ++iter) {
        if (g1 < g2) {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + inv_phi * (b - a);
            g2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - inv_phi * (b - a);
            g1 = g(x1);
        }
    }
    return 0.5 * (a + b);
}

// Bisection to the configured relative width, then a few guarded Newton
// polish steps; the bracket must satisfy f(lo) < 0 <= f(hi).
double polish_root(const std::function<double(double)>& f,
                   const std::function<double(double)>& df, double lo, double hi,
                   double rel_tol) {
    for (int iter = 0; iter < 200 && (hi - lo) > rel_tol * std::max(hi, 1.0); ++iter) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double u = 0.5 * (lo + hi);
    for (int iter = 0; iter < 4; ++iter) {
        double d = df(u);
        if (!(std::abs(d) > 0.0)) break;
        double step = f(u) / d;
        double next = u - step;
        if (next < lo || next > hi) break;  // keep the certified bracket
        u = next;
    }
    return u;
}

}  // namespace

double radial_solve(const EnergySurface& surface, double e, double theta,
                    const QuadratureConfig& cfg) {
    double floor = surface.floor_value(theta);
    if (!(e > floor))
        throw NoRootError("requested energy does not exceed the surface floor at this angle");

    auto f = [&](double u) { return surface.value(u, theta) - e; };
    auto df = [&](double u) { return surface.du(u, theta); };

    // Geometric growth until the surface value reaches e. The last two probe
    // points are kept so a turnover between probes can always be bracketed:
    // when a decrease is seen at hi, a fold maximum lies in (u_a, hi).
    double u_a = 0.0, f_a = floor - e;  // second-to-last probe
    double u_b = 0.0, f_b = f_a;        // last probe, always below e
    double lo = 0.0;
    double hi = std::max(e - floor, 1e-8);
    for (int iter = 0;; ++iter) {
        if (iter >= 300)
            throw NoConvergenceError("radial bracketing exceeded its growth budget");
        double fh = f(hi);
        if (fh >= 0.0) {
            lo = u_b;
            break;
        }
        if (fh < f_b) {
            // The surface decreased between consecutive probes: it folds
            // over. Find the fold maximum; the root exists only if the
            // maximum still reaches e.
            double peak = golden_max([&](double u) { return surface.value(u, theta); },
                                     u_a, hi);
            if (f(peak) < 0.0)
                throw NonMonotoneError(
                    "surface folds below the requested energy; no turning point at this angle");
            // Growth probes can overshoot the fold, so fall back to the
            // older probe when the newer one already sits past the peak.
            lo = u_b < peak ? u_b : u_a;
            hi = peak;
            break;
        }
        u_a = u_b;
        f_a = f_b;
        u_b = hi;
        f_b = fh;
        hi *= 2.0;
    }
    (void)f_a;
    return polish_root(f, df, lo, hi, cfg.root_rel_tol);
}

double lambda_sc(const EnergySurface& surface, double e, const QuadratureConfig& cfg) {
    double period = surface.theta_period;
    auto integrand = [&](double theta) {
        double u = radial_solve(surface, e, theta, cfg);
        return 1.0 / surface.du(u, theta);
    };
    // Integrate one symmetry period and scale to the full turn; the absolute
    // tolerance is scaled the same way so the full-turn integral meets cfg.tol.
    double reduced = integrate(integrand, 0.0, period, cfg.tol * period / (2.0 * M_PI),
                               cfg.max_depth);
    double full = reduced * (2.0 * M_PI / period);
    return 2.0 * M_PI / full;
}

std::complex<double> phase_function(const EnergySurface& surface, double e, double theta,
                                    const QuadratureConfig& cfg) {
    double lambda = lambda_sc(surface, e, cfg);
    auto integrand = [&](double phi) {
        double u = radial_solve(surface, e, phi, cfg);
        return 1.0 / surface.du(u, phi);
    };
    double arc = theta == 0.0 ? 0.0 : integrate(integrand, 0.0, theta, cfg.tol, cfg.max_depth);
    return std::sqrt(e - 0.5) * std::exp(std::complex<double>(0.0, lambda * arc));
}

double action_area(const EnergySurface& surface, double e, const QuadratureConfig& cfg) {
    // The lower limit is the surface minimum over theta; built-in surfaces
    // have angle-independent floors but sampling keeps this generic.
    double floor = surface.floor_value(0.0);
    for (int i = 1; i <= 64; ++i)
        floor = std::min(floor, surface.floor_value(surface.theta_period * i / 64.0));
    if (!(e > floor)) throw NoRootError("requested energy does not exceed the surface minimum");
    auto integrand = [&](double ep) { return 1.0 / lambda_sc(surface, ep, cfg); };
    return integrate(integrand, floor, e, cfg.tol * std::max(1.0, e - floor), cfg.max_depth);
}

double action_area_from_lambda(const std::function<double(double)>& lambda, double e_floor,
                               double e, const QuadratureConfig& cfg) {
    if (!(e > e_floor)) throw NoRootError("requested energy does not exceed the lower limit");
    auto integrand = [&](double ep) { return 1.0 / lambda(ep); };
    return integrate(integrand, e_floor, e, cfg.tol * std::max(1.0, e - e_floor), cfg.max_depth);
}

double number_sc(const EnergySurface& surface, double e, const QuadratureConfig& cfg) {
    return action_area(surface, e, cfg);
}

}  // namespace nlosc
