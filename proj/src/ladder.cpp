#include "nlosc/ladder.hpp"

#include <algorithm>
#include <cmath>

#include "nlosc/quartic.hpp"
#include "nlosc/semiclassical.hpp"

namespace nlosc {

LambdaFunction::LambdaFunction(std::function<double(double)> f, Source source, double e_lo,
                               double e_hi, std::string label)
    : f_(std::move(f)), source_(source), e_lo_(e_lo), e_hi_(e_hi), label_(std::move(label)) {
    if (!(e_hi_ > e_lo_)) throw DomainError("spacing domain is empty");
    // Sample positivity across the reachable part of the domain; unbounded
    // ends are probed on a fixed finite window. The samples stay strictly
    // interior, so a spacing that vanishes exactly at a bound is fine.
    double lo = std::isfinite(e_lo_) ? e_lo_ : -32.0;
    double hi = std::isfinite(e_hi_) ? e_hi_ : lo + 64.0;
    for (int i = 1; i <= 32; ++i) {
        double e = lo + (hi - lo) * i / 33.0;
        if (!(f_(e) > 0.0))
            throw NonPositiveLambdaError("spacing function is not positive at e = " +
                                         std::to_string(e));
    }
}

double LambdaFunction::operator()(double e) const {
    if (!contains(e))
        throw DomainError("energy " + std::to_string(e) + " outside spacing domain (" +
                          std::to_string(e_lo_) + ", " + std::to_string(e_hi_) + "]");
    return f_(e);
}

const char* source_name(LambdaFunction::Source source) {
    switch (source) {
        case LambdaFunction::Source::constant: return "constant";
        case LambdaFunction::Source::quartic_closed: return "quartic-closed";
        case LambdaFunction::Source::quartic_negative: return "quartic-negative";
        case LambdaFunction::Source::perturbative: return "perturbative";
        case LambdaFunction::Source::quadrature: return "quadrature";
        case LambdaFunction::Source::tabulated: return "tabulated";
    }
    return "unknown";
}

LambdaFunction constant_lambda(double value) {
    if (!(value > 0.0)) throw NonPositiveLambdaError("constant spacing must be positive");
    return LambdaFunction([value](double) { return value; }, LambdaFunction::Source::constant,
                          -std::numeric_limits<double>::infinity(),
                          std::numeric_limits<double>::infinity(), "constant");
}

LambdaFunction quartic_closed_lambda(double kappa) {
    if (!(kappa > 0.0)) throw DomainError("closed-form spacing requires positive coupling");
    return LambdaFunction([kappa](double e) { return lambda_sc_quartic(e, kappa); },
                          LambdaFunction::Source::quartic_closed, 0.5,
                          std::numeric_limits<double>::infinity(), "quartic closed form");
}

LambdaFunction quartic_negative_lambda(double kappa) {
    if (!(kappa < 0.0)) throw DomainError("negative-branch spacing requires negative coupling");
    double e_max = e_max_negative(kappa);
    return LambdaFunction([kappa](double e) { return lambda_sc_quartic_negative(e, kappa); },
                          LambdaFunction::Source::quartic_negative, 0.5, e_max,
                          "quartic negative branch");
}

LambdaFunction perturbative_lambda(double kappa) {
    double e_hi = std::numeric_limits<double>::infinity();
    if (kappa != 0.0) {
        // The truncated series eventually turns non-positive; declare the
        // domain up to its first positive zero in y = e + 1/2 when one
        // exists. lambda = 1 + 3k y - k^2((69/4)y^2 - (9/2)y + 15/2).
        double a = -69.0 / 4.0 * kappa * kappa;
        double b = 3.0 * kappa + 4.5 * kappa * kappa;
        double c = 1.0 - 7.5 * kappa * kappa;
        double disc = b * b - 4.0 * a * c;
        if (disc >= 0.0) {
            double root = (-b - std::sqrt(disc)) / (2.0 * a);  // larger root, a < 0
            if (root > 0.0) e_hi = root - 0.5;
        }
    }
    return LambdaFunction([kappa](double e) { return lambda_pert(e, kappa); },
                          LambdaFunction::Source::perturbative, -0.5, e_hi,
                          "second-order perturbative spacing");
}

LambdaFunction quadrature_lambda(const EnergySurface& surface, const QuadratureConfig& cfg) {
    double floor = surface.floor_value(0.0);
    for (int i = 1; i <= 64; ++i)
        floor = std::min(floor, surface.floor_value(surface.theta_period * i / 64.0));
    return LambdaFunction([surface, cfg](double e) { return lambda_sc(surface, e, cfg); },
                          LambdaFunction::Source::quadrature, floor,
                          std::numeric_limits<double>::infinity(),
                          "quadrature on surface " + surface.name);
}

Spectrum build_spectrum(const LambdaFunction& lambda, double e_g, int n_max) {
    if (n_max < 0) throw DomainError("ladder length must be nonnegative");
    if (!lambda.contains(e_g))
        throw DomainError("ground level lies outside the spacing domain");

    Spectrum s;
    s.e_g = e_g;
    s.lambda_source = lambda.source();
    s.levels.reserve(static_cast<size_t>(n_max) + 1);
    s.levels.push_back(e_g);
    s.A.push_back(1.0);
    s.log_A.push_back(0.0);

    double log_acc = 0.0;
    double log_comp = 0.0;  // Kahan compensation for the log-product
    for (int n = 1; n <= n_max; ++n) {
        double e_prev = s.levels.back();
        double lam = lambda(e_prev);
        if (!(lam > 0.0))
            throw NonPositiveLambdaError("spacing " + std::to_string(lam) +
                                         " encountered at e = " + std::to_string(e_prev));
        double e_next = e_prev + lam;
        if (!lambda.contains(e_next)) {
            // The next level would leave the spacing domain: the bounded
            // branch ends here. Keep what was built.
            s.termination = Spectrum::Termination::domain_exhausted;
            s.note = "spacing domain exhausted after level " + std::to_string(n - 1) +
                     " at e = " + std::to_string(e_prev);
            break;
        }
        s.lambda_at.push_back(lam);
        s.levels.push_back(e_next);
        s.A.push_back(s.A.back() * (e_next - e_g));
        double term = std::log(e_next - e_g) - log_comp;
        double sum = log_acc + term;
        log_comp = (sum - log_acc) - term;
        log_acc = sum;
        s.log_A.push_back(log_acc);
    }
    return s;
}

Spectrum spectrum_from_levels(const std::vector<double>& levels) {
    if (levels.empty()) throw DomainError("level list is empty");
    Spectrum s;
    s.e_g = levels.front();
    s.levels = levels;
    s.lambda_source = LambdaFunction::Source::tabulated;
    s.A.push_back(1.0);
    s.log_A.push_back(0.0);
    double log_acc = 0.0;
    double log_comp = 0.0;
    for (size_t n = 1; n < levels.size(); ++n) {
        if (!(levels[n] > levels[n - 1]))
            throw DomainError("levels must be strictly increasing");
        s.lambda_at.push_back(levels[n] - levels[n - 1]);
        s.A.push_back(s.A.back() * (levels[n] - s.e_g));
        double term = std::log(levels[n] - s.e_g) - log_comp;
        double sum = log_acc + term;
        log_comp = (sum - log_acc) - term;
        log_acc = sum;
        s.log_A.push_back(log_acc);
    }
    return s;
}

NumberFunction::NumberFunction(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw DomainError("number function needs at least the ground level");
}

int NumberFunction::index_of(double e) const {
    auto it = std::lower_bound(levels_.begin(), levels_.end(), e);
    // Compare against the nearer neighbor; ladder points are well separated
    // so a tight relative window suffices.
    auto close = [&](double a) { return std::abs(e - a) <= 1e-9 * std::max(1.0, std::abs(a)); };
    if (it != levels_.end() && close(*it)) return static_cast<int>(it - levels_.begin());
    if (it != levels_.begin() && close(*(it - 1))) return static_cast<int>(it - 1 - levels_.begin());
    throw DomainError("energy " + std::to_string(e) + " is not a ladder point");
}

NumberFunction number_on_ladder(const Spectrum& s) { return NumberFunction(s.levels); }

const char* spacing_class_name(SpacingClass kind) {
    switch (kind) {
        case SpacingClass::widening: return "widening";
        case SpacingClass::asymptotically_equal_spaced: return "asymptotically-equal-spaced";
        case SpacingClass::bounded_spectrum: return "bounded-spectrum";
    }
    return "unknown";
}

SpacingClassification classify_lambda(const LambdaFunction& lambda, double e_lo, double e_hi,
                                      int samples) {
    if (samples < 2) throw DomainError("classification needs at least two samples");
    SpacingClassification c;
    double lo = std::max(e_lo, std::nextafter(lambda.e_lo(), e_hi));
    double hi = std::min(e_hi, lambda.e_hi());
    if (!(hi > lo)) throw DomainError("classification range misses the spacing domain");
    double scale = 0.0;
    bool stepped_out = false;
    for (int i = 0; i < samples; ++i) {
        double e = lo + (hi - lo) * (i + 0.5) / samples;
        double lam = lambda(e);
        c.sample_e.push_back(e);
        if (!lambda.contains(e + lam)) {
            // One spacing step leaves the domain: bounded spectrum.
            stepped_out = true;
            c.residual.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        c.residual.push_back(lambda(e + lam) - lam);
        scale = std::max(scale, std::abs(lam));
    }
    if (stepped_out || std::isfinite(lambda.e_hi())) {
        c.kind = SpacingClass::bounded_spectrum;
        return c;
    }
    double max_res = 0.0;
    for (double r : c.residual) max_res = std::max(max_res, std::abs(r));
    if (max_res <= 1e-10 * std::max(1.0, scale)) {
        c.kind = SpacingClass::asymptotically_equal_spaced;
    } else if (c.residual.back() > 0.0) {
        c.kind = SpacingClass::widening;
    } else {
        // Residuals shrink toward zero from below: spacing settles down.
        c.kind = SpacingClass::asymptotically_equal_spaced;
    }
    return c;
}

double oscillation_frequency(const LambdaFunction& lambda, double e, double epsilon0) {
    return epsilon0 * lambda(e);
}

}  // namespace nlosc
