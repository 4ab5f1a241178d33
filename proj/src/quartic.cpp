#include "nlosc/quartic.hpp"

#include <cmath>
#include <limits>

namespace nlosc {

double xi_of(double e, double kappa) { return 16.0 * (e - 0.5) * kappa; }

EllipticParams make_elliptic_params(double e, double kappa, double theta) {
    EllipticParams p;
    p.xi = xi_of(e, kappa);
    double nan = std::numeric_limits<double>::quiet_NaN();
    if (p.xi >= 0.0) {
        double root = std::sqrt(1.0 + p.xi);
        p.q = (root - 1.0) / (2.0 * root);
        double t = std::tan(theta);
        double t2 = t * t;
        p.alpha = std::acos((root - t2) / (root + t2));
        p.q_prime = nan;
        p.alpha_prime = nan;
    } else {
        double m = -p.xi;
        if (m > 1.0) throw BeyondBoundError("scaled energy beyond the negative-coupling bound",
                                            e_max_negative(kappa));
        double root = std::sqrt(m);
        p.q_prime = 2.0 * root / (1.0 + root);
        p.alpha_prime = std::atan(std::tan(theta) / std::sqrt(1.0 + root));
        p.q = nan;
        p.alpha = nan;
    }
    return p;
}

double lambda_sc_quartic(double e, double kappa) {
    if (!(e > 0.5)) throw DomainError("closed-form spacing requires e > 1/2");
    if (!(kappa > 0.0)) throw DomainError("closed-form spacing requires positive coupling");
    double xi = xi_of(e, kappa);
    double root = std::sqrt(1.0 + xi);
    double q = (root - 1.0) / (2.0 * root);
    // The quarter period takes the modulus, i.e. the square root of the
    // parameter q.
    return 0.5 * M_PI * std::pow(1.0 + xi, 0.25) / elliptic_K(std::sqrt(q));
}

double lambda_sc_quartic_negative(double e, double kappa) {
    if (!(e > 0.5)) throw DomainError("closed-form spacing requires e > 1/2");
    if (!(kappa < 0.0)) throw DomainError("negative-branch spacing requires negative coupling");
    double m = -xi_of(e, kappa);
    if (m > 1.0)
        throw BeyondBoundError("level spacing is ill-defined beyond the energy bound",
                               e_max_negative(kappa));
    if (m == 1.0) return 0.0;  // the quarter period diverges here
    double root = std::sqrt(m);
    double q_prime = 2.0 * root / (1.0 + root);
    return 0.5 * M_PI * std::sqrt(1.0 + root) / elliptic_K(std::sqrt(q_prime));
}

double e_max_negative(double kappa) {
    if (!(kappa < 0.0)) throw DomainError("the energy bound exists only for negative coupling");
    return 0.5 + 1.0 / (16.0 * std::abs(kappa));
}

double groundstate_pert(double kappa) {
    return 0.5 + 0.75 * kappa - 21.0 / 8.0 * kappa * kappa;
}

double lambda_pert(double e, double kappa) {
    double y = e + 0.5;
    return 1.0 + 3.0 * kappa * y -
           kappa * kappa * (69.0 / 4.0 * y * y - 4.5 * y + 7.5);
}

double energy_pert(int n, double kappa) {
    if (n < 0) throw DomainError("level index must be nonnegative");
    double nd = n;
    return nd + 0.5 + 0.75 * kappa * (2.0 * nd * nd + 2.0 * nd + 1.0) -
           kappa * kappa *
               (17.0 / 4.0 * nd * nd * nd + 51.0 / 8.0 * nd * nd + 59.0 / 8.0 * nd + 21.0 / 8.0);
}

double energy_sc_series(int n, double kappa) {
    if (n < 0) throw DomainError("level index must be nonnegative");
    double nd = n;
    return nd + 0.5 + 1.5 * kappa * (nd * nd - nd) -
           kappa * kappa * (17.0 / 4.0 * nd * nd * nd - 33.0 / 8.0 * nd * nd - 0.125 * nd);
}

double lambda_sc_series(double e, double kappa) {
    double w = e - 0.5;
    return 1.0 + 3.0 * kappa * w - 69.0 / 4.0 * kappa * kappa * w * w;
}

double wkb_energy(int n, double kappa) {
    if (n < 0) throw DomainError("level index must be nonnegative");
    if (!(kappa > 0.0)) throw DomainError("the quartic asymptote requires positive coupling");
    double pref = std::pow(3.0, 4.0 / 3.0) * M_PI * M_PI / std::pow(gamma_quarter, 8.0 / 3.0);
    return pref * std::cbrt(kappa) * std::pow(static_cast<double>(n), 4.0 / 3.0);
}

double wkb_spacing(double e, double kappa) {
    if (!(e * kappa >= 0.0)) throw DomainError("the spacing asymptote requires e*kappa >= 0");
    return 4.0 * std::pow(M_PI, 1.5) / (gamma_quarter * gamma_quarter) *
           std::pow(e * kappa, 0.25);
}

const char* perturbative_regime_note() {
    return "perturbative columns valid for small kappa and small n (kappa*n^2 well below 1)";
}

const char* wkb_regime_note() {
    return "asymptotic columns valid for large n (xi = 16(e-1/2)kappa well above 1)";
}

}  // namespace nlosc
