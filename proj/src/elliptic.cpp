#include "nlosc/elliptic.hpp"

#include <cmath>

#include "nlosc/quadrature.hpp"

namespace nlosc {

double elliptic_K(double k) {
    k = std::abs(k);
    if (std::abs(k) >= 1.0) throw DomainError("complete elliptic integral diverges for modulus >= 1");
    double a = 1.0;
    double g = std::sqrt((1.0 - k) * (1.0 + k));
    // The AGM gains quadratically; double precision converges in well under
    // 10 sweeps, the cap is pure safety.
    for (int iter = 0; iter < 40; ++iter) {
        double an = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = an;
        if (std::abs(a - g) <= 1e-17 * a) break;
    }
    return M_PI / (a + g);  // pi / (2 * agm), with one final averaging step
}

double elliptic_F(double alpha, double q) {
    if (q < 0.0 || q >= 1.0) throw DomainError("elliptic parameter must lie in [0, 1)");
    if (alpha < 0.0 || alpha > M_PI) throw DomainError("elliptic amplitude must lie in [0, pi]");
    if (alpha == 0.0) return 0.0;
    auto integrand = [q](double t) {
        double s = std::sin(t);
        return 1.0 / std::sqrt(1.0 - q * s * s);
    };
    return integrate(integrand, 0.0, alpha, 1e-13, 40);
}

double gamma_lanczos(double x) {
    if (!(x > 0.0)) throw DomainError("gamma evaluation requires a positive argument");
    // Shift small arguments up through Gamma(x) = Gamma(x+1)/x so the core
    // approximation only runs where it is accurate.
    if (x < 0.5) return gamma_lanczos(x + 1.0) / x;
    // g = 7, n = 9 coefficient set; accurate to ~1e-15 relative over the
    // shifted range.
    static const double g = 7.0;
    static const double coeff[9] = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    double z = x - 1.0;
    double sum = coeff[0];
    for (int i = 1; i < 9; ++i) sum += coeff[i] / (z + i);
    double t = z + g + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

}  // namespace nlosc
