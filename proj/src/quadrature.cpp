#include "nlosc/quadrature.hpp"

#include <array>
#include <cmath>

namespace nlosc {

namespace {

constexpr int kPanelPoints = 15;

struct PanelRule {
    std::array<double, kPanelPoints> node;   // on [-1, 1]
    std::array<double, kPanelPoints> weight;
};

// Gauss-Legendre nodes are the roots of the degree-15 Legendre polynomial,
// found by Newton iteration from the Chebyshev initial guess; weights follow
// from the derivative. Computed once to machine precision, so no literal
// table has to be maintained.
PanelRule make_rule() {
    PanelRule rule{};
    const int n = kPanelPoints;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Recurrence for P_n(x) and its derivative.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.node[i] = -x;
        rule.node[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weight[i] = w;
        rule.weight[n - 1 - i] = w;
    }
    return rule;
}

const PanelRule& rule() {
    static const PanelRule r = make_rule();
    return r;
}

double panel(const std::function<double(double)>& f, double a, double b) {
    const PanelRule& r = rule();
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kPanelPoints; ++i) sum += r.weight[i] * f(mid + half * r.node[i]);
    return sum * half;
}

double refine(const std::function<double(double)>& f, double a, double b, double whole,
              double tol, int depth) {
    double mid = 0.5 * (a + b);
    double left = panel(f, a, mid);
    double right = panel(f, mid, b);
    double split = left + right;
    if (std::abs(split - whole) <= tol) return split;
    if (depth <= 0)
        throw QuadratureError("adaptive quadrature exhausted its depth limit before meeting tolerance");
    return refine(f, a, mid, left, 0.5 * tol, depth - 1) +
           refine(f, mid, b, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_depth) {
    if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    return sign * refine(f, a, b, panel(f, a, b), tol, max_depth);
}

}  // namespace nlosc
