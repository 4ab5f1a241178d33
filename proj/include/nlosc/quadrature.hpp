#pragma once

#include <functional>

#include "nlosc/errors.hpp"

namespace nlosc {

// Tolerances shared by the quadrature and root-finding layers.
struct QuadratureConfig {
    double tol = 1e-10;          // absolute tolerance for adaptive integrals
    int max_depth = 30;          // recursive bisection depth limit
    double root_rel_tol = 1e-12; // relative tolerance on u in radial inversion
};

// Adaptive composite Gauss-Legendre integration over [a, b] with fixed
// 15-point panels and recursive bisection. Panels are refined left to right,
// so the evaluation and summation order is deterministic and results are
// reproducible byte for byte. Throws QuadratureError if the local error
// estimate still exceeds the budget at the depth limit.
double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_depth = 30);

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        const QuadratureConfig& cfg) {
    return integrate(f, a, b, cfg.tol, cfg.max_depth);
}

}  // namespace nlosc
