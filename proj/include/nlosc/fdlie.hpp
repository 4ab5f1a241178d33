#pragma once

#include <functional>
#include <limits>
#include <string>

namespace nlosc {

// A real-valued function together with the closed interval on which it may
// be evaluated. The shift calculus below composes functions at displaced
// arguments, so every evaluation goes through the domain check; identities
// are always checked pointwise on exact evaluations, never on interpolants.
struct RealFunction {
    std::function<double(double)> f;
    double x_lo = -std::numeric_limits<double>::infinity();
    double x_hi = std::numeric_limits<double>::infinity();
    std::string name = "f";

    double operator()(double x) const;
};

// Finite-difference shift derivative: f(x + lambda(x)) - f(x). For constant
// lambda this is the plain forward difference; it is linear in f but obeys
// a modified product rule (see product_rule_residual).
double lie_apply(const RealFunction& lambda, const RealFunction& f, double x);

// Residual of the modified product rule
//   L(f g) = f * Lg + g * Lf + Lf * Lg,
// which holds identically for the shift derivative; anything beyond
// rounding indicates an evaluation bug.
double product_rule_residual(const RealFunction& lambda, const RealFunction& f,
                             const RealFunction& g, double x);

// Difference between applying the two shifts in either order:
//   f(x + lambda(x) + xi(x + lambda(x))) - f(x + xi(x) + lambda(x + xi(x))).
// Vanishes for all f exactly when the shift maps commute at x.
double lie_commutator(const RealFunction& lambda, const RealFunction& xi,
                      const RealFunction& f, double x);

// The shift derivative of lambda along itself, lambda(x + lambda(x)) -
// lambda(x). A spacing function with this identically zero generates an
// equally spaced ladder from every starting point.
double kernel_residual(const RealFunction& lambda, double x);

}  // namespace nlosc
