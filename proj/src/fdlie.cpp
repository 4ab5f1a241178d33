#include <nlosc/fdlie.hpp>

#include <nlosc/errors.hpp>

#include <cmath>

namespace nlosc {

double RealFunction::operator()(double x) const {
    if (!f) throw DomainError("function '" + name + "' has no evaluable body");
    if (std::isnan(x) || x < x_lo || x > x_hi)
        throw DomainError("argument " + std::to_string(x) + " is outside the domain of '" +
                          name + "'");
    return f(x);
}

double lie_apply(const RealFunction& lambda, const RealFunction& f, double x) {
    return f(x + lambda(x)) - f(x);
}

double product_rule_residual(const RealFunction& lambda, const RealFunction& f,
                             const RealFunction& g, double x) {
    double shift = x + lambda(x);
    double fx = f(x);
    double gx = g(x);
    double lf = f(shift) - fx;
    double lg = g(shift) - gx;
    double lfg = f(shift) * g(shift) - fx * gx;
    return lfg - (fx * lg + gx * lf + lf * lg);
}

double lie_commutator(const RealFunction& lambda, const RealFunction& xi,
                      const RealFunction& f, double x) {
    double via_lambda = x + lambda(x);
    double left = via_lambda + xi(via_lambda);
    double via_xi = x + xi(x);
    double right = via_xi + lambda(via_xi);
    return f(left) - f(right);
}

double kernel_residual(const RealFunction& lambda, double x) {
    return lambda(x + lambda(x)) - lambda(x);
}

}  // namespace nlosc
