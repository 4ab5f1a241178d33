#include "nlosc/operator_poly.hpp"

#include <cmath>

namespace nlosc {

namespace {

// Exact binomial coefficient as a rational; arguments stay small here
// (bounded by the operator powers involved, typically < 16).
Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (int i = 1; i <= k; ++i) r *= Rational(n - k + i, i);
    return r;
}

Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

}  // namespace

OperatorPoly OperatorPoly::monomial(int r, int s, const KappaPoly& c) {
    OperatorPoly p;
    p.add_term(r, s, c);
    return p;
}

KappaPoly OperatorPoly::coeff(int r, int s) const {
    auto it = terms_.find({r, s});
    return it == terms_.end() ? KappaPoly() : it->second;
}

void OperatorPoly::add_term(int r, int s, const KappaPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find({r, s});
    if (it == terms_.end()) {
        terms_.emplace(Key{r, s}, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

OperatorPoly OperatorPoly::scaled(const KappaPoly& c) const {
    OperatorPoly r;
    if (c.is_zero()) return r;
    for (const auto& [key, coeff] : terms_) r.add_term(key.first, key.second, coeff * c);
    return r;
}

OperatorPoly OperatorPoly::truncated(int max_order) const {
    if (max_order < 0) return *this;
    OperatorPoly r;
    for (const auto& [key, coeff] : terms_)
        r.add_term(key.first, key.second, coeff.truncated(max_order));
    return r;
}

std::string OperatorPoly::str() const {
    if (terms_.empty()) return "0";
    // Group by coupling order first so the rendering reads like the
    // order-by-order construction.
    int max_order = 0;
    for (const auto& [key, c] : terms_) max_order = std::max(max_order, c.degree());
    std::string out;
    for (int j = 0; j <= max_order; ++j) {
        for (const auto& [key, c] : terms_) {
            Rational cj = c.coeff(j);
            if (cj.is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string factors;
            if (j > 0) factors += "k^" + std::to_string(j);
            bool unit_coeff = cj == Rational(1);
            if (!unit_coeff || (j == 0 && key.first == 0 && key.second == 0)) {
                if (!factors.empty()) factors += " * ";
                factors += cj.str();
            }
            std::string ops;
            if (key.first > 0) ops += "ad^" + std::to_string(key.first);
            if (key.second > 0) {
                if (!ops.empty()) ops += " ";
                ops += "a^" + std::to_string(key.second);
            }
            if (!ops.empty()) {
                if (!factors.empty()) factors += " * ";
                factors += ops;
            }
            if (factors.empty()) factors = "1";
            out += factors;
        }
    }
    return out;
}

OperatorPoly normal_order_product(const OperatorPoly& p, const OperatorPoly& q, int max_order) {
    // For single terms, a^{s1} (ad)^{r2} = sum_k k! C(s1,k) C(r2,k)
    // (ad)^{r2-k} a^{s1-k}; the product of two normal-ordered terms is then
    // (ad)^{r1+r2-k} a^{s1+s2-k} with the same contraction weights.
    OperatorPoly result;
    for (const auto& [k1, c1] : p.terms()) {
        for (const auto& [k2, c2] : q.terms()) {
            KappaPoly c = (c1 * c2).truncated(max_order);
            if (c.is_zero()) continue;
            int r1 = k1.first, s1 = k1.second;
            int r2 = k2.first, s2 = k2.second;
            int kmax = std::min(s1, r2);
            for (int k = 0; k <= kmax; ++k) {
                Rational weight = factorial(k) * binomial(s1, k) * binomial(r2, k);
                result.add_term(r1 + r2 - k, s1 + s2 - k, c.scaled(weight));
            }
        }
    }
    return result.truncated(max_order);
}

OperatorPoly commutator(const OperatorPoly& p, const OperatorPoly& q, int max_order) {
    return normal_order_product(p, q, max_order) - normal_order_product(q, p, max_order);
}

OperatorPoly dagger(const OperatorPoly& p) {
    OperatorPoly result;
    for (const auto& [key, c] : p.terms()) {
        // (c (ad)^r a^s)^dagger = c (ad)^s a^r up to reordering; reduce the
        // swapped term back to normal order via the product machinery.
        OperatorPoly term = normal_order_product(OperatorPoly::monomial(key.second, 0),
                                                 OperatorPoly::monomial(0, key.first));
        result += term.scaled(c);
    }
    return result;
}

double fock_matrix_element(const OperatorPoly& p, int m, int n, double kappa) {
    double total = 0.0;
    for (const auto& [key, c] : p.terms()) {
        int r = key.first, s = key.second;
        if (m - r != n - s || n < s || m < r) continue;
        // sqrt of the falling factorials n(n-1)...(n-s+1) and m(m-1)...(m-r+1)
        double under = 1.0;
        for (int i = 0; i < s; ++i) under *= static_cast<double>(n - i);
        for (int i = 0; i < r; ++i) under *= static_cast<double>(m - i);
        total += c.eval(kappa) * std::sqrt(under);
    }
    return total;
}

OperatorPoly normal_order_power(const OperatorPoly& p, int exponent, int max_order) {
    OperatorPoly result = OperatorPoly::unit();
    for (int i = 0; i < exponent; ++i) result = normal_order_product(result, p, max_order);
    return result;
}

}  // namespace nlosc
