#pragma once

#include <map>
#include <string>
#include <utility>

#include "nlosc/kappa_poly.hpp"

namespace nlosc {

// Normal-ordered polynomial in the harmonic ladder operators: a finite sum
// of terms c_{rs} * (ad)^r a^s where each coefficient is an exact polynomial
// in the coupling. Keys are (r, s) = (creation power, annihilation power);
// zero coefficients are never stored, so the zero polynomial has an empty
// term map and equality is plain map comparison.
class OperatorPoly {
public:
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, KappaPoly>;

    OperatorPoly() = default;

    static OperatorPoly zero() { return OperatorPoly(); }
    static OperatorPoly unit() { return monomial(0, 0); }
    static OperatorPoly annihilator() { return monomial(0, 1); }
    static OperatorPoly creator() { return monomial(1, 0); }
    static OperatorPoly monomial(int r, int s, const KappaPoly& c = KappaPoly(Rational(1)));

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    KappaPoly coeff(int r, int s) const;

    // Adds c * (ad)^r a^s, dropping the slot if the sum cancels.
    void add_term(int r, int s, const KappaPoly& c);

    OperatorPoly& operator+=(const OperatorPoly& o);
    OperatorPoly& operator-=(const OperatorPoly& o);
    friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
    friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }

    OperatorPoly scaled(const KappaPoly& c) const;
    OperatorPoly scaled(const Rational& c) const { return scaled(KappaPoly(c)); }

    // Drops every coupling power above max_order in every coefficient;
    // max_order < 0 keeps all orders.
    OperatorPoly truncated(int max_order) const;

    friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const OperatorPoly& a, const OperatorPoly& b) { return !(a == b); }

    // Stable textual rendering: terms grouped by coupling order ascending,
    // then by (r, s); each term printed as "k^j * c * ad^r a^s" with unit
    // factors omitted. Used by the verify-algebra report.
    std::string str() const;

private:
    TermMap terms_;
};

// Product p*q rewritten into canonical normal-ordered form using
// a (ad) = (ad) a + 1 repeatedly; exact arithmetic throughout. Passing
// max_order >= 0 truncates the coupling grade of the result, which keeps the
// order-by-order construction from dragging along irrelevant high orders.
OperatorPoly normal_order_product(const OperatorPoly& p, const OperatorPoly& q,
                                  int max_order = -1);

// Normal-ordered p*q - q*p.
OperatorPoly commutator(const OperatorPoly& p, const OperatorPoly& q, int max_order = -1);

// Hermitian conjugate. Conjugating a normal-ordered term gives an
// antinormal-ordered one, so each term is re-reduced to canonical form;
// coefficients are real rationals and stay as they are.
OperatorPoly dagger(const OperatorPoly& p);

// Matrix element <m|p|n> in the harmonic oscillator number basis at a given
// numeric coupling. A term (ad)^r a^s connects |n> to |m> only when
// m - r = n - s >= 0, contributing sqrt(n!/(n-s)! * m!/(m-r)!).
double fock_matrix_element(const OperatorPoly& p, int m, int n, double kappa);

// Integer power with normal ordering, exponent >= 0.
OperatorPoly normal_order_power(const OperatorPoly& p, int exponent, int max_order = -1);

}  // namespace nlosc
