#pragma once

#include <string>
#include <vector>

#include "nlosc/rational.hpp"

namespace nlosc {

// Polynomial in the dimensionless coupling with exact rational coefficients.
// Coefficient j belongs to the j-th power of the coupling. Trailing zeros are
// trimmed so the zero polynomial has empty storage and degree -1.
class KappaPoly {
public:
    KappaPoly() = default;
    explicit KappaPoly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }

    // c * kappa^j
    static KappaPoly power(int j, const Rational& c = Rational(1)) {
        KappaPoly p;
        if (!c.is_zero()) {
            p.c_.assign(static_cast<size_t>(j) + 1, Rational(0));
            p.c_.back() = c;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rational coeff(int j) const {
        if (j < 0 || j >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(j)];
    }

    KappaPoly& operator+=(const KappaPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
        trim();
        return *this;
    }
    KappaPoly& operator-=(const KappaPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
        trim();
        return *this;
    }
    friend KappaPoly operator+(KappaPoly a, const KappaPoly& b) { return a += b; }
    friend KappaPoly operator-(KappaPoly a, const KappaPoly& b) { return a -= b; }

    friend KappaPoly operator*(const KappaPoly& a, const KappaPoly& b) {
        KappaPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    KappaPoly& operator*=(const KappaPoly& o) { return *this = *this * o; }

    KappaPoly scaled(const Rational& s) const {
        KappaPoly r = *this;
        for (auto& c : r.c_) c *= s;
        r.trim();
        return r;
    }

    KappaPoly operator-() const { return scaled(Rational(-1)); }

    // Drops every power above max_order; max_order < 0 means keep all.
    KappaPoly truncated(int max_order) const {
        if (max_order < 0 || degree() <= max_order) return *this;
        KappaPoly r = *this;
        r.c_.resize(static_cast<size_t>(max_order) + 1);
        r.trim();
        return r;
    }

    friend bool operator==(const KappaPoly& a, const KappaPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const KappaPoly& a, const KappaPoly& b) { return !(a == b); }

    // Horner evaluation at a numeric coupling value.
    double eval(double kappa) const {
        double v = 0.0;
        for (size_t j = c_.size(); j-- > 0;) v = v * kappa + c_[j].to_double();
        return v;
    }

    // Exact evaluation at a rational coupling value.
    Rational eval_exact(const Rational& kappa) const {
        Rational v(0);
        for (size_t j = c_.size(); j-- > 0;) v = v * kappa + c_[j];
        return v;
    }

    // Renders as e.g. "3/4 + 2*k - 21/8*k^2"; "0" for the zero polynomial.
    std::string str(const std::string& var = "k") const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero()) continue;
            Rational c = c_[j];
            if (first) {
                if (c.is_negative()) {
                    out += "-";
                    c = -c;
                }
            } else {
                out += c.is_negative() ? " - " : " + ";
                if (c.is_negative()) c = -c;
            }
            first = false;
            if (j == 0) {
                out += c.str();
            } else {
                if (!(c == Rational(1))) out += c.str() + "*";
                out += var;
                if (j > 1) out += "^" + std::to_string(j);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace nlosc
