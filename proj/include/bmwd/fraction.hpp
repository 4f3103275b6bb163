#pragma once

#include "bmwd/laurent.hpp"

namespace bmwd {

// Quotient of Laurent polynomials kept in a canonical form:
//  - zero is 0/1
//  - monomial denominators are absorbed into the numerator (they are units)
//  - exact polynomial division is attempted; on success the denominator is 1
//  - otherwise the denominator is primitive with positive leading coefficient
// Equality falls back to cross multiplication, so fractions that escape the
// division pass still compare correctly.
class ScalarFraction {
public:
    ScalarFraction() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
    ScalarFraction(const Rational& c) : num_(LaurentPoly::constant(c)), den_(LaurentPoly::one()) {}
    ScalarFraction(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}
    ScalarFraction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static ScalarFraction zero() { return ScalarFraction(); }
    static ScalarFraction one() { return ScalarFraction(Rational(1)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == LaurentPoly::one(); }

    ScalarFraction operator-() const {
        ScalarFraction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend ScalarFraction operator+(const ScalarFraction& a, const ScalarFraction& b) {
        return ScalarFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ScalarFraction operator-(const ScalarFraction& a, const ScalarFraction& b) {
        return ScalarFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ScalarFraction operator*(const ScalarFraction& a, const ScalarFraction& b) {
        return ScalarFraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend ScalarFraction operator/(const ScalarFraction& a, const ScalarFraction& b) {
        if (b.is_zero()) throw std::domain_error("ScalarFraction: division by zero");
        return ScalarFraction(a.num_ * b.den_, a.den_ * b.num_);
    }
    ScalarFraction& operator+=(const ScalarFraction& o) { return *this = *this + o; }
    ScalarFraction& operator-=(const ScalarFraction& o) { return *this = *this - o; }
    ScalarFraction& operator*=(const ScalarFraction& o) { return *this = *this * o; }
    ScalarFraction& operator/=(const ScalarFraction& o) { return *this = *this / o; }

    ScalarFraction inverse() const {
        if (is_zero()) throw std::domain_error("ScalarFraction: inverse of zero");
        return ScalarFraction(den_, num_);
    }

    bool operator==(const ScalarFraction& o) const {
        if (num_ == o.num_ && den_ == o.den_) return true;
        return num_ * o.den_ == o.num_ * den_;
    }
    bool operator!=(const ScalarFraction& o) const { return !(*this == o); }

    Rational eval(const std::array<Rational, kNumVars>& point) const {
        Rational d = den_.eval(point);
        if (d == 0) throw std::domain_error("ScalarFraction: denominator vanishes at point");
        return num_.eval(point) / d;
    }

    // Pins one variable to a rational value and renormalizes.
    ScalarFraction subst(Var v, const Rational& value) const {
        return ScalarFraction(num_.subst(v, value), den_.subst(v, value));
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    // Accepts a plain poly literal or "(poly)/(poly)".
    static ScalarFraction parse(const std::string& s) {
        std::size_t a = s.find_first_not_of(" \t");
        if (a != std::string::npos && s[a] == '(') {
            int depth = 0;
            for (std::size_t i = a; i < s.size(); ++i) {
                if (s[i] == '(') ++depth;
                else if (s[i] == ')' && --depth == 0) {
                    std::size_t j = s.find_first_not_of(" \t", i + 1);
                    if (j != std::string::npos && s[j] == '/') {
                        std::size_t k = s.find_first_not_of(" \t", j + 1);
                        std::size_t e = s.find_last_of(')');
                        if (k == std::string::npos || s[k] != '(' || e == std::string::npos || e <= k)
                            throw std::invalid_argument("fraction parse: expected (poly)/(poly)");
                        return ScalarFraction(LaurentPoly::parse(s.substr(a + 1, i - a - 1)),
                                              LaurentPoly::parse(s.substr(k + 1, e - k - 1)));
                    }
                    break;
                }
            }
        }
        return ScalarFraction(LaurentPoly::parse(s));
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("ScalarFraction: zero denominator");
        if (num_.is_zero()) { den_ = LaurentPoly::one(); return; }
        // Pull the monomial part of the denominator into the numerator.
        Expo m = den_.min_exponents();
        bool shift = false;
        for (int i = 0; i < kNumVars; ++i) shift = shift || m[i] != 0;
        if (shift) {
            Expo neg;
            for (int i = 0; i < kNumVars; ++i) neg[i] = -m[i];
            den_ = den_.shifted(neg);
            num_ = num_.shifted(neg);
        }
        if (den_.is_constant()) {
            num_ *= Rational(1) / den_.constant_value();
            den_ = LaurentPoly::one();
            return;
        }
        if (auto q = try_divide_exact(num_, den_)) {
            num_ = *q;
            den_ = LaurentPoly::one();
            return;
        }
        Rational scale = den_.content();
        if (den_.lead_coefficient() < 0) scale = -scale;
        if (scale != 1) {
            Rational inv = Rational(1) / scale;
            num_ *= inv;
            den_ *= inv;
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

// Cross-multiplication equality on raw numerator/denominator pairs.
inline bool frac_eq(const LaurentPoly& num_a, const LaurentPoly& den_a, const LaurentPoly& num_b,
                    const LaurentPoly& den_b) {
    if (den_a.is_zero() || den_b.is_zero()) throw std::domain_error("frac_eq: zero denominator");
    return num_a * den_b == num_b * den_a;
}

} // namespace bmwd
