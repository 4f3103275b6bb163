#pragma once

#include "bmwd/rational.hpp"

#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bmwd {

// Sparse Laurent polynomial over a fixed variable set.
// Variable order: q, l, x, A, p0.  Exponents may be negative.
constexpr int kNumVars = 5;
using Expo = std::array<int, kNumVars>;

enum class Var : int { q = 0, l = 1, x = 2, A = 3, p0 = 4 };

inline const char* var_name(int v) {
    static const char* names[kNumVars] = {"q", "l", "x", "A", "p0"};
    return names[v];
}

class LaurentPoly {
public:
    using TermMap = std::map<Expo, Rational>;

    LaurentPoly() = default;

    static LaurentPoly constant(const Rational& c) {
        LaurentPoly p;
        if (c != 0) p.terms_[Expo{}] = c;
        return p;
    }
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(Rational(1)); }

    static LaurentPoly variable(Var v, int exp = 1) {
        LaurentPoly p;
        if (exp == 0) return one();
        Expo e{};
        e[static_cast<int>(v)] = exp;
        p.terms_[e] = Rational(1);
        return p;
    }

    static LaurentPoly monomial(const Expo& e, const Rational& c) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
    }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("LaurentPoly: not a constant");
        return terms_.begin()->second;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) {
            auto it = terms_.find(e);
            if (it == terms_.end()) {
                terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += (-o); }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Expo e;
                for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    Rational c = ca * cb;
                    if (c != 0) r.terms_.emplace(e, std::move(c));
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& operator*=(const Rational& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Units in the Laurent ring are exactly the single-term polynomials.
    bool is_unit() const { return terms_.size() == 1; }

    LaurentPoly unit_inverse() const {
        if (!is_unit()) throw std::domain_error("LaurentPoly: inverse of non-monomial");
        const auto& [e, c] = *terms_.begin();
        Expo ei;
        for (int i = 0; i < kNumVars; ++i) ei[i] = -e[i];
        return monomial(ei, Rational(denominator(c), numerator(c)));
    }

    LaurentPoly pow(long e) const {
        if (e < 0) return unit_inverse().pow(-e);
        LaurentPoly acc = one(), b = *this;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    // Largest exponent of the given variable over all terms.
    int top_degree(Var v) const {
        if (terms_.empty()) throw std::domain_error("top_degree of zero polynomial");
        int vi = static_cast<int>(v), best = terms_.begin()->first[vi];
        for (const auto& [e, c] : terms_) best = std::max(best, e[vi]);
        return best;
    }
    int min_degree(Var v) const {
        if (terms_.empty()) throw std::domain_error("min_degree of zero polynomial");
        int vi = static_cast<int>(v), best = terms_.begin()->first[vi];
        for (const auto& [e, c] : terms_) best = std::min(best, e[vi]);
        return best;
    }

    // Substitute a rational value for one variable; the rest stay symbolic.
    LaurentPoly subst(Var v, const Rational& value) const {
        int vi = static_cast<int>(v);
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            if (e[vi] < 0 && value == 0)
                throw std::domain_error(std::string("subst: zero value for ") + var_name(vi) +
                                        " with negative exponent");
            Rational coef = c * rational_pow(value, e[vi]);
            if (coef == 0) continue;
            Expo e2 = e;
            e2[vi] = 0;
            auto it = r.terms_.find(e2);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e2, std::move(coef));
            } else {
                it->second += coef;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        return r;
    }

    // Full evaluation; every variable appearing must have a value.
    Rational eval(const std::array<Rational, kNumVars>& point) const {
        Rational total(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < kNumVars; ++i) {
                if (e[i] == 0) continue;
                if (point[i] == 0 && e[i] < 0)
                    throw std::domain_error(std::string("eval: zero value for ") + var_name(i) +
                                            " with negative exponent");
                t *= rational_pow(point[i], e[i]);
            }
            total += t;
        }
        return total;
    }

    // gcd of coefficient numerators over lcm of denominators; positive, zero poly gives 0.
    Rational content() const {
        if (terms_.empty()) return Rational(0);
        BigInt g = 0, l = 1;
        for (const auto& [e, c] : terms_) {
            g = gcd_big(g, boost::multiprecision::abs(numerator(c)));
            l = lcm_big(l, denominator(c));
        }
        return Rational(g, l);
    }

    // Coefficient of the lex-largest exponent vector.
    const Rational& lead_coefficient() const {
        if (terms_.empty()) throw std::domain_error("lead_coefficient of zero polynomial");
        return terms_.rbegin()->second;
    }
    const Expo& lead_exponent() const {
        if (terms_.empty()) throw std::domain_error("lead_exponent of zero polynomial");
        return terms_.rbegin()->first;
    }

    Expo min_exponents() const {
        Expo m{};
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) { m = e; first = false; continue; }
            for (int i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], e[i]);
        }
        return m;
    }

    LaurentPoly shifted(const Expo& s) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            Expo e2;
            for (int i = 0; i < kNumVars; ++i) e2[i] = e[i] + s[i];
            r.terms_.emplace(e2, c);
        }
        return r;
    }

    std::string to_string() const;
    static LaurentPoly parse(const std::string& s);

private:
    TermMap terms_;
};

// Exact division in the Laurent ring; nullopt when b does not divide a.
inline std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("try_divide_exact: division by zero");
    if (a.is_zero()) return LaurentPoly::zero();
    Expo ma = a.min_exponents(), mb = b.min_exponents();
    Expo na, nb, back;
    for (int i = 0; i < kNumVars; ++i) {
        na[i] = -ma[i];
        nb[i] = -mb[i];
        back[i] = ma[i] - mb[i];
    }
    LaurentPoly r = a.shifted(na);        // ordinary polynomial now
    LaurentPoly d = b.shifted(nb);
    const Expo& de = d.lead_exponent();
    const Rational& dc = d.lead_coefficient();
    LaurentPoly quot;
    while (!r.is_zero()) {
        const Expo& re = r.lead_exponent();
        Expo te;
        for (int i = 0; i < kNumVars; ++i) {
            te[i] = re[i] - de[i];
            if (te[i] < 0) return std::nullopt;
        }
        LaurentPoly t = LaurentPoly::monomial(te, r.lead_coefficient() / dc);
        quot += t;
        r -= t * d;
    }
    return quot.shifted(back);
}

inline LaurentPoly poly_q() { return LaurentPoly::variable(Var::q); }
inline LaurentPoly poly_l() { return LaurentPoly::variable(Var::l); }
inline LaurentPoly poly_x() { return LaurentPoly::variable(Var::x); }
inline LaurentPoly poly_A() { return LaurentPoly::variable(Var::A); }
inline LaurentPoly poly_p0() { return LaurentPoly::variable(Var::p0); }
// delta = q - q^-1
inline LaurentPoly poly_delta() {
    return LaurentPoly::variable(Var::q) - LaurentPoly::variable(Var::q, -1);
}

namespace detail {

class PolyLexer {
public:
    explicit PolyLexer(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        if (pos_ >= s_.size()) throw std::invalid_argument("poly parse: unexpected end of input");
        return s_[pos_++];
    }
    bool accept(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    BigInt read_uint() {
        skip_ws();
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        if (digits.empty())
            throw std::invalid_argument("poly parse: expected digits at '" + rest() + "'");
        return BigInt(digits);
    }
    long read_int() {
        skip_ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        BigInt v = read_uint();
        if (v > 1000000) throw std::invalid_argument("poly parse: exponent too large");
        long out = v.convert_to<long>();
        return neg ? -out : out;
    }
    Rational read_rational() {
        BigInt num = read_uint();
        if (accept('/')) {
            BigInt den = read_uint();
            if (den == 0) throw std::invalid_argument("poly parse: zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    std::string rest() const { return s_.substr(pos_); }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

inline int read_var_index(PolyLexer& lx) {
    char c = lx.get();
    switch (c) {
        case 'q': return 0;
        case 'l': return 1;
        case 'x': return 2;
        case 'A': return 3;
        case 'p':
            if (lx.accept('0')) return 4;
            throw std::invalid_argument("poly parse: unknown variable 'p" + lx.rest() + "'");
        default:
            throw std::invalid_argument(std::string("poly parse: unknown variable '") + c + "'");
    }
}

// term := factor ('*' factor)* ; factor := rational | var ('^' int)?
inline LaurentPoly parse_term(PolyLexer& lx) {
    LaurentPoly acc = LaurentPoly::one();
    bool first = true;
    while (true) {
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            acc *= LaurentPoly::constant(lx.read_rational());
        } else if (c == 'q' || c == 'l' || c == 'x' || c == 'A' || c == 'p') {
            int vi = read_var_index(lx);
            int exp = 1;
            if (lx.accept('^')) exp = static_cast<int>(lx.read_int());
            acc *= LaurentPoly::variable(static_cast<Var>(vi), exp);
        } else if (first) {
            throw std::invalid_argument("poly parse: expected term at '" + lx.rest() + "'");
        } else {
            throw std::invalid_argument("poly parse: expected factor at '" + lx.rest() + "'");
        }
        first = false;
        if (!lx.accept('*')) break;
    }
    return acc;
}

} // namespace detail

inline LaurentPoly LaurentPoly::parse(const std::string& s) {
    detail::PolyLexer lx(s);
    LaurentPoly result;
    bool neg = lx.accept('-');
    while (true) {
        LaurentPoly t = detail::parse_term(lx);
        if (neg) t = -t;
        result += t;
        if (lx.done()) break;
        char c = lx.get();
        if (c == '+') neg = false;
        else if (c == '-') neg = true;
        else throw std::invalid_argument("poly parse: expected '+' or '-' before '" + lx.rest() + "'");
    }
    return result;
}

inline std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = false;
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] != 0) has_var = true;
        if (!has_var || a != 1) {
            os << rational_to_string(a);
            if (has_var) os << "*";
        }
        bool sep = false;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (sep) os << "*";
            sep = true;
            os << var_name(i);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

} // namespace bmwd
