#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace bmwd {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("rational_pow: negative power of zero");
        return rational_pow(Rational(denominator(base), numerator(base)), -e);
    }
    Rational acc(1), b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Accepts "n" or "n/d" with optional sign on the numerator.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
    }
}

inline std::string rational_to_string(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) out += "/" + denominator(r).str();
    return out;
}

inline BigInt gcd_big(BigInt a, BigInt b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

} // namespace bmwd
