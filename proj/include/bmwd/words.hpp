#pragma once

#include "bmwd/fraction.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmwd {

enum class GenFamily { X, Xinv, E, Y, Yinv };

// One generator occurrence.  Y carries no index; we store 0 there.
struct GenToken {
    GenFamily family = GenFamily::X;
    int index = 0;

    friend bool operator==(const GenToken& a, const GenToken& b) {
        return a.family == b.family && a.index == b.index;
    }
    friend bool operator<(const GenToken& a, const GenToken& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.index < b.index;
    }

    std::string to_string() const {
        switch (family) {
            case GenFamily::X: return "X" + std::to_string(index);
            case GenFamily::Xinv: return "X" + std::to_string(index) + "^-1";
            case GenFamily::E: return "e" + std::to_string(index);
            case GenFamily::Y: return "Y";
            case GenFamily::Yinv: return "Y^-1";
        }
        throw std::logic_error("GenToken: bad family");
    }
};

inline GenToken tokX(int i) { return {GenFamily::X, i}; }
inline GenToken tokXinv(int i) { return {GenFamily::Xinv, i}; }
inline GenToken tokE(int i) { return {GenFamily::E, i}; }
inline GenToken tokY() { return {GenFamily::Y, 0}; }
inline GenToken tokYinv() { return {GenFamily::Yinv, 0}; }

struct Word {
    std::vector<GenToken> tokens;

    Word() = default;
    Word(std::initializer_list<GenToken> t) : tokens(t) {}
    explicit Word(std::vector<GenToken> t) : tokens(std::move(t)) {}

    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }

    friend Word operator*(const Word& a, const Word& b) {
        Word r = a;
        r.tokens.insert(r.tokens.end(), b.tokens.begin(), b.tokens.end());
        return r;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.tokens == b.tokens; }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.tokens.size() != b.tokens.size()) return a.tokens.size() < b.tokens.size();
        return a.tokens < b.tokens;
    }

    std::string to_string() const {
        if (tokens.empty()) return "1";
        std::ostringstream os;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i) os << " ";
            os << tokens[i].to_string();
        }
        return os.str();
    }
};

// Finite linear combination of words with ScalarFraction coefficients,
// kept with zero coefficients erased.
class LinComb {
public:
    using TermMap = std::map<Word, ScalarFraction>;

    LinComb() = default;

    static LinComb zero() { return LinComb(); }
    static LinComb term(const Word& w, const ScalarFraction& c = ScalarFraction::one()) {
        LinComb r;
        if (!c.is_zero()) r.terms_[w] = c;
        return r;
    }
    static LinComb unit(const ScalarFraction& c = ScalarFraction::one()) { return term(Word{}, c); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Word& w, const ScalarFraction& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

    LinComb operator-() const {
        LinComb r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    friend LinComb operator*(const LinComb& a, const LinComb& b) {
        LinComb r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
        return r;
    }
    friend LinComb operator*(const ScalarFraction& s, const LinComb& a) {
        LinComb r;
        if (s.is_zero()) return r;
        for (const auto& [w, c] : a.terms_) r.add_term(w, s * c);
        return r;
    }

    bool operator==(const LinComb& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin(), jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (!(it->first == jt->first)) return false;
            if (it->second != jt->second) return false;
        }
        return true;
    }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    // Deterministic canonical rendering; doubles as the search key in the
    // rewriting engine.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (c.is_polynomial()) os << "(" << c.num().to_string() << ")";
            else os << "(" << c.num().to_string() << ")/(" << c.den().to_string() << ")";
            os << " " << w.to_string();
        }
        return os.str();
    }

    static LinComb parse(const std::string& s);

private:
    TermMap terms_;
};

namespace detail {

// token := 'Y' ['^-1'] | 'X' digits ['^-1'] | 'e' digits | '1'
inline bool parse_word_tokens(const std::string& s, std::size_t& pos, Word& out) {
    while (pos < s.size()) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos >= s.size()) break;
        char c = s[pos];
        if (c == '+' || c == '-' || c == '(') return true; // caller handles
        if (c == '1') {
            ++pos;
            continue; // identity factor
        }
        if (c == 'Y') {
            ++pos;
            if (s.compare(pos, 3, "^-1") == 0) {
                pos += 3;
                out.tokens.push_back(tokYinv());
            } else {
                out.tokens.push_back(tokY());
            }
            continue;
        }
        if (c == 'X' || c == 'e') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos)
                throw std::invalid_argument("word parse: generator index missing near '" +
                                            s.substr(start) + "'");
            int idx = std::stoi(s.substr(start, pos - start));
            bool inv = false;
            if (s.compare(pos, 3, "^-1") == 0) {
                pos += 3;
                inv = true;
            }
            if (c == 'X') out.tokens.push_back(inv ? tokXinv(idx) : tokX(idx));
            else if (inv) throw std::invalid_argument("word parse: e generators are not invertible");
            else out.tokens.push_back(tokE(idx));
            continue;
        }
        throw std::invalid_argument(std::string("word parse: unexpected character '") + c + "'");
    }
    return true;
}

// scalar prefix := '(' poly ')' ['/' '(' poly ')']
inline ScalarFraction parse_scalar_prefix(const std::string& s, std::size_t& pos) {
    auto read_group = [&](const char* what) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos >= s.size() || s[pos] != '(')
            throw std::invalid_argument(std::string("lincomb parse: expected ") + what);
        int depth = 0;
        std::size_t open = pos;
        for (; pos < s.size(); ++pos) {
            if (s[pos] == '(') ++depth;
            else if (s[pos] == ')' && --depth == 0) {
                std::string inner = s.substr(open + 1, pos - open - 1);
                ++pos;
                return inner;
            }
        }
        throw std::invalid_argument("lincomb parse: unbalanced parentheses");
    };
    std::string num = read_group("(poly)");
    std::size_t save = pos;
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string den = read_group("(poly) after /");
        return ScalarFraction(LaurentPoly::parse(num), LaurentPoly::parse(den));
    }
    pos = save;
    return ScalarFraction(LaurentPoly::parse(num));
}

} // namespace detail

// lincomb := ['-'] term (('+'|'-') term)* ; term := [scalar-prefix] tokens
inline LinComb LinComb::parse(const std::string& s) {
    LinComb result;
    std::size_t pos = 0;
    bool any = false;
    bool neg = false;
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '-') { neg = true; ++pos; }
    while (true) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos >= s.size()) break;
        ScalarFraction coef = ScalarFraction::one();
        if (s[pos] == '(') coef = detail::parse_scalar_prefix(s, pos);
        Word w;
        detail::parse_word_tokens(s, pos, w);
        if (neg) coef = -coef;
        result.add_term(w, coef);
        any = true;
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos >= s.size()) break;
        if (s[pos] == '+') { neg = false; ++pos; }
        else if (s[pos] == '-') { neg = true; ++pos; }
        else throw std::invalid_argument("lincomb parse: expected '+' or '-' at '" + s.substr(pos) + "'");
    }
    if (!any) throw std::invalid_argument("lincomb parse: empty input");
    return result;
}

enum class AlgebraKind { WD, WB, ZD, ZB, HD, HB, BD, BBprime };

inline std::string algebra_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::WD: return "WD";
        case AlgebraKind::WB: return "WB";
        case AlgebraKind::ZD: return "ZD";
        case AlgebraKind::ZB: return "ZB";
        case AlgebraKind::HD: return "HD";
        case AlgebraKind::HB: return "HB";
        case AlgebraKind::BD: return "BD";
        case AlgebraKind::BBprime: return "BBprime";
    }
    throw std::logic_error("algebra_name: bad kind");
}

inline AlgebraKind parse_algebra(const std::string& s) {
    for (AlgebraKind k : {AlgebraKind::WD, AlgebraKind::WB, AlgebraKind::ZD, AlgebraKind::ZB,
                          AlgebraKind::HD, AlgebraKind::HB, AlgebraKind::BD, AlgebraKind::BBprime})
        if (algebra_name(k) == s) return k;
    throw std::invalid_argument("unknown algebra '" + s + "'");
}

struct Relation {
    std::string label;
    LinComb lhs, rhs;
};

struct Presentation {
    AlgebraKind kind;
    std::size_t n = 0;
    std::vector<GenToken> alphabet;
    std::vector<Relation> relations;
};

namespace detail {

class PresentationBuilder {
public:
    explicit PresentationBuilder(Presentation& p) : p_(p) {}

    void rel(const std::string& label, const LinComb& lhs, const LinComb& rhs) {
        p_.relations.push_back({label, lhs, rhs});
    }
    void rel(const std::string& label, const Word& lhs, const Word& rhs) {
        rel(label, LinComb::term(lhs), LinComb::term(rhs));
    }
    void braid(const std::string& label, GenToken a, GenToken b) {
        rel(label, Word{a, b, a}, Word{b, a, b});
    }
    void commute(const std::string& label, GenToken a, GenToken b) {
        rel(label, Word{a, b}, Word{b, a});
    }
    void inverse_pair(const std::string& base, GenToken g, GenToken ginv) {
        rel("inv[" + base + "]", Word{g, ginv}, Word{});
        rel("inv'[" + base + "]", Word{ginv, g}, Word{});
    }

private:
    Presentation& p_;
};

inline std::string ij(int i, int j) {
    return "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}
inline std::string ix(int i) { return "[" + std::to_string(i) + "]"; }

} // namespace detail

// Defining relations for the eight built-in presentations.  Index conditions
// on the 0 node follow the D-type Coxeter graph, where node 0 is adjacent to
// node 2 only; the braid/commutation split between (0,1), (0,2) and (0,j>2)
// reflects that.
inline Presentation builtin_presentation(AlgebraKind kind, std::size_t n) {
    if (n < 2) throw std::invalid_argument("builtin_presentation: need n >= 2");
    const int N = static_cast<int>(n);
    Presentation p;
    p.kind = kind;
    p.n = n;
    detail::PresentationBuilder b(p);

    const ScalarFraction lam{poly_l()};
    const ScalarFraction lam_inv{LaurentPoly::variable(Var::l, -1)};
    const ScalarFraction delta{poly_delta()};
    const ScalarFraction xval{poly_x()};
    const ScalarFraction Aval{poly_A()};
    const ScalarFraction qv{poly_q()};
    const ScalarFraction qm1{poly_q() - LaurentPoly::one()};
    const ScalarFraction p0sq{poly_p0() * poly_p0()};

    auto d_type_x_relations = [&](auto braid_label, auto commute_label) {
        for (int i = 1; i + 1 < N; ++i) b.braid(braid_label(i, i + 1), tokX(i), tokX(i + 1));
        if (N >= 3) b.braid(braid_label(0, 2), tokX(0), tokX(2));
        b.commute(commute_label(0, 1), tokX(0), tokX(1));
        for (int j = 3; j < N; ++j) b.commute(commute_label(0, j), tokX(0), tokX(j));
        for (int i = 1; i < N; ++i)
            for (int j = i + 2; j < N; ++j) b.commute(commute_label(i, j), tokX(i), tokX(j));
    };
    auto b_type_x_relations = [&]() {
        b.rel("hb1", Word{tokY(), tokX(1), tokY(), tokX(1)}, Word{tokX(1), tokY(), tokX(1), tokY()});
        for (int i = 1; i + 1 < N; ++i) b.braid("hb2" + detail::ij(i, i + 1), tokX(i), tokX(i + 1));
        for (int i = 2; i < N; ++i) b.commute("hb3" + detail::ix(i), tokY(), tokX(i));
        for (int i = 1; i < N; ++i)
            for (int j = i + 2; j < N; ++j) b.commute("hb4" + detail::ij(i, j), tokX(i), tokX(j));
    };

    switch (kind) {
        case AlgebraKind::WD: {
            for (int i = 0; i < N; ++i) p.alphabet.push_back(tokX(i));
            d_type_x_relations(
                [](int i, int j) { return (i == 0 ? "hd2" : "hd1" + detail::ij(i, j)); },
                [](int i, int j) { return (i == 0 ? "hd40" + detail::ix(j) : "hd4" + detail::ij(i, j)); });
            for (int i = 0; i < N; ++i) b.rel("sq" + detail::ix(i), Word{tokX(i), tokX(i)}, Word{});
            break;
        }
        case AlgebraKind::ZD: {
            for (int i = 0; i < N; ++i) p.alphabet.push_back(tokX(i));
            for (int i = 0; i < N; ++i) p.alphabet.push_back(tokXinv(i));
            d_type_x_relations(
                [](int i, int j) { return (i == 0 ? "hd2" : "hd1" + detail::ij(i, j)); },
                [](int i, int j) { return (i == 0 ? "hd40" + detail::ix(j) : "hd4" + detail::ij(i, j)); });
            for (int i = 0; i < N; ++i) b.inverse_pair("X" + std::to_string(i), tokX(i), tokXinv(i));
            break;
        }
        case AlgebraKind::WB: {
            p.alphabet.push_back(tokY());
            for (int i = 1; i < N; ++i) p.alphabet.push_back(tokX(i));
            b_type_x_relations();
            for (int i = 1; i < N; ++i) b.rel("sq" + detail::ix(i), Word{tokX(i), tokX(i)}, Word{});
            b.rel("sqY", Word{tokY(), tokY()}, Word{});
            break;
        }
        case AlgebraKind::ZB: {
            p.alphabet.push_back(tokY());
            p.alphabet.push_back(tokYinv());
            for (int i = 1; i < N; ++i) p.alphabet.push_back(tokX(i));
            for (int i = 1; i < N; ++i) p.alphabet.push_back(tokXinv(i));
            b_type_x_relations();
            b.inverse_pair("Y", tokY(), tokYinv());
            for (int i = 1; i < N; ++i) b.inverse_pair("X" + std::to_string(i), tokX(i), tokXinv(i));
            break;
        }
        case AlgebraKind::HD: {
            for (int i = 0; i < N; ++i) p.alphabet.push_back(tokX(i));
            d_type_x_relations(
                [](int i, int j) { return (i == 0 ? "hd2" : "hd1" + detail::ij(i, j)); },
                [](int i, int j) { return (i == 0 ? "hd40" + detail::ix(j) : "hd4" + detail::ij(i, j)); });
            for (int i = 0; i < N; ++i)
                b.rel("hd" + detail::ix(i), LinComb::term(Word{tokX(i), tokX(i)}),
                      qm1 * LinComb::term(Word{tokX(i)}) + LinComb::unit(qv));
            break;
        }
        case AlgebraKind::HB: {
            p.alphabet.push_back(tokY());
            for (int i = 1; i < N; ++i) p.alphabet.push_back(tokX(i));
            b_type_x_relations();
            for (int i = 1; i < N; ++i)
                b.rel("hb5" + detail::ix(i), LinComb::term(Word{tokX(i), tokX(i)}),
                      qm1 * LinComb::term(Word{tokX(i)}) + LinComb::unit(qv));
            // Y quadratic with p1 = -p0: Y^2 = (p0+p1) Y - p0 p1 = p0^2.
            b.rel("hb6", LinComb::term(Word{tokY(), tokY()}), LinComb::unit(p0sq));
            break;
        }
        case AlgebraKind::BD: {
            for (int i = 0; i < N; ++i) p.alphabet.push_back(tokX(i));
            for (int i = 0; i < N; ++i) p.alphabet.push_back(tokXinv(i));
            for (int i = 0; i < N; ++i) p.alphabet.push_back(tokE(i));
            for (int i = 1; i + 1 < N; ++i) b.braid("bd1" + detail::ij(i, i + 1), tokX(i), tokX(i + 1));
            if (N >= 3) b.braid("bd2", tokX(0), tokX(2));
            b.commute("bd3", tokX(0), tokX(1));
            b.rel("bd3a", Word{tokE(0), tokX(1)}, Word{tokE(0)});
            b.rel("bd3a'", Word{tokX(1), tokE(0)}, Word{tokE(0)});
            b.rel("bd3b", Word{tokE(1), tokX(0)}, Word{tokE(1)});
            b.rel("bd3b'", Word{tokX(0), tokE(1)}, Word{tokE(1)});
            for (int i = 1; i < N; ++i)
                for (int j = i + 2; j < N; ++j) b.commute("bd4" + detail::ij(i, j), tokX(i), tokX(j));
            for (int j = 3; j < N; ++j) b.commute("bd4" + detail::ij(0, j), tokX(0), tokX(j));
            for (int i = 0; i < N; ++i) {
                b.rel("def4" + detail::ix(i), LinComb::term(Word{tokX(i), tokE(i)}),
                      lam * LinComb::term(Word{tokE(i)}));
                b.rel("def4'" + detail::ix(i), LinComb::term(Word{tokE(i), tokX(i)}),
                      lam * LinComb::term(Word{tokE(i)}));
            }
            auto tangle_pair = [&](const std::string& plus, const std::string& minus, int i, int j) {
                b.rel(plus, LinComb::term(Word{tokE(i), tokX(j), tokE(i)}),
                      lam_inv * LinComb::term(Word{tokE(i)}));
                b.rel(minus, LinComb::term(Word{tokE(i), tokXinv(j), tokE(i)}),
                      lam * LinComb::term(Word{tokE(i)}));
            };
            for (int i = 1; i < N; ++i)
                for (int j : {i - 1, i + 1})
                    if (j >= 1 && j < N)
                        tangle_pair("def5" + detail::ij(i, j), "def5-" + detail::ij(i, j), i, j);
            if (N >= 3) {
                tangle_pair("def5b", "def5b-", 0, 2);
                tangle_pair("def5v", "def5v-", 2, 0);
            }
            for (int i = 0; i < N; ++i)
                b.rel("lem1a" + detail::ix(i), LinComb::term(Word{tokE(i), tokE(i)}),
                      xval * LinComb::term(Word{tokE(i)}));
            for (int i = 0; i < N; ++i)
                b.rel("lem1d" + detail::ix(i), LinComb::term(Word{tokXinv(i)}),
                      LinComb::term(Word{tokX(i)}) - LinComb::unit(delta) +
                          delta * LinComb::term(Word{tokE(i)}));
            for (int i = 1; i < N; ++i)
                for (int j = i + 2; j < N; ++j) b.commute("lem1f" + detail::ij(i, j), tokE(i), tokE(j));
            for (int j = 3; j < N; ++j) b.commute("lem1f" + detail::ij(0, j), tokE(0), tokE(j));
            b.commute("lem1fb", tokE(0), tokE(1));
            auto hook_pair = [&](const std::string& plus, const std::string& minus, int i, int j) {
                b.rel(plus, Word{tokE(i), tokX(j), tokX(i)}, Word{tokX(j), tokX(i), tokE(j)});
                b.rel(minus, Word{tokE(i), tokX(j), tokX(i)}, Word{tokXinv(j), tokXinv(i), tokE(j)});
            };
            for (int i = 1; i < N; ++i)
                for (int j : {i - 1, i + 1})
                    if (j >= 1 && j < N)
                        hook_pair("lem1h" + detail::ij(i, j), "lem1h-" + detail::ij(i, j), i, j);
            if (N >= 3) {
                hook_pair("lem1ha", "lem1ha-", 0, 2);
                hook_pair("lem1ha2", "lem1ha2-", 2, 0);
            }
            for (int i = 1; i < N; ++i)
                for (int j : {i - 1, i + 1})
                    if (j >= 1 && j < N)
                        b.rel("lem1l" + detail::ij(i, j), Word{tokE(i), tokE(j), tokE(i)},
                              Word{tokE(i)});
            if (N >= 3) {
                b.rel("lem1la", Word{tokE(0), tokE(2), tokE(0)}, Word{tokE(0)});
                b.rel("lem1lb", Word{tokE(2), tokE(0), tokE(2)}, Word{tokE(2)});
            }
            for (int i = 0; i < N; ++i) b.inverse_pair("X" + std::to_string(i), tokX(i), tokXinv(i));
            break;
        }
        case AlgebraKind::BBprime: {
            // B-type BMW specialized at q0 = 1/lambda, q1 = 0, so Y^2 = 1/lambda
            // and e1 Y e1 = A e1 with A a free parameter.
            p.alphabet.push_back(tokY());
            for (int i = 1; i < N; ++i) p.alphabet.push_back(tokX(i));
            for (int i = 1; i < N; ++i) p.alphabet.push_back(tokXinv(i));
            for (int i = 1; i < N; ++i) p.alphabet.push_back(tokE(i));
            b.rel("yy", LinComb::term(Word{tokY(), tokY()}), LinComb::unit(lam_inv));
            b.rel("hb1", Word{tokY(), tokX(1), tokY(), tokX(1)},
                  Word{tokX(1), tokY(), tokX(1), tokY()});
            for (int i = 1; i + 1 < N; ++i) b.braid("hb2" + detail::ij(i, i + 1), tokX(i), tokX(i + 1));
            for (int i = 2; i < N; ++i) {
                b.commute("hb3" + detail::ix(i), tokY(), tokX(i));
                b.commute("hb3e" + detail::ix(i), tokY(), tokE(i));
            }
            for (int i = 1; i < N; ++i)
                for (int j = i + 2; j < N; ++j) {
                    b.commute("hb4" + detail::ij(i, j), tokX(i), tokX(j));
                    b.commute("exe" + detail::ij(i, j), tokE(i), tokX(j));
                    b.commute("ee" + detail::ij(i, j), tokE(i), tokE(j));
                }
            for (int i = 1; i < N; ++i) {
                b.rel("twist" + detail::ix(i), LinComb::term(Word{tokX(i), tokE(i)}),
                      lam * LinComb::term(Word{tokE(i)}));
                b.rel("twist'" + detail::ix(i), LinComb::term(Word{tokE(i), tokX(i)}),
                      lam * LinComb::term(Word{tokE(i)}));
                b.rel("idem" + detail::ix(i), LinComb::term(Word{tokE(i), tokE(i)}),
                      xval * LinComb::term(Word{tokE(i)}));
                b.rel("kauff" + detail::ix(i), LinComb::term(Word{tokXinv(i)}),
                      LinComb::term(Word{tokX(i)}) - LinComb::unit(delta) +
                          delta * LinComb::term(Word{tokE(i)}));
            }
            for (int i = 1; i < N; ++i)
                for (int j : {i - 1, i + 1}) {
                    if (j < 1 || j >= N) continue;
                    b.rel("dl" + detail::ij(i, j), LinComb::term(Word{tokE(i), tokX(j), tokE(i)}),
                          lam_inv * LinComb::term(Word{tokE(i)}));
                    b.rel("dl-" + detail::ij(i, j), LinComb::term(Word{tokE(i), tokXinv(j), tokE(i)}),
                          lam * LinComb::term(Word{tokE(i)}));
                    b.rel("hook" + detail::ij(i, j), Word{tokE(i), tokX(j), tokX(i)},
                          Word{tokX(j), tokX(i), tokE(j)});
                    b.rel("hook-" + detail::ij(i, j), Word{tokE(i), tokX(j), tokX(i)},
                          Word{tokXinv(j), tokXinv(i), tokE(j)});
                    b.rel("tl" + detail::ij(i, j), Word{tokE(i), tokE(j), tokE(i)}, Word{tokE(i)});
                }
            b.rel("by1", Word{tokE(1), tokY(), tokX(1)}, Word{tokE(1), tokY()});
            b.rel("by2", Word{tokX(1), tokY(), tokE(1)}, Word{tokY(), tokE(1)});
            b.rel("by3", Word{tokY(), tokE(1), tokY(), tokE(1)}, Word{tokE(1), tokY(), tokE(1), tokY()});
            b.rel("byA", LinComb::term(Word{tokE(1), tokY(), tokE(1)}),
                  Aval * LinComb::term(Word{tokE(1)}));
            for (int i = 1; i < N; ++i) b.inverse_pair("X" + std::to_string(i), tokX(i), tokXinv(i));
            break;
        }
    }
    return p;
}

} // namespace bmwd
