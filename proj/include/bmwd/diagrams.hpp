#pragma once

#include "bmwd/laurent.hpp"
#include "bmwd/model_check.hpp"
#include "bmwd/words.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace bmwd {

// A Brauer diagram on n strands with a mod-2 dot on each arc. Points are
// indexed 0..2n-1: tops t1..tn first, then bottoms b1..bn. Prints as
// "n=3; (t1-b2:1)(t2-t3:0)(b1-b3:1)" with arcs listed by their smaller
// endpoint, which is also the comparison order.
class DottedDiagram {
public:
    DottedDiagram() = default;

    static DottedDiagram identity(int n) {
        std::vector<std::array<int, 3>> edges;
        for (int i = 0; i < n; ++i) edges.push_back({i, n + i, 0});
        return from_edges(n, edges);
    }

    static DottedDiagram from_edges(int n, const std::vector<std::array<int, 3>>& edges) {
        if (n < 1) throw std::invalid_argument("DottedDiagram: need at least one strand");
        DottedDiagram d;
        d.n_ = n;
        d.partner_.assign(2 * static_cast<std::size_t>(n), -1);
        d.dots_.assign(2 * static_cast<std::size_t>(n), 0);
        for (const auto& [p, q, dot] : edges) {
            if (p < 0 || q < 0 || p >= 2 * n || q >= 2 * n || p == q)
                throw std::invalid_argument("DottedDiagram: bad endpoint");
            if (d.partner_[p] != -1 || d.partner_[q] != -1)
                throw std::invalid_argument("DottedDiagram: endpoint used twice");
            if (dot != 0 && dot != 1) throw std::invalid_argument("DottedDiagram: dot must be 0 or 1");
            d.partner_[p] = q;
            d.partner_[q] = p;
            d.dots_[p] = d.dots_[q] = dot;
        }
        for (int p = 0; p < 2 * n; ++p)
            if (d.partner_[p] == -1) throw std::invalid_argument("DottedDiagram: unmatched endpoint");
        return d;
    }

    int n() const { return n_; }

    int partner(int p) const {
        if (p < 0 || p >= 2 * n_) throw std::out_of_range("DottedDiagram::partner");
        return partner_[p];
    }
    int dot(int p) const {
        if (p < 0 || p >= 2 * n_) throw std::out_of_range("DottedDiagram::dot");
        return dots_[p];
    }

    int total_dot_parity() const {
        int s = 0;
        for (int p = 0; p < 2 * n_; ++p)
            if (partner_[p] > p) s ^= dots_[p];
        return s;
    }

    bool operator==(const DottedDiagram& o) const {
        return n_ == o.n_ && partner_ == o.partner_ && dots_ == o.dots_;
    }
    bool operator!=(const DottedDiagram& o) const { return !(*this == o); }
    bool operator<(const DottedDiagram& o) const {
        return std::tie(n_, partner_, dots_) < std::tie(o.n_, o.partner_, o.dots_);
    }

    static std::string point_name(int n, int p) {
        return p < n ? "t" + std::to_string(p + 1) : "b" + std::to_string(p - n + 1);
    }

    std::string to_string() const {
        std::string out = "n=" + std::to_string(n_) + "; ";
        for (int p = 0; p < 2 * n_; ++p) {
            if (partner_[p] < p) continue;
            out += "(" + point_name(n_, p) + "-" + point_name(n_, partner_[p]) + ":" +
                   std::to_string(dots_[p]) + ")";
        }
        return out;
    }

    static DottedDiagram parse(const std::string& s) {
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
        };
        auto expect = [&](char c) {
            if (pos >= s.size() || s[pos] != c)
                throw std::invalid_argument(std::string("DottedDiagram::parse: expected '") + c +
                                            "' in '" + s + "'");
            ++pos;
        };
        auto read_int = [&]() {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("DottedDiagram::parse: number expected");
            return std::stoi(s.substr(start, pos - start));
        };
        skip_ws();
        expect('n');
        expect('=');
        int n = read_int();
        expect(';');
        auto read_point = [&]() {
            skip_ws();
            if (pos >= s.size() || (s[pos] != 't' && s[pos] != 'b'))
                throw std::invalid_argument("DottedDiagram::parse: endpoint expected");
            bool top = s[pos] == 't';
            ++pos;
            int idx = read_int();
            if (idx < 1 || idx > n) throw std::invalid_argument("DottedDiagram::parse: endpoint index out of range");
            return top ? idx - 1 : n + idx - 1;
        };
        std::vector<std::array<int, 3>> edges;
        skip_ws();
        while (pos < s.size()) {
            expect('(');
            int p = read_point();
            skip_ws();
            expect('-');
            int q = read_point();
            skip_ws();
            expect(':');
            int dot = read_int();
            skip_ws();
            expect(')');
            edges.push_back({p, q, dot});
            skip_ws();
        }
        return from_edges(n, edges);
    }

private:
    int n_ = 0;
    std::vector<int> partner_;
    std::vector<int> dots_;
};

// Top-down reflection; the anti-involution fixes every generator diagram.
inline DottedDiagram star(const DottedDiagram& d) {
    const int n = d.n();
    auto flip = [n](int p) { return p < n ? p + n : p - n; };
    std::vector<std::array<int, 3>> edges;
    for (int p = 0; p < 2 * n; ++p)
        if (d.partner(p) > p) edges.push_back({flip(p), flip(d.partner(p)), d.dot(p)});
    return DottedDiagram::from_edges(n, edges);
}

// Stacks a over b and resolves the interior. A closed loop keeps a factor x
// when its dot count is even and annihilates the product when odd.
struct DiagProduct {
    DottedDiagram diagram;
    int even_loops = 0;
    int odd_loops = 0;

    LaurentPoly coefficient() const {
        if (odd_loops > 0) return LaurentPoly::zero();
        return LaurentPoly::variable(Var::x, even_loops);
    }
};

inline DiagProduct multiply(const DottedDiagram& a, const DottedDiagram& b) {
    const int n = a.n();
    if (b.n() != n) throw std::invalid_argument("multiply: strand counts differ");

    // side 0 walks in a, side 1 in b; a's bottom j is glued to b's top j.
    std::array<std::vector<char>, 2> seen{std::vector<char>(2 * n, 0), std::vector<char>(2 * n, 0)};
    auto cross = [&](int side, int p, int& dots) {
        dots ^= side == 0 ? a.dot(p) : b.dot(p);
        return side == 0 ? a.partner(p) : b.partner(p);
    };

    std::vector<std::array<int, 3>> edges;
    auto walk_external = [&](int side, int start) {
        int s = side, p = start, dots = 0;
        seen[s][p] = 1;
        while (true) {
            int q = cross(s, p, dots);
            seen[s][q] = 1;
            if (s == 0 && q < n) return std::array<int, 3>{0, q, dots};
            if (s == 1 && q >= n) return std::array<int, 3>{1, q, dots};
            if (s == 0) {
                s = 1;
                p = q - n;
            } else {
                s = 0;
                p = q + n;
            }
            seen[s][p] = 1;
        }
    };

    // External ends map to result points directly: a-tops and b-bottoms share
    // the result's indexing.
    for (int start : {0, 1}) {
        for (int i = 0; i < n; ++i) {
            int p = start == 0 ? i : n + i;
            if (seen[start][p]) continue;
            auto [side, q, dots] = walk_external(start, p);
            (void)side;
            edges.push_back({p, q, dots});
        }
    }

    DiagProduct out;
    for (int j = 0; j < n; ++j) {
        if (seen[0][n + j]) continue;
        int s = 0, p = n + j, dots = 0;
        do {
            seen[s][p] = 1;
            int q = cross(s, p, dots);
            seen[s][q] = 1;
            if (s == 0) {
                s = 1;
                p = q - n;
            } else {
                s = 0;
                p = q + n;
            }
        } while (!(s == 0 && p == n + j));
        if (dots % 2 == 0)
            ++out.even_loops;
        else
            ++out.odd_loops;
    }
    out.diagram = DottedDiagram::from_edges(n, edges);
    return out;
}

// Linear combination of diagrams with Laurent coefficients (classically only
// the variable x appears).
class DiagElem {
public:
    DiagElem() = default;

    static DiagElem zero() { return DiagElem(); }
    static DiagElem term(const DottedDiagram& d, const LaurentPoly& c = LaurentPoly::one()) {
        DiagElem e;
        e.add_term(d, c);
        return e;
    }

    const std::map<DottedDiagram, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const DottedDiagram& d, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(d, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend DiagElem operator+(const DiagElem& a, const DiagElem& b) {
        DiagElem r = a;
        for (const auto& [d, c] : b.terms_) r.add_term(d, c);
        return r;
    }
    friend DiagElem operator-(const DiagElem& a, const DiagElem& b) {
        DiagElem r = a;
        for (const auto& [d, c] : b.terms_) r.add_term(d, LaurentPoly::zero() - c);
        return r;
    }
    friend DiagElem operator*(const LaurentPoly& s, const DiagElem& e) {
        DiagElem r;
        for (const auto& [d, c] : e.terms_) r.add_term(d, s * c);
        return r;
    }
    friend DiagElem operator*(const DiagElem& a, const DiagElem& b) {
        DiagElem r;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) {
                DiagProduct pr = multiply(da, db);
                if (pr.odd_loops > 0) continue;
                r.add_term(pr.diagram, ca * cb * pr.coefficient());
            }
        return r;
    }

    bool operator==(const DiagElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiagElem& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [d, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ") " + d.to_string();
        }
        return out;
    }

private:
    std::map<DottedDiagram, LaurentPoly> terms_;
};

inline DiagElem star(const DiagElem& e) {
    DiagElem r;
    for (const auto& [d, c] : e.terms()) r.add_term(star(d), c);
    return r;
}

// Generator diagrams of the classical limit. The crossing swaps strands i and
// i+1; the cup-cap joins them horizontally; the dotted variants carry the two
// extra sign dots that X_0 and e_0 pick up.
inline DottedDiagram diag_crossing(int n, int i, bool dotted) {
    if (i < 1 || i >= n) throw std::out_of_range("diag_crossing");
    std::vector<std::array<int, 3>> edges;
    int d = dotted ? 1 : 0;
    for (int j = 0; j < n; ++j) {
        if (j == i - 1)
            edges.push_back({j, n + j + 1, d});
        else if (j == i)
            edges.push_back({j, n + j - 1, d});
        else
            edges.push_back({j, n + j, 0});
    }
    return DottedDiagram::from_edges(n, edges);
}

inline DottedDiagram diag_cupcap(int n, int i, bool dotted) {
    if (i < 1 || i >= n) throw std::out_of_range("diag_cupcap");
    std::vector<std::array<int, 3>> edges;
    int d = dotted ? 1 : 0;
    edges.push_back({i - 1, i, d});
    edges.push_back({n + i - 1, n + i, d});
    for (int j = 0; j < n; ++j)
        if (j != i - 1 && j != i) edges.push_back({j, n + j, 0});
    return DottedDiagram::from_edges(n, edges);
}

inline DottedDiagram diag_dot(int n) {
    std::vector<std::array<int, 3>> edges;
    for (int j = 0; j < n; ++j) edges.push_back({j, n + j, j == 0 ? 1 : 0});
    return DottedDiagram::from_edges(n, edges);
}

// Named generator map: identity, X_i, e_i for i >= 1, and the dotted X_0,
// e_0.
inline std::map<std::string, DottedDiagram> classical_generator_diagrams(int n) {
    if (n < 2) throw std::invalid_argument("classical_generator_diagrams: need n >= 2");
    std::map<std::string, DottedDiagram> out;
    out.emplace("1", DottedDiagram::identity(n));
    out.emplace("X0", diag_crossing(n, 1, true));
    out.emplace("e0", diag_cupcap(n, 1, true));
    for (int i = 1; i < n; ++i) {
        out.emplace("X" + std::to_string(i), diag_crossing(n, i, false));
        out.emplace("e" + std::to_string(i), diag_cupcap(n, i, false));
    }
    return out;
}

// Diagram-algebra model for the relation checker. Scalars are specialized to
// the classical point q = 1, l = 1, A = 0 with x left symbolic.
class DiagramModel {
public:
    using Elem = DiagElem;

    DiagramModel(int n, std::map<GenToken, DiagElem> assign) : n_(n), assign_(std::move(assign)) {
        if (n_ < 1) throw std::invalid_argument("diagram model: need n >= 1");
    }

    int n() const { return n_; }

    Elem token(const GenToken& t) const {
        auto it = assign_.find(t);
        if (it == assign_.end())
            throw std::invalid_argument("diagram model: unassigned generator " + t.to_string());
        return it->second;
    }
    Elem one() const { return DiagElem::term(DottedDiagram::identity(n_)); }
    Elem zero() const { return DiagElem::zero(); }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem scale(const ScalarFraction& s, const Elem& e) const {
        ScalarFraction f = s.subst(Var::q, 1).subst(Var::l, 1).subst(Var::A, 0);
        if (!f.is_polynomial())
            throw std::invalid_argument("diagram model: scalar keeps a denominator at the classical point: " +
                                        s.to_string());
        return f.num() * e;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

private:
    int n_;
    std::map<GenToken, DiagElem> assign_;
};

// Classical model of BD_n, or of BB'_n with the dotted strand for Y.
inline DiagramModel classical_model(AlgebraKind kind, int n) {
    std::map<GenToken, DiagElem> assign;
    auto put = [&](GenToken t, const DottedDiagram& d) { assign.emplace(t, DiagElem::term(d)); };
    switch (kind) {
        case AlgebraKind::BD:
            put(tokX(0), diag_crossing(n, 1, true));
            put(tokXinv(0), diag_crossing(n, 1, true));
            put(tokE(0), diag_cupcap(n, 1, true));
            break;
        case AlgebraKind::BBprime:
            put(tokY(), diag_dot(n));
            put(tokYinv(), diag_dot(n));
            break;
        default:
            throw std::invalid_argument("classical_model: only BD and BBprime have diagram models");
    }
    for (int i = 1; i < n; ++i) {
        put(tokX(i), diag_crossing(n, i, false));
        put(tokXinv(i), diag_crossing(n, i, false));
        put(tokE(i), diag_cupcap(n, i, false));
    }
    return DiagramModel(n, std::move(assign));
}

inline std::vector<RelationCheck> verify_classical(AlgebraKind kind, int n) {
    return check_relations_in_model(builtin_presentation(kind, static_cast<std::size_t>(n)),
                                    classical_model(kind, n));
}

inline bool verify_bd_classical(int n) {
    for (const auto& chk : verify_classical(AlgebraKind::BD, n))
        if (!chk.ok) return false;
    return true;
}

// All perfect matchings with an even total dot count, in the canonical
// diagram order.
inline std::vector<DottedDiagram> enumerate_even_basis(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_even_basis: need n >= 1");
    std::vector<DottedDiagram> out;
    std::vector<std::array<int, 3>> edges;
    std::vector<char> used(2 * static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int parity) -> void {
        int p = 0;
        while (p < 2 * n && used[p]) ++p;
        if (p == 2 * n) {
            if (parity == 0) out.push_back(DottedDiagram::from_edges(n, edges));
            return;
        }
        used[p] = 1;
        for (int q = p + 1; q < 2 * n; ++q) {
            if (used[q]) continue;
            used[q] = 1;
            for (int dot = 0; dot <= 1; ++dot) {
                edges.push_back({p, q, dot});
                self(self, parity ^ dot);
                edges.pop_back();
            }
            used[q] = 0;
        }
        used[p] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Markov closure: join top i to bottom i. Each closed cycle with even dots
// contributes x, an odd cycle kills the term; the result is normalized by
// x^(-n) so the identity has trace 1.
inline LaurentPoly closure_trace(const DottedDiagram& d) {
    const int n = d.n();
    std::vector<char> seen(2 * n, 0);
    int cycles = 0;
    for (int start = 0; start < 2 * n; ++start) {
        if (seen[start]) continue;
        int p = start, dots = 0;
        do {
            seen[p] = 1;
            int q = d.partner(p);
            dots ^= d.dot(p);
            seen[q] = 1;
            p = q < n ? q + n : q - n; // closure arc
        } while (p != start);
        if (dots % 2 == 1) return LaurentPoly::zero();
        ++cycles;
    }
    return LaurentPoly::variable(Var::x, cycles - n);
}

inline LaurentPoly closure_trace(const DiagElem& e) {
    LaurentPoly out = LaurentPoly::zero();
    for (const auto& [d, c] : e.terms()) out = out + c * closure_trace(d);
    return out;
}

// Embeds a diagram on the first n strands of an (n+1)-strand diagram; the new
// strand runs straight down.
inline DottedDiagram with_extra_strand(const DottedDiagram& d) {
    const int n = d.n();
    auto remap = [n](int p) { return p < n ? p : p + 1; };
    std::vector<std::array<int, 3>> edges;
    for (int p = 0; p < 2 * n; ++p)
        if (d.partner(p) > p) edges.push_back({remap(p), remap(d.partner(p)), d.dot(p)});
    edges.push_back({n, 2 * n + 1, 0});
    return DottedDiagram::from_edges(n + 1, edges);
}

} // namespace bmwd
