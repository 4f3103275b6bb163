#pragma once

#include "bmwd/matrix.hpp"
#include "bmwd/rational.hpp"
#include "bmwd/signed_perm.hpp"
#include "bmwd/words.hpp"

#include <map>
#include <vector>

namespace bmwd {

struct RelationCheck {
    std::string label;
    bool ok = false;
};

template <typename Model>
typename Model::Elem eval_word_in_model(const Model& model, const Word& w) {
    typename Model::Elem acc = model.one();
    for (const auto& t : w.tokens) acc = model.mul(acc, model.token(t));
    return acc;
}

template <typename Model>
typename Model::Elem eval_lincomb_in_model(const Model& model, const LinComb& c) {
    typename Model::Elem acc = model.zero();
    for (const auto& [w, coef] : c.terms())
        acc = model.add(acc, model.scale(coef, eval_word_in_model(model, w)));
    return acc;
}

template <typename Model>
std::vector<RelationCheck> check_relations_in_model(const Presentation& pres, const Model& model) {
    std::vector<RelationCheck> out;
    out.reserve(pres.relations.size());
    for (const auto& rel : pres.relations) {
        RelationCheck chk;
        chk.label = rel.label;
        chk.ok = model.eq(eval_lincomb_in_model(model, rel.lhs),
                          eval_lincomb_in_model(model, rel.rhs));
        out.push_back(std::move(chk));
    }
    return out;
}

template <typename Model>
bool all_relations_hold(const Presentation& pres, const Model& model) {
    for (const auto& chk : check_relations_in_model(pres, model))
        if (!chk.ok) return false;
    return true;
}

// Group algebra of signed permutations; scalars must be constant rationals.
class SignedPermGroupModel {
public:
    using Elem = std::map<SignedPerm, Rational>;

    SignedPermGroupModel(std::size_t n, std::map<GenToken, SignedPerm> assign)
        : n_(n), assign_(std::move(assign)) {}

    Elem token(const GenToken& t) const {
        auto it = assign_.find(t);
        if (it == assign_.end())
            throw std::invalid_argument("group model: unassigned generator " + t.to_string());
        return Elem{{it->second, Rational(1)}};
    }
    Elem one() const { return Elem{{SignedPerm::identity(n_), Rational(1)}}; }
    Elem zero() const { return Elem{}; }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem r;
        for (const auto& [pa, ca] : a)
            for (const auto& [pb, cb] : b) {
                SignedPerm p = compose(pa, pb);
                auto [it, fresh] = r.emplace(std::move(p), ca * cb);
                if (!fresh) {
                    it->second += ca * cb;
                    if (it->second == 0) r.erase(it);
                }
            }
        return r;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (const auto& [p, c] : b) {
            auto [it, fresh] = r.emplace(p, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) r.erase(it);
            }
        }
        return r;
    }
    Elem scale(const ScalarFraction& s, const Elem& e) const {
        if (!s.is_polynomial() || !s.num().is_constant())
            throw std::invalid_argument("group model: non-constant scalar " + s.to_string());
        Rational c = s.num().constant_value();
        Elem r;
        if (c == 0) return r;
        for (const auto& [p, v] : e) r.emplace(p, v * c);
        return r;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

private:
    std::size_t n_;
    std::map<GenToken, SignedPerm> assign_;
};

inline SignedPermGroupModel wb_group_model(std::size_t n) {
    auto gens = wb_generators(n);
    std::map<GenToken, SignedPerm> assign;
    assign.emplace(tokY(), gens[0]);
    assign.emplace(tokYinv(), gens[0]); // involution
    for (std::size_t i = 1; i < n; ++i) {
        assign.emplace(tokX(static_cast<int>(i)), gens[i]);
        assign.emplace(tokXinv(static_cast<int>(i)), gens[i]);
    }
    return SignedPermGroupModel(n, std::move(assign));
}

inline SignedPermGroupModel wd_group_model(std::size_t n) {
    auto gens = wd_generators(n);
    std::map<GenToken, SignedPerm> assign;
    for (std::size_t i = 0; i < n; ++i) {
        assign.emplace(tokX(static_cast<int>(i)), gens[i]);
        assign.emplace(tokXinv(static_cast<int>(i)), gens[i]);
    }
    return SignedPermGroupModel(n, std::move(assign));
}

// Matrices over the rationals at a fixed evaluation point.
class MatrixModel {
public:
    using Elem = Matrix<Rational>;

    MatrixModel(std::map<GenToken, Matrix<Rational>> assign, std::array<Rational, kNumVars> point)
        : assign_(std::move(assign)), point_(point) {
        if (assign_.empty()) throw std::invalid_argument("matrix model: no generators");
        dim_ = assign_.begin()->second.rows();
        for (const auto& [t, m] : assign_)
            if (m.rows() != dim_ || m.cols() != dim_)
                throw std::invalid_argument("matrix model: inconsistent dimensions");
    }

    std::size_t dim() const { return dim_; }
    const std::array<Rational, kNumVars>& point() const { return point_; }

    Elem token(const GenToken& t) const {
        auto it = assign_.find(t);
        if (it == assign_.end())
            throw std::invalid_argument("matrix model: unassigned generator " + t.to_string());
        return it->second;
    }
    Elem one() const { return Matrix<Rational>::identity(dim_); }
    Elem zero() const { return Matrix<Rational>(dim_, dim_); }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem scale(const ScalarFraction& s, const Elem& e) const { return s.eval(point_) * e; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

private:
    std::map<GenToken, Matrix<Rational>> assign_;
    std::array<Rational, kNumVars> point_;
    std::size_t dim_ = 0;
};

} // namespace bmwd
