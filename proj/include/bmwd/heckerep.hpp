#pragma once

#include "bmwd/matrix.hpp"
#include "bmwd/model_check.hpp"
#include "bmwd/rational.hpp"
#include "bmwd/words.hpp"
#include "bmwd/young.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bmwd {

// Evaluation point for the B-type Hecke algebra; the second eigenvalue of Y
// is tied to -p0 throughout.
struct HBPoint {
    Rational q;
    Rational p0;

    HBPoint(Rational q_, Rational p0_) : q(std::move(q_)), p0(std::move(p0_)) {
        if (q == 0 || p0 == 0) throw std::invalid_argument("HBPoint: q and p0 must be invertible");
    }

    Rational eigenvalue(int component) const { return component == 0 ? p0 : -p0; }

    std::array<Rational, kNumVars> scalar_point() const {
        std::array<Rational, kNumVars> pt{};
        pt[static_cast<int>(Var::q)] = q;
        pt[static_cast<int>(Var::l)] = 1;
        pt[static_cast<int>(Var::x)] = 1;
        pt[static_cast<int>(Var::A)] = 0;
        pt[static_cast<int>(Var::p0)] = p0;
        return pt;
    }
};

// Two fixed generic points used by the command line tools and the tests.
inline HBPoint standard_point_a() { return HBPoint(Rational(4), Rational(7)); }
inline HBPoint standard_point_b() { return HBPoint(Rational(5), Rational(3)); }

// The eigenvalue attached to the cell holding entry m: the Y eigenvalue of
// the component times q^(col-row).
inline Rational tableau_content(const BiTableau& t, int m, const HBPoint& pt) {
    return pt.eigenvalue(t.component_of(m)) * rational_pow(pt.q, t.content_exponent(m));
}

// Seminormal matrix module for a bipartition shape. Y is diagonal through the
// component holding 1. X_i fixes a basis tableau up to scalar q (entries i,
// i+1 in one row) or -1 (one column); otherwise it mixes t with the tableau
// t' that has i and i+1 exchanged:
//
//   X_i t = a t + (1 + a) t',   a = (q-1) / (1 - c(t,i)/c(t,i+1)).
//
// The off-diagonal weights keep the quadratic (X-q)(X+1) = 0 exact and make
// the mixing block symmetric whenever the two contents are swapped by the
// component flip, which the D-type split below relies on.
class HBRep {
public:
    HBRep(Bipartition shape, HBPoint pt)
        : shape_(std::move(shape)), pt_(std::move(pt)), basis_(BiTableau::standard(shape_)) {
        const int n = shape_.size();
        if (n < 1) throw std::invalid_argument("HBRep: shape must have at least one box");
        std::map<BiTableau, std::size_t> index;
        for (std::size_t a = 0; a < basis_.size(); ++a) index.emplace(basis_[a], a);

        const std::size_t d = basis_.size();
        y_ = Matrix<Rational>(d, d);
        for (std::size_t a = 0; a < d; ++a) y_(a, a) = pt_.eigenvalue(basis_[a].component_of(1));

        x_.reserve(static_cast<std::size_t>(n) - 1);
        for (int i = 1; i < n; ++i) {
            Matrix<Rational> m(d, d);
            for (std::size_t a = 0; a < d; ++a) {
                const BiTableau& t = basis_[a];
                if (t.in_same_row(i)) {
                    m(a, a) = pt_.q;
                } else if (t.in_same_col(i)) {
                    m(a, a) = -1;
                } else {
                    Rational ci = tableau_content(t, i, pt_);
                    Rational cj = tableau_content(t, i + 1, pt_);
                    if (cj == 0 || ci == cj)
                        throw std::domain_error("HBRep: point is not generic for shape " +
                                                shape_.to_string());
                    Rational a_t = (pt_.q - 1) / (1 - ci / cj);
                    std::size_t b = index.at(t.with_adjacent_swapped(i));
                    m(a, a) = a_t;
                    m(a, b) = 1 + a_t;
                }
            }
            x_.push_back(std::move(m));
        }
    }

    const Bipartition& shape() const { return shape_; }
    const HBPoint& point() const { return pt_; }
    int n() const { return shape_.size(); }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BiTableau>& basis() const { return basis_; }

    const Matrix<Rational>& y() const { return y_; }
    const Matrix<Rational>& x(int i) const {
        if (i < 1 || i >= n()) throw std::out_of_range("HBRep::x");
        return x_[static_cast<std::size_t>(i) - 1];
    }

    MatrixModel matrix_model() const {
        std::map<GenToken, Matrix<Rational>> assign;
        assign.emplace(tokY(), y_);
        for (int i = 1; i < n(); ++i) assign.emplace(tokX(i), x(i));
        return MatrixModel(std::move(assign), pt_.scalar_point());
    }

private:
    Bipartition shape_;
    HBPoint pt_;
    std::vector<BiTableau> basis_;
    Matrix<Rational> y_;
    std::vector<Matrix<Rational>> x_; // x_[i-1] carries X_i
};

// D-type restriction of an HBRep: X_0 is the image (1/p0^2) Y X_1 Y and the
// remaining generators are untouched.
struct HDRep {
    Bipartition shape;
    HBPoint pt;
    std::vector<BiTableau> basis;
    std::vector<Matrix<Rational>> x; // x[i] carries X_i, including X_0

    int n() const { return shape.size(); }
    std::size_t dim() const { return basis.size(); }

    MatrixModel matrix_model() const {
        std::map<GenToken, Matrix<Rational>> assign;
        for (int i = 0; i < n(); ++i) assign.emplace(tokX(i), x[static_cast<std::size_t>(i)]);
        return MatrixModel(std::move(assign), pt.scalar_point());
    }
};

inline HDRep hd_restrict(const HBRep& rep) {
    if (rep.n() < 2) throw std::invalid_argument("hd_restrict: need n >= 2");
    HDRep out{rep.shape(), rep.point(), rep.basis(), {}};
    Rational scale = 1 / (rep.point().p0 * rep.point().p0);
    out.x.push_back(scale * (rep.y() * rep.x(1) * rep.y()));
    for (int i = 1; i < rep.n(); ++i) out.x.push_back(rep.x(i));
    return out;
}

// The component flip t -> (t_1, t_0) as a matrix in the tableau basis.
// Defined for self-paired shapes only.
inline Matrix<Rational> swap_operator(const HDRep& rep) {
    if (rep.shape.comp[0] != rep.shape.comp[1])
        throw std::invalid_argument("swap_operator: shape must be self paired");
    std::map<BiTableau, std::size_t> index;
    for (std::size_t a = 0; a < rep.basis.size(); ++a) index.emplace(rep.basis[a], a);
    Matrix<Rational> p(rep.dim(), rep.dim());
    for (std::size_t a = 0; a < rep.basis.size(); ++a)
        p(index.at(rep.basis[a].with_components_swapped()), a) = 1;
    return p;
}

// Restriction of a self-paired module to the two eigenspaces of the
// component flip. Basis vectors are e_t +/- e_tbar over one representative t
// per flip orbit, so both halves share the index set orbit_rep.
struct SwapSplit {
    Matrix<Rational> swap_op;
    std::vector<std::size_t> orbit_rep;
    std::vector<Matrix<Rational>> x_plus;
    std::vector<Matrix<Rational>> x_minus;
};

inline SwapSplit swap_split(const HDRep& rep) {
    SwapSplit out;
    out.swap_op = swap_operator(rep);
    for (const auto& m : rep.x)
        if (m * out.swap_op != out.swap_op * m)
            throw std::logic_error("swap_split: flip does not commute with the action");

    const std::size_t d = rep.dim();
    std::vector<std::size_t> partner(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            if (out.swap_op(b, a) == 1) partner[a] = b;
    std::vector<std::size_t> pos(d, SIZE_MAX);
    for (std::size_t a = 0; a < d; ++a) {
        if (partner[a] == a)
            throw std::logic_error("swap_split: flip must be fixed point free");
        if (a < partner[a]) {
            pos[a] = out.orbit_rep.size();
            out.orbit_rep.push_back(a);
        }
    }

    const std::size_t h = out.orbit_rep.size();
    for (const auto& m : rep.x) {
        Matrix<Rational> plus(h, h), minus(h, h);
        for (std::size_t sp = 0; sp < h; ++sp)
            for (std::size_t tp = 0; tp < h; ++tp) {
                std::size_t s = out.orbit_rep[sp], t = out.orbit_rep[tp];
                plus(sp, tp) = m(s, t) + m(s, partner[t]);
                minus(sp, tp) = m(s, t) - m(s, partner[t]);
            }
        out.x_plus.push_back(std::move(plus));
        out.x_minus.push_back(std::move(minus));
    }
    return out;
}

// Burnside span criterion: the words in the generators span the full matrix
// algebra exactly when the module is absolutely irreducible.
inline bool is_absolutely_irreducible(const std::vector<Matrix<Rational>>& gens) {
    if (gens.empty()) throw std::invalid_argument("is_absolutely_irreducible: no generators");
    const std::size_t d = gens[0].rows();
    for (const auto& g : gens)
        if (g.rows() != d || g.cols() != d)
            throw std::invalid_argument("is_absolutely_irreducible: dimension mismatch");

    RowSpace<Rational> space(d * d);
    std::vector<Matrix<Rational>> pending;
    auto offer = [&](Matrix<Rational> m) {
        std::vector<Rational> flat;
        flat.reserve(d * d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) flat.push_back(m(r, c));
        if (space.insert(std::move(flat))) pending.push_back(std::move(m));
    };
    offer(Matrix<Rational>::identity(d));
    while (!pending.empty() && space.rank() < d * d) {
        Matrix<Rational> cur = std::move(pending.back());
        pending.pop_back();
        for (const auto& g : gens) offer(g * cur);
    }
    return space.rank() == d * d;
}

// Basis of the space of matrices S with S g1 = g2 S for all generator pairs.
inline std::vector<Matrix<Rational>> intertwiner_basis(const std::vector<Matrix<Rational>>& gens1,
                                                       const std::vector<Matrix<Rational>>& gens2) {
    if (gens1.size() != gens2.size())
        throw std::invalid_argument("intertwiner_basis: generator counts differ");
    if (gens1.empty()) throw std::invalid_argument("intertwiner_basis: no generators");
    const std::size_t d1 = gens1[0].rows();
    const std::size_t d2 = gens2[0].rows();
    const std::size_t unknowns = d1 * d2; // S is d2 x d1

    Matrix<Rational> sys(gens1.size() * unknowns, unknowns);
    std::size_t row = 0;
    for (std::size_t g = 0; g < gens1.size(); ++g) {
        const auto& a = gens1[g];
        const auto& b = gens2[g];
        for (std::size_t i = 0; i < d2; ++i)
            for (std::size_t j = 0; j < d1; ++j) {
                // Constraint (i,j) of S a - b S = 0.
                for (std::size_t k = 0; k < d1; ++k) sys(row, i * d1 + k) += a(k, j);
                for (std::size_t k = 0; k < d2; ++k) sys(row, k * d1 + j) -= b(i, k);
                ++row;
            }
    }

    auto rep = mat_rank_det_nullspace(sys);
    std::vector<Matrix<Rational>> out;
    for (const auto& v : rep.nullspace) {
        Matrix<Rational> s(d2, d1);
        for (std::size_t i = 0; i < d2; ++i)
            for (std::size_t j = 0; j < d1; ++j) s(i, j) = v[i * d1 + j];
        out.push_back(std::move(s));
    }
    return out;
}

// Equivalence via an invertible intertwiner. For irreducible modules any
// nonzero intertwiner already works; the weighted combinations only matter
// for decomposable inputs.
inline bool are_equivalent(const std::vector<Matrix<Rational>>& gens1,
                           const std::vector<Matrix<Rational>>& gens2) {
    if (gens1.empty() || gens2.empty()) throw std::invalid_argument("are_equivalent: no generators");
    if (gens1[0].rows() != gens2[0].rows()) return false;
    auto basis = intertwiner_basis(gens1, gens2);
    if (basis.empty()) return false;
    const std::size_t d = gens1[0].rows();
    for (const auto& s : basis) {
        auto rep = mat_rank_det_nullspace(s);
        if (rep.rank == d) return true;
    }
    for (int w = 2; w <= 17; ++w) {
        Matrix<Rational> s(d, d);
        Rational f = 1;
        for (const auto& b : basis) {
            s = s + f * b;
            f *= w;
        }
        if (mat_rank_det_nullspace(s).rank == d) return true;
    }
    return false;
}

// Labels for the simple D-type modules: unordered pairs of distinct diagrams
// of total size n, plus sign-split labels for the self-paired shapes.
struct HDLabel {
    Bipartition shape;
    bool is_signed = false;
    int sign = 1;

    std::string to_string() const {
        if (is_signed)
            return "(" + partition_to_string(shape.comp[0]) + ")" + (sign > 0 ? "+" : "-");
        return "{(" + partition_to_string(shape.comp[0]) + "),(" +
               partition_to_string(shape.comp[1]) + ")}";
    }

    bool operator==(const HDLabel& o) const {
        return shape == o.shape && is_signed == o.is_signed && sign == o.sign;
    }
    bool operator<(const HDLabel& o) const {
        return std::tie(shape, is_signed, sign) < std::tie(o.shape, o.is_signed, o.sign);
    }
};

inline std::vector<HDLabel> hd_index_set(int n) {
    std::vector<HDLabel> out;
    for (const auto& bp : enumerate_bipartitions(n)) {
        int s0 = partition_size(bp.comp[0]);
        int s1 = partition_size(bp.comp[1]);
        if (bp.comp[0] == bp.comp[1]) {
            out.push_back(HDLabel{bp, true, 1});
            out.push_back(HDLabel{bp, true, -1});
        } else if (s0 > s1 || (s0 == s1 && bp.comp[0] < bp.comp[1])) {
            out.push_back(HDLabel{bp, false, 1});
        }
    }
    return out;
}

inline BigInt hd_dim(const HDLabel& label) {
    BigInt d = standard_count(label.shape);
    return label.is_signed ? d / 2 : d;
}

struct DimIdentityReport {
    int n = 0;
    BigInt sum_squares;
    BigInt expected;
    bool ok = false;
};

// Sum of squared dimensions over the D-type index set against 2^(n-1) n!.
inline DimIdentityReport hecke_dim_identity(int n) {
    if (n < 2) throw std::invalid_argument("hecke_dim_identity: need n >= 2");
    DimIdentityReport rep;
    rep.n = n;
    for (const auto& label : hd_index_set(n)) {
        BigInt d = hd_dim(label);
        rep.sum_squares += d * d;
    }
    rep.expected = BigInt(1);
    for (int i = 1; i < n; ++i) rep.expected *= 2;
    rep.expected *= factorial_big(n);
    rep.ok = rep.sum_squares == rep.expected;
    return rep;
}

} // namespace bmwd
