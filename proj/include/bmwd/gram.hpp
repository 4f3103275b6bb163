#pragma once

#include "bmwd/diagrams.hpp"
#include "bmwd/matrix.hpp"
#include "bmwd/parallel.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace bmwd {

// The pairing tr(v_i v_j^*) of two even-dotted diagrams is a single power of
// x or zero, so the Gram matrix is stored as a matrix of exponents with a
// sentinel for vanishing entries.
struct GramData {
    static constexpr int kZero = std::numeric_limits<int>::min();

    int n = 0;
    std::vector<DottedDiagram> basis;
    std::vector<std::vector<int>> expo;

    std::size_t size() const { return basis.size(); }
    bool is_zero_entry(std::size_t i, std::size_t j) const { return expo[i][j] == kZero; }
};

inline int trace_exponent(const DottedDiagram& a, const DottedDiagram& b_starred) {
    DiagProduct pr = multiply(a, b_starred);
    if (pr.odd_loops > 0) return GramData::kZero;
    LaurentPoly t = closure_trace(pr.diagram);
    if (t.is_zero()) return GramData::kZero;
    return t.terms().begin()->first[static_cast<int>(Var::x)] + pr.even_loops;
}

inline GramData gram_matrix(int n, int workers = 1) {
    GramData g;
    g.n = n;
    g.basis = enumerate_even_basis(n);
    const std::size_t m = g.basis.size();
    std::vector<DottedDiagram> starred;
    starred.reserve(m);
    for (const auto& d : g.basis) starred.push_back(star(d));
    g.expo.assign(m, std::vector<int>(m, GramData::kZero));
    parallel_for(m, workers, [&](std::size_t i) {
        for (std::size_t j = i; j < m; ++j) g.expo[i][j] = trace_exponent(g.basis[i], starred[j]);
    });
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j) g.expo[i][j] = g.expo[j][i];
    return g;
}

// Structural facts used downstream: unit diagonal, strictly negative
// off-diagonal degrees, symmetry.
struct GramShapeReport {
    bool diagonal_ones = true;
    bool symmetric = true;
    int max_offdiag_degree = std::numeric_limits<int>::min();
    bool offdiag_negative = true;
};

inline GramShapeReport gram_shape(const GramData& g) {
    GramShapeReport r;
    const std::size_t m = g.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (g.expo[i][i] != 0) r.diagonal_ones = false;
        for (std::size_t j = 0; j < m; ++j) {
            if (g.expo[i][j] != g.expo[j][i]) r.symmetric = false;
            if (i == j || g.is_zero_entry(i, j)) continue;
            r.max_offdiag_degree = std::max(r.max_offdiag_degree, g.expo[i][j]);
            if (g.expo[i][j] >= 0) r.offdiag_negative = false;
        }
    }
    return r;
}

inline Matrix<Rational> gram_at(const GramData& g, const Rational& x) {
    const std::size_t m = g.size();
    Matrix<Rational> out(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out(i, j) = g.is_zero_entry(i, j) ? Rational(0) : rational_pow(x, g.expo[i][j]);
    return out;
}

inline Rational gram_det_at(const GramData& g, const Rational& x) {
    auto rep = mat_rank_det_nullspace(gram_at(g, x));
    return rep.has_det ? rep.det : Rational(0);
}

// Leibniz expansion; fine for the small case where the determinant is wanted
// as a Laurent polynomial.
inline LaurentPoly gram_det_symbolic(const GramData& g) {
    const std::size_t m = g.size();
    if (m > 8) throw std::invalid_argument("gram_det_symbolic: basis too large for expansion");
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    LaurentPoly det = LaurentPoly::zero();
    auto rec = [&](auto&& self, std::size_t row, int sign) -> void {
        if (row == m) {
            int e = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (g.is_zero_entry(i, perm[i])) return;
                e += g.expo[i][perm[i]];
            }
            det += Rational(sign) * LaurentPoly::variable(Var::x, e);
            return;
        }
        for (std::size_t k = row; k < m; ++k) {
            std::swap(perm[row], perm[k]);
            self(self, row + 1, k == row ? sign : -sign);
            std::swap(perm[row], perm[k]);
        }
    };
    rec(rec, 0, 1);
    return det;
}

// Modular arithmetic for determinant certificates. Primes live just under
// 2^61 so products fit in __int128.
namespace modular {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic for 64-bit inputs with this base set
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t v = powmod(a, d, n);
        if (v == 1 || v == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            v = mulmod(v, v, n);
            if (v == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_below(std::uint64_t start, std::size_t count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = start - 1; out.size() < count; --p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

} // namespace modular

// Determinant of the Gram matrix mod p after substituting an integer value
// for x; negative exponents go through the modular inverse.
inline std::uint64_t gram_det_mod(const GramData& g, std::uint64_t x_value, std::uint64_t p) {
    const std::size_t m = g.size();
    std::uint64_t xv = x_value % p;
    if (xv == 0) throw std::invalid_argument("gram_det_mod: x must be a unit mod p");
    std::uint64_t xinv = modular::inverse(xv, p);
    std::vector<std::vector<std::uint64_t>> a(m, std::vector<std::uint64_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (g.is_zero_entry(i, j)) continue;
            int e = g.expo[i][j];
            a[i][j] = modular::powmod(e < 0 ? xinv : xv, static_cast<std::uint64_t>(e < 0 ? -e : e), p);
        }
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = p - det;
        }
        det = modular::mulmod(det, a[col][col], p);
        std::uint64_t inv = modular::inverse(a[col][col], p);
        for (std::size_t r = col + 1; r < m; ++r) {
            if (a[r][col] == 0) continue;
            std::uint64_t f = modular::mulmod(a[r][col], inv, p);
            for (std::size_t c = col; c < m; ++c) {
                std::uint64_t sub = modular::mulmod(f, a[col][c], p);
                a[r][c] = a[r][c] >= sub ? a[r][c] - sub : a[r][c] + p - sub;
            }
        }
    }
    return det % p;
}

// A single large prime with nonzero residue certifies det != 0 at that point.
struct NonzeroCertificate {
    std::uint64_t x_value = 0;
    std::uint64_t prime = 0;
    std::uint64_t residue = 0;
    bool nonzero = false;
};

inline NonzeroCertificate gram_nonzero_certificate(const GramData& g, std::uint64_t x_value) {
    NonzeroCertificate c;
    c.x_value = x_value;
    c.prime = modular::primes_below(1ULL << 61, 1)[0];
    c.residue = gram_det_mod(g, x_value, c.prime);
    c.nonzero = c.residue != 0;
    return c;
}

// Exact determinant at an integer point by Chinese remaindering. Rows are
// rescaled by x^(-min exponent) to clear denominators; the removed factor is
// restored at the end, so the result is the true rational determinant.
inline Rational gram_det_exact_crt(const GramData& g, std::uint64_t x_value, int workers = 1) {
    const std::size_t m = g.size();
    if (m == 0) return Rational(1);

    long long scale_total = 0;
    std::vector<int> row_min(m, 0);
    BigInt hadamard(1);
    BigInt xb(static_cast<long long>(x_value));
    for (std::size_t i = 0; i < m; ++i) {
        int mn = 0, mx = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (g.is_zero_entry(i, j)) continue;
            mn = std::min(mn, g.expo[i][j]);
            mx = std::max(mx, g.expo[i][j]);
        }
        row_min[i] = mn;
        scale_total += mn;
        // row norm bound: sqrt(m) * max scaled entry
        BigInt big(1);
        for (int k = 0; k < mx - mn; ++k) big *= xb;
        hadamard *= big;
    }
    // |det_int| <= prod row_norms <= m^(m/2) * prod(max entries)
    BigInt msqrt(1);
    for (std::size_t i = 0; i < (m + 1) / 2; ++i) msqrt *= BigInt(static_cast<long long>(m));
    hadamard *= msqrt;

    BigInt bound = 2 * hadamard + 1;
    std::vector<std::uint64_t> primes;
    BigInt prod(1);
    for (std::uint64_t p = (1ULL << 61) - 1; prod < bound; --p) {
        if (!modular::is_prime(p)) continue;
        primes.push_back(p);
        prod *= BigInt(static_cast<long long>(p));
    }

    // Scaled integer determinant mod each prime.
    std::vector<std::uint64_t> residues(primes.size(), 0);
    parallel_for(primes.size(), workers, [&](std::size_t k) {
        std::uint64_t p = primes[k];
        std::uint64_t xv = x_value % p;
        std::uint64_t det = 1;
        std::vector<std::vector<std::uint64_t>> a(m, std::vector<std::uint64_t>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (g.is_zero_entry(i, j)) continue;
                a[i][j] = modular::powmod(xv, static_cast<std::uint64_t>(g.expo[i][j] - row_min[i]), p);
            }
        for (std::size_t col = 0; col < m && det != 0; ++col) {
            std::size_t piv = col;
            while (piv < m && a[piv][col] == 0) ++piv;
            if (piv == m) {
                det = 0;
                break;
            }
            if (piv != col) {
                std::swap(a[piv], a[col]);
                det = p - det;
            }
            det = modular::mulmod(det, a[col][col], p);
            std::uint64_t inv = modular::inverse(a[col][col], p);
            for (std::size_t r = col + 1; r < m; ++r) {
                if (a[r][col] == 0) continue;
                std::uint64_t f = modular::mulmod(a[r][col], inv, p);
                for (std::size_t c = col; c < m; ++c) {
                    std::uint64_t sub = modular::mulmod(f, a[col][c], p);
                    a[r][c] = a[r][c] >= sub ? a[r][c] - sub : a[r][c] + p - sub;
                }
            }
        }
        residues[k] = det;
    });

    // Incremental Garner-style reconstruction into [0, prod), then signed lift.
    BigInt value(0), mod(1);
    for (std::size_t k = 0; k < primes.size(); ++k) {
        std::uint64_t p = primes[k];
        std::uint64_t vmod = static_cast<std::uint64_t>(value % BigInt(static_cast<long long>(p)));
        std::uint64_t mmod = static_cast<std::uint64_t>(mod % BigInt(static_cast<long long>(p)));
        std::uint64_t diff = residues[k] >= vmod ? residues[k] - vmod : residues[k] + p - vmod;
        std::uint64_t t = modular::mulmod(diff, modular::inverse(mmod, p), p);
        value += mod * BigInt(static_cast<long long>(t));
        mod *= BigInt(static_cast<long long>(p));
    }
    if (value * 2 > mod) value -= mod;

    Rational det_scaled(value);
    return det_scaled * rational_pow(Rational(static_cast<long long>(x_value)), static_cast<int>(scale_total));
}

} // namespace bmwd
