#include "bmwd/gram.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace bmwd;

namespace {

// Independent pairing oracle: resolves tr(a b~) by component search on the
// stacked 4n-point graph instead of the library's junction walker. Returns
// the exponent of x or the sentinel for a vanishing entry.
constexpr int kOracleZero = -1000;

int oracle_pairing(const DottedDiagram& a, const DottedDiagram& b_starred) {
    const int n = a.n();
    const int N = 4 * n;
    std::vector<std::vector<std::pair<int, int>>> adj(N);
    auto add = [&](int u, int v, int dot) {
        adj[u].push_back({v, dot});
        adj[v].push_back({u, dot});
    };
    for (int p = 0; p < 2 * n; ++p)
        if (a.partner(p) > p) add(p, a.partner(p), a.dot(p));
    for (int p = 0; p < 2 * n; ++p)
        if (b_starred.partner(p) > p) add(2 * n + p, 2 * n + b_starred.partner(p), b_starred.dot(p));
    for (int j = 0; j < n; ++j) add(n + j, 2 * n + j, 0); // glue a-bottoms to b-tops
    for (int i = 0; i < n; ++i) add(i, 3 * n + i, 0);     // close b-bottoms to a-tops
    std::vector<int> seen(N, 0);
    int cycles = 0;
    for (int s = 0; s < N; ++s) {
        if (seen[s]) continue;
        int dots = 0, prev = -1, cur = s;
        do {
            seen[cur] = 1;
            int nxt = -1, nd = 0;
            for (auto [to, dot] : adj[cur]) {
                if (to == prev) {
                    prev = -2; // one backtrack allowance handles parallel arcs
                    continue;
                }
                nxt = to;
                nd = dot;
                break;
            }
            dots ^= nd;
            prev = cur;
            cur = nxt;
        } while (cur != s);
        if (dots & 1) return kOracleZero;
        ++cycles;
    }
    return cycles - n;
}

Rational oracle_det(int n, const Rational& x) {
    auto basis = enumerate_even_basis(n);
    const int m = static_cast<int>(basis.size());
    std::vector<DottedDiagram> starred;
    for (const auto& d : basis) starred.push_back(star(d));
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int e = oracle_pairing(basis[i], starred[j]);
            a[i][j] = e == kOracleZero ? Rational(0) : rational_pow(x, e);
        }
    Rational det(1);
    for (int c = 0; c < m; ++c) {
        int piv = c;
        while (piv < m && a[piv][c] == 0) ++piv;
        if (piv == m) return Rational(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        Rational inv = Rational(1) / a[c][c];
        for (int r = c + 1; r < m; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] * inv;
            for (int cc = c; cc < m; ++cc) a[r][cc] -= f * a[c][cc];
        }
    }
    return det;
}

} // namespace

TEST_CASE("gram matrix shape at two and three strands") {
    for (int n = 2; n <= 3; ++n) {
        GramData g = gram_matrix(n);
        CHECK(g.size() == (n == 2 ? 6u : 60u));
        GramShapeReport rep = gram_shape(g);
        CHECK(rep.diagonal_ones);
        CHECK(rep.symmetric);
        CHECK(rep.offdiag_negative);
        CHECK(rep.max_offdiag_degree == -1);
    }
}

TEST_CASE("gram matrix agrees with the graph-search oracle") {
    for (int n = 2; n <= 3; ++n) {
        GramData g = gram_matrix(n);
        std::vector<DottedDiagram> starred;
        for (const auto& d : g.basis) starred.push_back(star(d));
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) {
                int e = oracle_pairing(g.basis[i], starred[j]);
                if (e == kOracleZero)
                    CHECK(g.is_zero_entry(i, j));
                else
                    CHECK(g.expo[i][j] == e);
            }
    }
}

TEST_CASE("two-strand gram determinant in closed form") {
    GramData g = gram_matrix(2);
    // det = 1 - 12 x^-2 + 16 x^-3, i.e. (x+4)(x-2)^2 / x^3
    LaurentPoly expected = LaurentPoly::one() -
                           Rational(12) * LaurentPoly::variable(Var::x, -2) +
                           Rational(16) * LaurentPoly::variable(Var::x, -3);
    CHECK(gram_det_symbolic(g) == expected);

    CHECK(gram_det_at(g, Rational(3)) == Rational(7, 27));
    CHECK(gram_det_at(g, Rational(5)) == Rational(81, 125));
    CHECK(gram_det_at(g, Rational(7)) == Rational(275, 343));
    for (long long x : {3, 5, 7}) {
        CHECK(gram_det_at(g, Rational(x)) == oracle_det(2, Rational(x)));
        CHECK(gram_det_at(g, Rational(x)) != 0);
    }
}

TEST_CASE("three-strand gram determinants are nonzero and match the oracle") {
    GramData g = gram_matrix(3);
    Rational at3 = gram_det_at(g, Rational(3));
    CHECK(at3 == Rational(BigInt("-14751754816303613908877"),
                          BigInt("608266787713357709119683992618861307")));
    for (long long x : {3, 5, 7}) {
        Rational det = gram_det_at(g, Rational(x));
        CHECK(det != 0);
        CHECK(det == oracle_det(3, Rational(x)));
    }
}

TEST_CASE("parallel gram assembly is deterministic") {
    GramData serial = gram_matrix(3, 1);
    GramData parallel = gram_matrix(3, 4);
    CHECK(serial.expo == parallel.expo);
    CHECK(serial.basis == parallel.basis);
}

TEST_CASE("modular determinant certificates") {
    GramData g2 = gram_matrix(2);
    std::uint64_t p = modular::primes_below(1ULL << 61, 1)[0];
    CHECK(modular::is_prime(p));
    CHECK_FALSE(modular::is_prime(p - 1));

    // residue must match the exact determinant reduced mod p
    Rational det = gram_det_at(g2, Rational(3)); // 7/27
    std::uint64_t expect = modular::mulmod(7 % p, modular::inverse(27 % p, p), p);
    CHECK(gram_det_mod(g2, 3, p) == expect);

    NonzeroCertificate cert = gram_nonzero_certificate(g2, 3);
    CHECK(cert.nonzero);
    CHECK(cert.prime == p);
    CHECK(cert.residue == expect);

    GramData g3 = gram_matrix(3);
    CHECK(gram_nonzero_certificate(g3, 5).nonzero);
}

TEST_CASE("chinese-remainder determinant agrees with exact evaluation") {
    GramData g2 = gram_matrix(2);
    CHECK(gram_det_exact_crt(g2, 3) == Rational(7, 27));
    CHECK(gram_det_exact_crt(g2, 5) == Rational(81, 125));

    GramData g3 = gram_matrix(3);
    CHECK(gram_det_exact_crt(g3, 3) == gram_det_at(g3, Rational(3)));
    CHECK(gram_det_exact_crt(g3, 7) == gram_det_at(g3, Rational(7)));
}

TEST_CASE("four-strand gram certificate stays tractable") {
    GramData g = gram_matrix(4, 4);
    CHECK(g.size() == 840u);
    GramShapeReport rep = gram_shape(g);
    CHECK(rep.diagonal_ones);
    CHECK(rep.symmetric);
    CHECK(rep.offdiag_negative);
    NonzeroCertificate cert = gram_nonzero_certificate(g, 3);
    CHECK(cert.nonzero);
}
