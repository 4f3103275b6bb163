#pragma once

#include "bmwd/heckerep.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bmwd {

// Label of a simple component somewhere in the tower: the index-set entry
// together with its box count (which can lag the level by any even amount).
struct TowerLabel {
    int size = 0;
    HDLabel label;

    bool operator==(const TowerLabel& o) const { return size == o.size && label == o.label; }
    bool operator<(const TowerLabel& o) const {
        return std::tie(size, label) < std::tie(o.size, o.label);
    }
    std::string to_string() const { return label.to_string(); }
};

inline std::vector<TowerLabel> bd_component_labels(int n) {
    if (n < 2) throw std::invalid_argument("bd_component_labels: need n >= 2");
    std::vector<TowerLabel> out;
    for (int s = n; s >= 0; s -= 2)
        for (const auto& lab : hd_index_set(s)) out.push_back({s, lab});
    return out;
}

inline bool partition_box_added(const Partition& p, const Partition& q) {
    if (partition_size(q) != partition_size(p) + 1) return false;
    if (q.size() < p.size() || q.size() > p.size() + 1) return false;
    int diffs = 0;
    for (std::size_t r = 0; r < q.size(); ++r) {
        int pr = r < p.size() ? p[r] : 0;
        if (q[r] == pr) continue;
        if (q[r] == pr + 1)
            ++diffs;
        else
            return false;
    }
    return diffs == 1;
}

// Adjacency across one level boundary: the bipartitions, read as unordered
// sign-forgetting pairs, differ by a single box in one component.
inline bool tower_adjacent(const TowerLabel& a, const TowerLabel& b) {
    const TowerLabel& lo = a.size < b.size ? a : b;
    const TowerLabel& hi = a.size < b.size ? b : a;
    if (hi.size != lo.size + 1) return false;
    const auto& A = lo.label.shape.comp;
    const auto& C = hi.label.shape.comp;
    return (A[0] == C[0] && partition_box_added(A[1], C[1])) ||
           (A[0] == C[1] && partition_box_added(A[1], C[0])) ||
           (A[1] == C[0] && partition_box_added(A[0], C[1])) ||
           (A[1] == C[1] && partition_box_added(A[0], C[0]));
}

struct BratteliEdge {
    std::size_t from = 0; // index into the lower level's labels
    std::size_t to = 0;   // index into the upper level's labels
};

inline std::vector<BratteliEdge> branching_edges(const std::vector<TowerLabel>& lower,
                                                 const std::vector<TowerLabel>& upper) {
    std::vector<BratteliEdge> out;
    for (std::size_t i = 0; i < lower.size(); ++i)
        for (std::size_t j = 0; j < upper.size(); ++j)
            if (tower_adjacent(lower[i], upper[j])) out.push_back({i, j});
    return out;
}

struct BratteliLevel {
    int m = 0;
    std::vector<TowerLabel> labels;
    std::vector<BigInt> dims;
};

struct BratteliGraph {
    std::vector<BratteliLevel> levels;              // levels[i].m == i + 2
    std::vector<std::vector<BratteliEdge>> edges;   // edges[i]: level i+2 -> i+3

    const BratteliLevel& level(int m) const { return levels.at(static_cast<std::size_t>(m - 2)); }
};

// Builds levels 2..n with path-count dimensions seeded all-ones at level 2.
inline BratteliGraph bratteli_tower(int n) {
    if (n < 2) throw std::invalid_argument("bratteli_tower: need n >= 2");
    BratteliGraph g;
    for (int m = 2; m <= n; ++m) {
        BratteliLevel lvl;
        lvl.m = m;
        lvl.labels = bd_component_labels(m);
        if (m == 2) {
            lvl.dims.assign(lvl.labels.size(), BigInt(1));
        } else {
            const BratteliLevel& prev = g.levels.back();
            auto edges = branching_edges(prev.labels, lvl.labels);
            lvl.dims.assign(lvl.labels.size(), BigInt(0));
            for (const auto& e : edges) lvl.dims[e.to] += prev.dims[e.from];
            g.edges.push_back(std::move(edges));
        }
        g.levels.push_back(std::move(lvl));
    }
    return g;
}

inline BratteliGraph path_count_dims(int n) { return bratteli_tower(n); }

inline BigInt double_factorial_big(int k) {
    BigInt r(1);
    for (int v = k; v > 1; v -= 2) r *= v;
    return r;
}

inline BigInt bmw_dimension(int m) {
    BigInt r = double_factorial_big(2 * m - 1);
    for (int i = 1; i < m; ++i) r *= 2;
    return r;
}

inline BigInt hecke_dimension(int m) {
    BigInt r = factorial_big(m);
    for (int i = 1; i < m; ++i) r *= 2;
    return r;
}

// Per-level sums of squared path-count dims against the closed forms.
struct LevelIdentity {
    int m = 0;
    BigInt hecke_sum, hecke_expected;
    BigInt bmw_sum, bmw_expected;
    bool hecke_ok = false;
    bool bmw_ok = false;
};

inline LevelIdentity level_identity(const BratteliLevel& lvl) {
    LevelIdentity id;
    id.m = lvl.m;
    id.hecke_expected = hecke_dimension(lvl.m);
    id.bmw_expected = bmw_dimension(lvl.m);
    for (std::size_t i = 0; i < lvl.labels.size(); ++i) {
        BigInt sq = lvl.dims[i] * lvl.dims[i];
        id.bmw_sum += sq;
        if (lvl.labels[i].size == lvl.m) id.hecke_sum += sq;
    }
    id.hecke_ok = id.hecke_sum == id.hecke_expected;
    id.bmw_ok = id.bmw_sum == id.bmw_expected;
    return id;
}

inline std::vector<LevelIdentity> tower_identities(const BratteliGraph& g) {
    std::vector<LevelIdentity> out;
    for (const auto& lvl : g.levels) out.push_back(level_identity(lvl));
    return out;
}

inline bool bmw_dim_identity(int n) {
    LevelIdentity id = level_identity(bratteli_tower(n).levels.back());
    return id.bmw_ok && id.hecke_ok;
}

// The ideal complementing the Hecke quotient carries everything of size < n.
inline bool quotient_dim_check(int n) {
    BratteliGraph g = bratteli_tower(n);
    const BratteliLevel& lvl = g.levels.back();
    BigInt lower_sum(0);
    for (std::size_t i = 0; i < lvl.labels.size(); ++i)
        if (lvl.labels[i].size < n) lower_sum += lvl.dims[i] * lvl.dims[i];
    return bmw_dimension(n) - hecke_dimension(n) == lower_sum;
}

} // namespace bmwd
