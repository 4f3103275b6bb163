#pragma once

#include "bmwd/rational.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmwd {

// A partition is a weakly decreasing list of positive parts; {} is the empty
// partition.
using Partition = std::vector<int>;

inline bool is_valid_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline int partition_size(const Partition& p) {
    int s = 0;
    for (int v : p) s += v;
    return s;
}

inline std::string partition_to_string(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

// All partitions of n, first part largest first: [n], [n-1,1], ..., [1^n].
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Product of the hook lengths of a partition.
inline BigInt hook_product(const Partition& p) {
    BigInt prod = 1;
    for (std::size_t r = 0; r < p.size(); ++r)
        for (int c = 0; c < p[r]; ++c) {
            int arm = p[r] - c - 1;
            int leg = 0;
            for (std::size_t r2 = r + 1; r2 < p.size() && p[r2] > c; ++r2) ++leg;
            prod *= arm + leg + 1;
        }
    return prod;
}

inline BigInt factorial_big(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Number of standard tableaux of a single shape, by the hook length formula.
inline BigInt standard_count(const Partition& p) {
    int n = partition_size(p);
    return factorial_big(n) / hook_product(p);
}

inline BigInt binomial_big(int n, int k) {
    if (k < 0 || k > n) return 0;
    return factorial_big(n) / (factorial_big(k) * factorial_big(n - k));
}

// Ordered pair of partitions; prints as "[2,1|1]".
struct Bipartition {
    std::array<Partition, 2> comp;

    Bipartition() = default;
    Bipartition(Partition a, Partition b) : comp{std::move(a), std::move(b)} {
        if (!is_valid_partition(comp[0]) || !is_valid_partition(comp[1]))
            throw std::invalid_argument("Bipartition: parts must be weakly decreasing and positive");
    }

    int size() const { return partition_size(comp[0]) + partition_size(comp[1]); }

    bool operator==(const Bipartition& o) const { return comp == o.comp; }
    bool operator!=(const Bipartition& o) const { return !(*this == o); }
    bool operator<(const Bipartition& o) const { return comp < o.comp; }

    std::string to_string() const {
        return "[" + partition_to_string(comp[0]) + "|" + partition_to_string(comp[1]) + "]";
    }

    static Bipartition parse(const std::string& s) {
        if (s.size() < 3 || s.front() != '[' || s.back() != ']')
            throw std::invalid_argument("Bipartition::parse: expected \"[a,b,..|c,..]\", got '" + s + "'");
        std::string body = s.substr(1, s.size() - 2);
        auto bar = body.find('|');
        if (bar == std::string::npos)
            throw std::invalid_argument("Bipartition::parse: missing '|' in '" + s + "'");
        auto parse_part = [&s](const std::string& text) {
            Partition p;
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty())
                    throw std::invalid_argument("Bipartition::parse: empty part in '" + s + "'");
                std::size_t used = 0;
                int v = std::stoi(item, &used);
                if (used != item.size())
                    throw std::invalid_argument("Bipartition::parse: bad part '" + item + "'");
                p.push_back(v);
            }
            if (!is_valid_partition(p))
                throw std::invalid_argument("Bipartition::parse: parts not weakly decreasing in '" + s + "'");
            return p;
        };
        return Bipartition(parse_part(body.substr(0, bar)), parse_part(body.substr(bar + 1)));
    }
};

// All bipartitions of n; the first component runs from size n down to 0 and
// each component follows the partitions_of order.
inline std::vector<Bipartition> enumerate_bipartitions(int n) {
    std::vector<Bipartition> out;
    for (int k = n; k >= 0; --k)
        for (const auto& a : partitions_of(k))
            for (const auto& b : partitions_of(n - k)) out.emplace_back(a, b);
    return out;
}

// Number of standard fillings of a bipartition: choose which entries land in
// each component, then fill both independently.
inline BigInt standard_count(const Bipartition& t) {
    int n = t.size();
    return binomial_big(n, partition_size(t.comp[0])) * standard_count(t.comp[0]) *
           standard_count(t.comp[1]);
}

// A standard filling of a bipartition with 1..n, rows and columns increasing
// within each component. Prints as "1 3/4|2" (rows joined by '/', components
// by '|').
class BiTableau {
public:
    struct Cell {
        int comp = 0;
        int row = 0;
        int col = 0;
    };

    BiTableau() = default;

    static BiTableau from_rows(std::array<std::vector<std::vector<int>>, 2> rows) {
        BiTableau t;
        t.rows_ = std::move(rows);
        t.rebuild_index();
        t.validate();
        return t;
    }

    int size() const { return static_cast<int>(where_.size()) - 1; }

    Bipartition shape() const {
        Partition a, b;
        for (const auto& r : rows_[0]) a.push_back(static_cast<int>(r.size()));
        for (const auto& r : rows_[1]) b.push_back(static_cast<int>(r.size()));
        return Bipartition(std::move(a), std::move(b));
    }

    const std::array<std::vector<std::vector<int>>, 2>& rows() const { return rows_; }

    Cell cell_of(int m) const {
        if (m < 1 || m > size()) throw std::out_of_range("BiTableau::cell_of");
        return where_[static_cast<std::size_t>(m)];
    }

    int component_of(int m) const { return cell_of(m).comp; }

    // Column minus row of the cell holding m, both zero based.
    int content_exponent(int m) const {
        Cell c = cell_of(m);
        return c.col - c.row;
    }

    bool in_same_row(int m) const {
        Cell a = cell_of(m), b = cell_of(m + 1);
        return a.comp == b.comp && a.row == b.row;
    }
    bool in_same_col(int m) const {
        Cell a = cell_of(m), b = cell_of(m + 1);
        return a.comp == b.comp && a.col == b.col;
    }

    // Exchanges entries m and m+1. Standard whenever they share neither a row
    // nor a column, which is the only case callers hit.
    BiTableau with_adjacent_swapped(int m) const {
        if (in_same_row(m) || in_same_col(m))
            throw std::invalid_argument("BiTableau: swap would break standardness");
        BiTableau t = *this;
        Cell a = t.where_[static_cast<std::size_t>(m)];
        Cell b = t.where_[static_cast<std::size_t>(m) + 1];
        t.rows_[a.comp][a.row][a.col] = m + 1;
        t.rows_[b.comp][b.row][b.col] = m;
        std::swap(t.where_[static_cast<std::size_t>(m)], t.where_[static_cast<std::size_t>(m) + 1]);
        return t;
    }

    BiTableau with_components_swapped() const {
        BiTableau t;
        t.rows_ = {rows_[1], rows_[0]};
        t.rebuild_index();
        return t;
    }

    bool operator==(const BiTableau& o) const { return rows_ == o.rows_; }
    bool operator!=(const BiTableau& o) const { return !(*this == o); }
    bool operator<(const BiTableau& o) const { return rows_ < o.rows_; }

    std::string to_string() const {
        std::string out;
        for (int c = 0; c < 2; ++c) {
            if (c) out += '|';
            for (std::size_t r = 0; r < rows_[c].size(); ++r) {
                if (r) out += '/';
                for (std::size_t j = 0; j < rows_[c][r].size(); ++j) {
                    if (j) out += ' ';
                    out += std::to_string(rows_[c][r][j]);
                }
            }
        }
        return out;
    }

    // All standard fillings of the shape, in lex order of the placement
    // sequence (component, then row) of the entries 1..n.
    static std::vector<BiTableau> standard(const Bipartition& shape) {
        int n = shape.size();
        std::array<std::vector<std::vector<int>>, 2> rows;
        std::vector<BiTableau> out;
        auto rec = [&](auto&& self, int next) -> void {
            if (next > n) {
                BiTableau t;
                t.rows_ = rows;
                t.rebuild_index();
                out.push_back(std::move(t));
                return;
            }
            for (int c = 0; c < 2; ++c) {
                const Partition& target = shape.comp[c];
                for (std::size_t r = 0; r <= rows[c].size() && r < target.size(); ++r) {
                    std::size_t len = r < rows[c].size() ? rows[c][r].size() : 0;
                    if (static_cast<int>(len) >= target[r]) continue;
                    if (r > 0 && rows[c][r - 1].size() <= len) continue;
                    if (r == rows[c].size()) rows[c].emplace_back();
                    rows[c][r].push_back(next);
                    self(self, next + 1);
                    rows[c][r].pop_back();
                    if (rows[c][r].empty()) rows[c].pop_back();
                }
            }
        };
        rec(rec, 1);
        return out;
    }

private:
    void rebuild_index() {
        int n = 0;
        for (const auto& comp : rows_)
            for (const auto& r : comp) n += static_cast<int>(r.size());
        where_.assign(static_cast<std::size_t>(n) + 1, Cell{});
        for (int c = 0; c < 2; ++c)
            for (std::size_t r = 0; r < rows_[c].size(); ++r)
                for (std::size_t j = 0; j < rows_[c][r].size(); ++j) {
                    int v = rows_[c][r][j];
                    if (v < 1 || v > n)
                        throw std::invalid_argument("BiTableau: entry out of range");
                    where_[static_cast<std::size_t>(v)] =
                        Cell{c, static_cast<int>(r), static_cast<int>(j)};
                }
    }

    void validate() const {
        int n = size();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int c = 0; c < 2; ++c) {
            for (std::size_t r = 0; r < rows_[c].size(); ++r) {
                if (rows_[c][r].empty()) throw std::invalid_argument("BiTableau: empty row");
                if (r > 0 && rows_[c][r].size() > rows_[c][r - 1].size())
                    throw std::invalid_argument("BiTableau: row lengths must weakly decrease");
                for (std::size_t j = 0; j < rows_[c][r].size(); ++j) {
                    int v = rows_[c][r][j];
                    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                        throw std::invalid_argument("BiTableau: entries must be a permutation of 1..n");
                    seen[static_cast<std::size_t>(v)] = true;
                    if (j > 0 && rows_[c][r][j - 1] >= v)
                        throw std::invalid_argument("BiTableau: rows must increase");
                    if (r > 0 && rows_[c][r - 1][j] >= v)
                        throw std::invalid_argument("BiTableau: columns must increase");
                }
            }
        }
    }

    std::array<std::vector<std::vector<int>>, 2> rows_;
    std::vector<Cell> where_; // indexed by entry, [0] unused
};

} // namespace bmwd
