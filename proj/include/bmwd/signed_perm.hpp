#pragma once

#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmwd {

// Signed permutation of {1..n}: image[i-1] = w(i) with w(-i) = -w(i).
class SignedPerm {
public:
    SignedPerm() = default;
    explicit SignedPerm(std::vector<int> image) : image_(std::move(image)) { validate(); }

    static SignedPerm identity(std::size_t n) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
        return SignedPerm(std::move(v));
    }

    std::size_t degree() const { return image_.size(); }

    int apply(int i) const {
        if (i == 0 || static_cast<std::size_t>(i < 0 ? -i : i) > image_.size())
            throw std::out_of_range("SignedPerm::apply");
        return i > 0 ? image_[i - 1] : -image_[-i - 1];
    }

    // (a*b)(i) = a(b(i)): in a product word the right factor acts first.
    friend SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
        if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
        std::vector<int> v(a.degree());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.apply(b.image_[i]);
        return SignedPerm(std::move(v));
    }

    SignedPerm inverse() const {
        std::vector<int> v(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) {
            int im = image_[i];
            if (im > 0) v[im - 1] = static_cast<int>(i + 1);
            else v[-im - 1] = -static_cast<int>(i + 1);
        }
        return SignedPerm(std::move(v));
    }

    std::size_t negative_count() const {
        std::size_t k = 0;
        for (int v : image_)
            if (v < 0) ++k;
        return k;
    }
    bool has_even_sign() const { return negative_count() % 2 == 0; }

    bool operator==(const SignedPerm& o) const { return image_ == o.image_; }
    bool operator!=(const SignedPerm& o) const { return !(*this == o); }
    bool operator<(const SignedPerm& o) const { return image_ < o.image_; }

    const std::vector<int>& image() const { return image_; }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < image_.size(); ++i) {
            if (i) os << ",";
            os << image_[i];
        }
        os << "]";
        return os.str();
    }

    // Accepts the bracket literal, e.g. "[2,-1,3]".
    static SignedPerm parse(const std::string& s) {
        std::size_t a = s.find('[');
        std::size_t b = s.rfind(']');
        if (a == std::string::npos || b == std::string::npos || b < a)
            throw std::invalid_argument("SignedPerm: expected [..] literal");
        std::vector<int> v;
        std::string body = s.substr(a + 1, b - a - 1);
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            std::size_t pos = 0;
            int val = std::stoi(tok, &pos);
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw std::invalid_argument("SignedPerm: bad entry '" + tok + "'");
            v.push_back(val);
        }
        if (v.empty() && !body.empty()) throw std::invalid_argument("SignedPerm: bad literal");
        return SignedPerm(std::move(v));
    }

private:
    void validate() const {
        std::vector<bool> seen(image_.size(), false);
        for (int v : image_) {
            std::size_t a = static_cast<std::size_t>(v < 0 ? -v : v);
            if (v == 0 || a > image_.size() || seen[a - 1])
                throw std::invalid_argument("SignedPerm: not a signed permutation");
            seen[a - 1] = true;
        }
    }

    std::vector<int> image_;
};

// Type B generators: index 0 is the sign flip on 1, index i >= 1 swaps i, i+1.
inline std::vector<SignedPerm> wb_generators(std::size_t n) {
    if (n < 2) throw std::invalid_argument("wb_generators: need n >= 2");
    std::vector<SignedPerm> gens;
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<int>(i + 1);
    y[0] = -1;
    gens.emplace_back(std::move(y));
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<int> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<int>(k + 1);
        std::swap(v[i - 1], v[i]);
        gens.emplace_back(std::move(v));
    }
    return gens;
}

// Type D generators: index 0 is the negating transposition 1 -> -2, 2 -> -1,
// indices i >= 1 are the plain transpositions.
inline std::vector<SignedPerm> wd_generators(std::size_t n) {
    if (n < 2) throw std::invalid_argument("wd_generators: need n >= 2");
    std::vector<SignedPerm> gens = wb_generators(n);
    const SignedPerm& y = gens[0];
    gens[0] = compose(compose(y, gens[1]), y);
    return gens;
}

inline std::set<SignedPerm> enumerate_group(const std::vector<SignedPerm>& gens) {
    if (gens.empty()) throw std::invalid_argument("enumerate_group: no generators");
    std::set<SignedPerm> seen;
    std::vector<SignedPerm> frontier{SignedPerm::identity(gens[0].degree())};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<SignedPerm> next;
        for (const auto& w : frontier) {
            for (const auto& g : gens) {
                SignedPerm p = compose(w, g);
                if (seen.insert(p).second) next.push_back(std::move(p));
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

inline std::uint64_t factorial_u64(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

inline std::uint64_t wb_order(std::size_t n) { return (std::uint64_t(1) << n) * factorial_u64(n); }
inline std::uint64_t wd_order(std::size_t n) {
    return (std::uint64_t(1) << (n - 1)) * factorial_u64(n);
}

struct EmbeddingReport {
    std::size_t n = 0;
    bool relations_ok = false;   // images satisfy the type D Coxeter relations
    bool order_ok = false;       // generated subgroup has order 2^(n-1) n!
    bool image_ok = false;       // subgroup equals the even-sign part of the type B group
    std::uint64_t subgroup_order = 0;
    std::uint64_t expected_order = 0;
    std::string detail;

    bool ok() const { return relations_ok && order_ok && image_ok; }
};

// Checks that X0 -> Y X1 Y, Xi -> Xi embeds the type D reflection group into
// type B with image the even-sign subgroup.  The order count doubles as an
// injectivity check.
inline EmbeddingReport verify_embedding(std::size_t n) {
    EmbeddingReport rep;
    rep.n = n;
    rep.expected_order = wd_order(n);
    std::vector<SignedPerm> g = wd_generators(n);
    const SignedPerm id = SignedPerm::identity(n);

    bool rel = true;
    std::ostringstream detail;
    auto require = [&](bool cond, const std::string& name) {
        if (!cond) {
            rel = false;
            detail << "failed relation " << name << "; ";
        }
    };
    auto braids = [&](const SignedPerm& a, const SignedPerm& b) {
        return compose(compose(a, b), a) == compose(compose(b, a), b);
    };
    auto commutes = [&](const SignedPerm& a, const SignedPerm& b) {
        return compose(a, b) == compose(b, a);
    };
    for (std::size_t i = 0; i < n; ++i)
        require(compose(g[i], g[i]) == id, "involution " + std::to_string(i));
    for (std::size_t i = 1; i + 1 < n; ++i)
        require(braids(g[i], g[i + 1]), "braid " + std::to_string(i));
    if (n >= 3) require(braids(g[0], g[2]), "braid 0-2");
    require(commutes(g[0], g[1]), "commute 0-1");
    for (std::size_t j = 3; j < n; ++j) require(commutes(g[0], g[j]), "commute 0-" + std::to_string(j));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j)
            require(commutes(g[i], g[j]), "commute " + std::to_string(i) + "-" + std::to_string(j));
    rep.relations_ok = rel;

    std::set<SignedPerm> sub = enumerate_group(g);
    rep.subgroup_order = sub.size();
    rep.order_ok = (rep.subgroup_order == rep.expected_order);
    if (!rep.order_ok)
        detail << "subgroup order " << rep.subgroup_order << " != " << rep.expected_order << "; ";

    std::set<SignedPerm> even;
    for (const auto& w : enumerate_group(wb_generators(n)))
        if (w.has_even_sign()) even.insert(w);
    rep.image_ok = (sub == even);
    if (!rep.image_ok) detail << "image differs from even-sign subgroup; ";

    rep.detail = detail.str();
    return rep;
}

} // namespace bmwd
