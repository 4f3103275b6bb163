#include "bmwd/signed_perm.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace bmwd;

TEST_CASE("signed permutation basics") {
    SignedPerm w({2, -1, 3});
    CHECK(w.apply(1) == 2);
    CHECK(w.apply(-2) == 1);
    CHECK(w.negative_count() == 1);
    CHECK_FALSE(w.has_even_sign());
    CHECK(w.to_string() == "[2,-1,3]");
    CHECK(SignedPerm::parse("[2, -1, 3]") == w);
    CHECK(compose(w, w.inverse()) == SignedPerm::identity(3));
    CHECK(compose(w.inverse(), w) == SignedPerm::identity(3));

    CHECK_THROWS_AS(SignedPerm({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SignedPerm({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SignedPerm({3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SignedPerm::parse("[1,a]"), std::invalid_argument);
    CHECK_THROWS_AS(w.apply(4), std::out_of_range);
}

TEST_CASE("generators have the documented images") {
    auto wb = wb_generators(3);
    CHECK(wb[0] == SignedPerm({-1, 2, 3}));
    CHECK(wb[1] == SignedPerm({2, 1, 3}));
    CHECK(wb[2] == SignedPerm({1, 3, 2}));

    auto wd = wd_generators(3);
    CHECK(wd[0] == SignedPerm({-2, -1, 3}));   // Y X1 Y
    CHECK(wd[1] == wb[1]);
    CHECK(wd[2] == wb[2]);
}

TEST_CASE("composition applies the right factor first") {
    auto wb = wb_generators(2);
    // (Y * X1)(1) = Y(X1(1)) = Y(2) = 2, (Y * X1)(2) = Y(1) = -1.
    SignedPerm p = compose(wb[0], wb[1]);
    CHECK(p == SignedPerm({2, -1}));
    SignedPerm q = compose(wb[1], wb[0]);
    CHECK(q == SignedPerm({-2, 1}));
    CHECK(p != q);
}

TEST_CASE("group orders for types B and D") {
    for (std::size_t n = 2; n <= 5; ++n) {
        CHECK(enumerate_group(wb_generators(n)).size() == wb_order(n));
        CHECK(enumerate_group(wd_generators(n)).size() == wd_order(n));
    }
    CHECK(wb_order(3) == 48);
    CHECK(wd_order(3) == 24);
}

TEST_CASE("embedding verification for n = 2..5") {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto rep = verify_embedding(n);
        INFO(rep.detail);
        CHECK(rep.relations_ok);
        CHECK(rep.order_ok);
        CHECK(rep.image_ok);
        CHECK(rep.ok());
        CHECK(rep.subgroup_order == wd_order(n));
    }
}

TEST_CASE("composition is associative and sign parity is multiplicative", "[property]") {
    std::mt19937 rng(2024u);
    auto random_sp = [&](std::size_t n) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
        for (std::size_t i = n; i > 1; --i)
            std::swap(v[i - 1], v[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)]);
        for (auto& e : v)
            if (std::uniform_int_distribution<int>(0, 1)(rng)) e = -e;
        return SignedPerm(v);
    };
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t n = 2 + iter % 4;
        SignedPerm a = random_sp(n), b = random_sp(n), c = random_sp(n);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, b).has_even_sign() == (a.has_even_sign() == b.has_even_sign()));
        CHECK(a.inverse().inverse() == a);
        CHECK(compose(a, b).inverse() == compose(b.inverse(), a.inverse()));
    }
}
