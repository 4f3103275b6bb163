#include "bmwd/structure.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace bmwd;

namespace {

std::map<std::string, BigInt> dim_table(const BratteliLevel& lvl) {
    std::map<std::string, BigInt> out;
    for (std::size_t i = 0; i < lvl.labels.size(); ++i) out[lvl.labels[i].to_string()] = lvl.dims[i];
    return out;
}

} // namespace

TEST_CASE("component labels across the tower") {
    auto l2 = bd_component_labels(2);
    REQUIRE(l2.size() == 6);
    CHECK(l2[0].size == 2);
    CHECK(l2[4].size == 0);
    CHECK(l2[4].to_string() == "()+");
    CHECK(l2[5].to_string() == "()-");

    auto l3 = bd_component_labels(3);
    CHECK(l3.size() == 6);
    CHECK(l3[5].size == 1);
    CHECK(l3[5].to_string() == "{(1),()}");

    auto l4 = bd_component_labels(4);
    CHECK(l4.size() == 19);
    int size4 = 0, size2 = 0, size0 = 0;
    for (const auto& t : l4) {
        if (t.size == 4) ++size4;
        if (t.size == 2) ++size2;
        if (t.size == 0) ++size0;
    }
    CHECK(size4 == 13);
    CHECK(size2 == 4);
    CHECK(size0 == 2);

    CHECK_THROWS_AS(bd_component_labels(1), std::invalid_argument);
}

TEST_CASE("single-box moves between partitions") {
    CHECK(partition_box_added({}, {1}));
    CHECK(partition_box_added({1}, {2}));
    CHECK(partition_box_added({1}, {1, 1}));
    CHECK(partition_box_added({2, 1}, {2, 2}));
    CHECK_FALSE(partition_box_added({1}, {3}));
    CHECK_FALSE(partition_box_added({2}, {1, 1}));
    CHECK_FALSE(partition_box_added({1}, {1}));
    CHECK_FALSE(partition_box_added({2, 1}, {1, 1, 1, 1}));
}

TEST_CASE("branching edges follow the unordered box rule") {
    auto l2 = bd_component_labels(2);
    auto l3 = bd_component_labels(3);
    auto edges = branching_edges(l2, l3);

    // {(1),()} at level 3 absorbs every level-2 label
    std::size_t low_idx = 5;
    REQUIRE(l3[low_idx].to_string() == "{(1),()}");
    int into_low = 0;
    for (const auto& e : edges)
        if (e.to == low_idx) ++into_low;
    CHECK(into_low == 6);

    // {(2),(1)} connects to exactly (1)+, (1)-, {(2),()}
    std::size_t pair_idx = l3.size();
    for (std::size_t j = 0; j < l3.size(); ++j)
        if (l3[j].to_string() == "{(2),(1)}") pair_idx = j;
    REQUIRE(pair_idx < l3.size());
    std::set<std::string> sources;
    for (const auto& e : edges)
        if (e.to == pair_idx) sources.insert(l2[e.from].to_string());
    CHECK(sources == std::set<std::string>{"(1)+", "(1)-", "{(2),()}"});

    // adjacency is symmetric and never joins two signed labels
    for (const auto& e : edges) {
        CHECK(tower_adjacent(l2[e.from], l3[e.to]));
        CHECK(tower_adjacent(l3[e.to], l2[e.from]));
        CHECK_FALSE((l2[e.from].label.is_signed && l3[e.to].label.is_signed));
    }
    for (std::size_t i = 0; i < l2.size(); ++i)
        for (std::size_t j = 0; j < l3.size(); ++j)
            if (l2[i].label.is_signed && l3[j].label.is_signed)
                CHECK_FALSE(tower_adjacent(l2[i], l3[j]));
}

TEST_CASE("path-count dims at three strands") {
    BratteliGraph g = bratteli_tower(3);
    REQUIRE(g.levels.size() == 2);
    auto t2 = dim_table(g.level(2));
    for (const auto& [label, d] : t2) CHECK(d == 1);

    auto t3 = dim_table(g.level(3));
    CHECK(t3.at("{(3),()}") == 1);
    CHECK(t3.at("{(2,1),()}") == 2);
    CHECK(t3.at("{(1,1,1),()}") == 1);
    CHECK(t3.at("{(2),(1)}") == 3);
    CHECK(t3.at("{(1,1),(1)}") == 3);
    CHECK(t3.at("{(1),()}") == 6);
}

TEST_CASE("path-count dims at four strands") {
    BratteliGraph g = bratteli_tower(4);
    auto t4 = dim_table(g.level(4));
    CHECK(t4.at("{(2),()}") == 12);
    CHECK(t4.at("{(1,1),()}") == 12);
    CHECK(t4.at("(1)+") == 12);
    CHECK(t4.at("(1)-") == 12);
    CHECK(t4.at("()+") == 6);
    CHECK(t4.at("()-") == 6);

    BigInt total(0);
    const auto& lvl = g.level(4);
    for (std::size_t i = 0; i < lvl.labels.size(); ++i) total += lvl.dims[i] * lvl.dims[i];
    CHECK(total == 840);
}

TEST_CASE("tower identities per level") {
    std::map<int, long long> bmw_expected = {{2, 6}, {3, 60}, {4, 840}, {5, 15120}};
    std::map<int, long long> hecke_expected = {{2, 4}, {3, 24}, {4, 192}, {5, 1920}};
    BratteliGraph g = bratteli_tower(5);
    for (const auto& id : tower_identities(g)) {
        INFO("level " << id.m);
        CHECK(id.bmw_ok);
        CHECK(id.hecke_ok);
        CHECK(id.bmw_sum == BigInt(bmw_expected.at(id.m)));
        CHECK(id.hecke_sum == BigInt(hecke_expected.at(id.m)));
    }
    for (int n = 2; n <= 5; ++n) CHECK(bmw_dim_identity(n));
}

TEST_CASE("top-level path counts reproduce the tableau dimensions") {
    BratteliGraph g = bratteli_tower(5);
    for (const auto& lvl : g.levels)
        for (std::size_t i = 0; i < lvl.labels.size(); ++i) {
            if (lvl.labels[i].size != lvl.m) continue;
            INFO("level " << lvl.m << " label " << lvl.labels[i].to_string());
            CHECK(lvl.dims[i] == hd_dim(lvl.labels[i].label));
        }
}

TEST_CASE("quotient dimension check") {
    for (int n = 2; n <= 5; ++n) {
        INFO("n=" << n);
        CHECK(quotient_dim_check(n));
    }
    // the complement of the top-size block is the square of the lower table
    CHECK(bmw_dimension(3) - hecke_dimension(3) == 36);
    CHECK(bmw_dimension(4) - hecke_dimension(4) == 648);
    CHECK(bmw_dimension(2) - hecke_dimension(2) == 2);
}
