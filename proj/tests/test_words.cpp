#include "bmwd/model_check.hpp"
#include "bmwd/prover.hpp"
#include "bmwd/words.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace bmwd;

TEST_CASE("token and word literals round trip") {
    CHECK(tokX(0).to_string() == "X0");
    CHECK(tokXinv(1).to_string() == "X1^-1");
    CHECK(tokE(2).to_string() == "e2");
    CHECK(tokY().to_string() == "Y");

    LinComb c = LinComb::parse("X0 X1^-1 e2 Y");
    REQUIRE(c.term_count() == 1);
    CHECK(c.terms().begin()->first == Word{tokX(0), tokXinv(1), tokE(2), tokY()});
    CHECK(c.terms().begin()->second == ScalarFraction::one());

    LinComb d = LinComb::parse("(l) Y e1 Y");
    REQUIRE(d.term_count() == 1);
    CHECK(d.terms().begin()->second == ScalarFraction(poly_l()));

    LinComb e = LinComb::parse("(q - q^-1) X1 + (3/2) 1 - (x)/(1 - l) e0");
    CHECK(e.term_count() == 3);
    CHECK(LinComb::parse(e.to_string()) == e);

    CHECK(LinComb::parse("1") == LinComb::unit());
    CHECK(LinComb::parse("X1 - X1").is_zero());
    CHECK_THROWS_AS(LinComb::parse("e1^-1"), std::invalid_argument);
    CHECK_THROWS_AS(LinComb::parse("Z3"), std::invalid_argument);
    CHECK_THROWS_AS(LinComb::parse("X"), std::invalid_argument);
    CHECK_THROWS_AS(LinComb::parse(""), std::invalid_argument);
}

TEST_CASE("lincomb algebra") {
    LinComb a = LinComb::parse("X1");
    LinComb b = LinComb::parse("e1 + (q) 1");
    LinComb prod = a * b;
    CHECK(prod == LinComb::parse("X1 e1 + (q) X1"));
    CHECK((a - a).is_zero());
    CHECK(ScalarFraction(poly_x()) * LinComb::unit() == LinComb::parse("(x) 1"));
}

TEST_CASE("builtin presentations have the expected shape") {
    auto wd = builtin_presentation(AlgebraKind::WD, 4);
    CHECK(wd.alphabet.size() == 4);
    // braid: (1,2),(2,3),(0,2); commute: (0,1),(0,3),(1,3); squares: 4.
    CHECK(wd.relations.size() == 3 + 3 + 4);

    auto wb = builtin_presentation(AlgebraKind::WB, 4);
    CHECK(wb.alphabet.size() == 4);
    CHECK(wb.relations.size() == 1 + 2 + 2 + 1 + 4);

    auto hd = builtin_presentation(AlgebraKind::HD, 3);
    bool has_quad = false;
    for (const auto& rel : hd.relations)
        if (rel.label == "hd[0]") {
            has_quad = true;
            CHECK(rel.rhs == LinComb::parse("(q - 1) X0 + (q) 1"));
        }
    CHECK(has_quad);

    auto bd = builtin_presentation(AlgebraKind::BD, 3);
    CHECK(bd.alphabet.size() == 9);
    bool saw_bd3b = false, saw_def5v = false;
    for (const auto& rel : bd.relations) {
        if (rel.label == "bd3b") {
            saw_bd3b = true;
            CHECK(rel.lhs == LinComb::parse("e1 X0"));
            CHECK(rel.rhs == LinComb::parse("e1"));
        }
        if (rel.label == "def5v") {
            saw_def5v = true;
            CHECK(rel.lhs == LinComb::parse("e2 X0 e2"));
            CHECK(rel.rhs == LinComb::parse("(l^-1) e2"));
        }
    }
    CHECK(saw_bd3b);
    CHECK(saw_def5v);

    CHECK_THROWS_AS(builtin_presentation(AlgebraKind::BD, 1), std::invalid_argument);
    CHECK(algebra_name(parse_algebra("BBprime")) == "BBprime");
    CHECK_THROWS_AS(parse_algebra("XX"), std::invalid_argument);
}

TEST_CASE("reflection group models satisfy their presentations") {
    for (std::size_t n = 2; n <= 4; ++n) {
        auto wb = builtin_presentation(AlgebraKind::WB, n);
        auto wd = builtin_presentation(AlgebraKind::WD, n);
        auto zb = builtin_presentation(AlgebraKind::ZB, n);
        auto zd = builtin_presentation(AlgebraKind::ZD, n);
        INFO("n = " << n);
        CHECK(all_relations_hold(wb, wb_group_model(n)));
        CHECK(all_relations_hold(wd, wd_group_model(n)));
        // The reflection models also satisfy the braid presentations.
        CHECK(all_relations_hold(zb, wb_group_model(n)));
        CHECK(all_relations_hold(zd, wd_group_model(n)));
    }
}

TEST_CASE("relation checks report failures") {
    // Assigning the type B generators to the D presentation must break hd2
    // (Y X2 Y = X2 Y X2 is false) while keeping plain braid relations green.
    auto wd = builtin_presentation(AlgebraKind::WD, 3);
    auto gens = wb_generators(3);
    std::map<GenToken, SignedPerm> assign;
    for (int i = 0; i < 3; ++i) assign.emplace(tokX(i), gens[static_cast<std::size_t>(i)]);
    SignedPermGroupModel wrong(3, std::move(assign));
    auto checks = check_relations_in_model(wd, wrong);
    bool hd2_fails = false, hd1_holds = false;
    for (const auto& chk : checks) {
        if (chk.label == "hd2") hd2_fails = !chk.ok;
        if (chk.label == "hd1[1,2]") hd1_holds = chk.ok;
    }
    CHECK(hd2_fails);
    CHECK(hd1_holds);
}

TEST_CASE("rule derivation pivots every term") {
    auto bb = builtin_presentation(AlgebraKind::BBprime, 2);
    auto rules = derive_rules(bb);
    // kauff[1] pivots on X1^-1, X1 and e1.
    int kauff_rules = 0;
    for (const auto& r : rules)
        if (r.label == "kauff[1]") ++kauff_rules;
    CHECK(kauff_rules == 3);
    for (const auto& r : rules) CHECK(!r.pattern.empty());
}

TEST_CASE("apply_rule rewrites one occurrence in place") {
    auto bb = builtin_presentation(AlgebraKind::BBprime, 2);
    auto rules = derive_rules(bb);
    std::size_t yy_rule = rules.size();
    for (std::size_t i = 0; i < rules.size(); ++i)
        if (rules[i].label == "yy" && rules[i].pattern == Word{tokY(), tokY()}) yy_rule = i;
    REQUIRE(yy_rule < rules.size());

    LinComb state = LinComb::parse("(l) Y Y X1 + e1");
    LinComb next = apply_rule(state, Word{tokY(), tokY(), tokX(1)}, 0, rules[yy_rule]);
    CHECK(next == LinComb::parse("X1 + e1"));
    CHECK_THROWS_AS(apply_rule(state, Word{tokY(), tokY(), tokX(1)}, 1, rules[yy_rule]),
                    std::invalid_argument);
}

TEST_CASE("prover closes simple identities") {
    auto wd = builtin_presentation(AlgebraKind::WD, 3);
    auto r1 = prove_equal(wd, LinComb::parse("X0 X0"), LinComb::unit());
    CHECK(r1.status == ProveStatus::Proved);
    CHECK(replay_trace(wd, LinComb::parse("X0 X0"), LinComb::unit(), r1));

    auto bb = builtin_presentation(AlgebraKind::BBprime, 2);
    LinComb lhs = LinComb::parse("(l) Y X1 Y") * LinComb::parse("(l) Y X1^-1 Y");
    auto r2 = prove_equal(bb, lhs, LinComb::unit());
    CHECK(r2.status == ProveStatus::Proved);
    CHECK(replay_trace(bb, lhs, LinComb::unit(), r2));

    // e0 e0 = x e0 pushed through the image by hand.
    LinComb lhs3 = LinComb::parse("(l^2) Y e1 Y Y e1 Y");
    LinComb rhs3 = LinComb::parse("(x*l) Y e1 Y");
    auto r3 = prove_equal(bb, lhs3, rhs3);
    CHECK(r3.status == ProveStatus::Proved);
    CHECK(replay_trace(bb, lhs3, rhs3, r3));

    // Multi-term meet: X1^-1 expands by the Kauffman relation.
    LinComb lhs4 = LinComb::parse("X1^-1");
    LinComb rhs4 = LinComb::parse("X1 - (q - q^-1) 1 + (q - q^-1) e1");
    auto r4 = prove_equal(bb, lhs4, rhs4);
    CHECK(r4.status == ProveStatus::Proved);
    CHECK(replay_trace(bb, lhs4, rhs4, r4));
}

TEST_CASE("prover reports inconclusive under a tiny budget") {
    auto bb = builtin_presentation(AlgebraKind::BBprime, 3);
    ProveBudget tiny;
    tiny.max_states = 30;
    tiny.max_depth = 2;
    auto r = prove_equal(bb, LinComb::parse("X1 X2 X1 X2"), LinComb::parse("(q) e2 e1"), tiny);
    CHECK(r.status == ProveStatus::Inconclusive);
    CHECK(r.states_explored <= 30);
    CHECK_FALSE(replay_trace(bb, LinComb::parse("X1 X2 X1 X2"), LinComb::parse("(q) e2 e1"), r));
}

TEST_CASE("prove is symmetric in its arguments", "[property]") {
    auto bb = builtin_presentation(AlgebraKind::BBprime, 2);
    std::vector<std::pair<std::string, std::string>> cases = {
        {"Y Y", "(l^-1) 1"},
        {"e1 Y e1", "(A) e1"},
        {"X1 e1", "(l) e1"},
        {"e1 X1 e1", "(l*x) e1"},
        {"Y X1 Y X1", "X1 Y X1 Y"},
        {"X1 X1^-1 e1", "e1"},
    };
    for (const auto& [l, r] : cases) {
        auto fwd = prove_equal(bb, LinComb::parse(l), LinComb::parse(r));
        auto bwd = prove_equal(bb, LinComb::parse(r), LinComb::parse(l));
        INFO(l << " = " << r);
        CHECK(fwd.status == ProveStatus::Proved);
        CHECK(bwd.status == ProveStatus::Proved);
        CHECK(replay_trace(bb, LinComb::parse(l), LinComb::parse(r), fwd));
        CHECK(replay_trace(bb, LinComb::parse(r), LinComb::parse(l), bwd));
    }
}

TEST_CASE("corrupted traces are rejected by replay") {
    auto wd = builtin_presentation(AlgebraKind::WD, 2);
    LinComb lhs = LinComb::parse("X0 X0 X1");
    LinComb rhs = LinComb::parse("X1");
    auto proof = prove_equal(wd, lhs, rhs);
    REQUIRE(proof.status == ProveStatus::Proved);
    REQUIRE(!proof.trace.empty());

    auto bad = proof;
    bad.trace[0].pos += 1;
    CHECK_FALSE(replay_trace(wd, lhs, rhs, bad));

    auto bad2 = proof;
    bad2.meet_key += " X1";
    CHECK_FALSE(replay_trace(wd, lhs, rhs, bad2));

    auto bad3 = proof;
    bad3.trace[0].rule_label = "nonexistent";
    CHECK_FALSE(replay_trace(wd, lhs, rhs, bad3));
}

TEST_CASE("rewriting preserves group algebra evaluation", "[property]") {
    auto wb = builtin_presentation(AlgebraKind::WB, 3);
    auto rules = derive_rules(wb);
    auto model = wb_group_model(3);
    std::mt19937 rng(909u);
    std::uniform_int_distribution<int> len(1, 6), tok(0, 2), coefd(-4, 4), termd(1, 3);
    int applied = 0;
    for (int iter = 0; iter < 400; ++iter) {
        LinComb state;
        int terms = termd(rng);
        for (int t = 0; t < terms; ++t) {
            Word w;
            int L = len(rng);
            for (int k = 0; k < L; ++k) {
                int g = tok(rng);
                w.tokens.push_back(g == 0 ? tokY() : tokX(g));
            }
            int c = coefd(rng);
            if (c == 0) c = 1;
            state.add_term(w, ScalarFraction(Rational(c)));
        }
        // Find an applicable rule occurrence.
        for (const auto& [w, c] : state.terms()) {
            (void)c;
            bool done = false;
            for (std::size_t ri = 0; ri < rules.size() && !done; ++ri) {
                const auto& rule = rules[ri];
                if (rule.pattern.size() > w.size()) continue;
                for (std::size_t pos = 0; pos + rule.pattern.size() <= w.size(); ++pos) {
                    if (!std::equal(rule.pattern.tokens.begin(), rule.pattern.tokens.end(),
                                    w.tokens.begin() + static_cast<std::ptrdiff_t>(pos)))
                        continue;
                    LinComb next = apply_rule(state, w, pos, rule);
                    CHECK(model.eq(eval_lincomb_in_model(model, state),
                                   eval_lincomb_in_model(model, next)));
                    ++applied;
                    done = true;
                    break;
                }
            }
            if (done) break;
        }
    }
    CHECK(applied > 200);
}

TEST_CASE("image map and image relation verification at n = 2") {
    CHECK(bd_image_of_word(Word{tokX(0)}) == LinComb::parse("(l) Y X1 Y"));
    CHECK(bd_image_of_word(Word{tokE(0), tokE(0)}) == LinComb::parse("(l^2) Y e1 Y Y e1 Y"));
    CHECK_THROWS_AS(bd_image_of_token(tokYinv()), std::invalid_argument);

    auto report = verify_image_relations(2);
    CHECK(report.n == 2);
    CHECK(report.inconclusive == 0);
    CHECK(report.unverifiable == 1);
    CHECK(report.all_proved());
    std::size_t bullets_proved = 0;
    for (const auto& chk : report.bullet_checks) {
        if (chk.unverifiable_as_printed) {
            CHECK(chk.label == "bullet[e0X1e0]");
        } else {
            CHECK(chk.status == ProveStatus::Proved);
            ++bullets_proved;
        }
    }
    CHECK(bullets_proved == 8); // n = 2 skips the three checks touching X2/e2
    for (const auto& chk : report.relation_checks) {
        INFO(chk.label);
        CHECK(chk.status == ProveStatus::Proved);
    }
}
