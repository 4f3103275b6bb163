#pragma once

#include "bmwd/words.hpp"

#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace bmwd {

// One oriented rewrite: a nonempty subword pattern and its replacement.
// Rules are derived by solving each defining relation for each of its words,
// so every relation is usable in both directions.  Scalar-only relations are
// applied as deletions; the inverse insertion moves are intentionally not
// generated (the bidirectional search makes them redundant).
struct RewriteRule {
    std::string label; // relation the rule was derived from
    Word pattern;
    LinComb replacement;
};

inline std::vector<RewriteRule> derive_rules(const Presentation& pres) {
    std::vector<RewriteRule> rules;
    std::unordered_set<std::string> seen;
    auto pivot = [&](const Relation& rel, const LinComb& side, const LinComb& other) {
        for (const auto& [w, c] : side.terms()) {
            if (w.empty()) continue;
            LinComb rest = side;
            rest.add_term(w, -c);
            LinComb repl = c.inverse() * (other - rest);
            std::string key = w.to_string() + " -> " + repl.to_string();
            if (!seen.insert(key).second) continue;
            rules.push_back({rel.label, w, std::move(repl)});
        }
    };
    for (const auto& rel : pres.relations) {
        pivot(rel, rel.lhs, rel.rhs);
        pivot(rel, rel.rhs, rel.lhs);
    }
    return rules;
}

// Replaces the occurrence of rule.pattern at token offset pos inside the
// term with word w.  The rest of the combination is untouched.
inline LinComb apply_rule(const LinComb& state, const Word& w, std::size_t pos,
                          const RewriteRule& rule) {
    auto it = state.terms().find(w);
    if (it == state.terms().end()) throw std::invalid_argument("apply_rule: term not in state");
    if (pos + rule.pattern.size() > w.size() ||
        !std::equal(rule.pattern.tokens.begin(), rule.pattern.tokens.end(),
                    w.tokens.begin() + static_cast<std::ptrdiff_t>(pos)))
        throw std::invalid_argument("apply_rule: pattern does not match at position");
    const ScalarFraction coef = it->second;
    Word prefix(std::vector<GenToken>(w.tokens.begin(),
                                      w.tokens.begin() + static_cast<std::ptrdiff_t>(pos)));
    Word suffix(std::vector<GenToken>(
        w.tokens.begin() + static_cast<std::ptrdiff_t>(pos + rule.pattern.size()),
        w.tokens.end()));
    LinComb next = state;
    next.add_term(w, -coef);
    for (const auto& [u, d] : rule.replacement.terms()) next.add_term(prefix * u * suffix, coef * d);
    return next;
}

struct ProveBudget {
    std::size_t max_states = 200000;
    std::size_t max_depth = 16;
};

enum class ProveStatus { Proved, Inconclusive };

struct ProveStep {
    int side = 0;              // 0: reached from lhs, 1: reached from rhs
    std::size_t rule_index = 0;
    std::string rule_label;
    std::string term_word;     // canonical form of the rewritten term
    std::size_t pos = 0;
    std::string state_after;   // canonical key of the resulting state
};

struct ProveResult {
    ProveStatus status = ProveStatus::Inconclusive;
    std::vector<ProveStep> trace; // lhs steps in order, then rhs steps in order
    std::string meet_key;
    std::size_t states_explored = 0;
    std::size_t depth_reached = 0;
};

namespace detail {

// Number of generator occurrences plus one per term; rewrite search prefers
// light states, so reductions are explored first.
inline std::size_t state_weight(const LinComb& c) {
    std::size_t w = 0;
    for (const auto& [word, coef] : c.terms()) {
        (void)coef;
        w += word.size() + 1;
    }
    return w;
}

struct SearchNode {
    LinComb state;
    std::size_t depth = 0;
    long parent = -1;
    ProveStep step; // edge that produced this node
};

struct QEntry {
    std::size_t weight, depth, id;
    friend bool operator>(const QEntry& a, const QEntry& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.depth != b.depth) return a.depth > b.depth;
        return a.id > b.id;
    }
};

struct SideSearch {
    std::vector<SearchNode> nodes;
    std::unordered_map<std::string, std::size_t> index;
    std::priority_queue<QEntry, std::vector<QEntry>, std::greater<QEntry>> queue;
    std::size_t pops = 0;

    explicit SideSearch(const LinComb& start) {
        nodes.push_back({start, 0, -1, {}});
        index.emplace(start.to_string(), 0);
        queue.push({state_weight(start), 0, 0});
    }
};

} // namespace detail

// Bidirectional breadth-first search over the rewrite graph.
inline ProveResult prove_equal(const Presentation& pres, const LinComb& lhs, const LinComb& rhs,
                               const ProveBudget& budget = {}) {
    std::vector<RewriteRule> rules = derive_rules(pres);
    std::map<GenToken, std::vector<std::size_t>> rules_by_head;
    for (std::size_t ri = 0; ri < rules.size(); ++ri)
        rules_by_head[rules[ri].pattern.tokens.front()].push_back(ri);
    ProveResult result;

    detail::SideSearch sides[2] = {detail::SideSearch(lhs), detail::SideSearch(rhs)};

    std::string meet;
    {
        std::string k0 = lhs.to_string();
        if (sides[1].index.count(k0)) meet = k0;
    }

    auto build_trace = [&](const std::string& meet_key) {
        result.status = ProveStatus::Proved;
        result.meet_key = meet_key;
        for (int s = 0; s < 2; ++s) {
            std::vector<ProveStep> path;
            long at = static_cast<long>(sides[s].index.at(meet_key));
            while (at > 0) {
                path.push_back(sides[s].nodes[static_cast<std::size_t>(at)].step);
                at = sides[s].nodes[static_cast<std::size_t>(at)].parent;
            }
            for (auto it = path.rbegin(); it != path.rend(); ++it) result.trace.push_back(*it);
        }
    };
    if (!meet.empty()) {
        build_trace(meet);
        return result;
    }

    std::size_t total_states = 2;
    while (total_states < budget.max_states) {
        // Alternate between the two sides so neither starves; within a side
        // the lightest pending state is expanded first.
        int s;
        if (sides[0].queue.empty() && sides[1].queue.empty()) break;
        if (sides[0].queue.empty()) s = 1;
        else if (sides[1].queue.empty()) s = 0;
        else s = sides[0].pops <= sides[1].pops ? 0 : 1;

        std::size_t cur = sides[s].queue.top().id;
        sides[s].queue.pop();
        ++sides[s].pops;
        const std::size_t depth = sides[s].nodes[cur].depth;
        result.depth_reached = std::max(result.depth_reached, depth);
        if (depth >= budget.max_depth) continue;
        const LinComb state = sides[s].nodes[cur].state;

        for (const auto& [w, c] : state.terms()) {
            (void)c;
            for (std::size_t pos = 0; pos < w.size(); ++pos) {
                auto head = rules_by_head.find(w.tokens[pos]);
                if (head == rules_by_head.end()) continue;
                for (std::size_t ri : head->second) {
                    const RewriteRule& rule = rules[ri];
                    if (pos + rule.pattern.size() > w.size() ||
                        !std::equal(rule.pattern.tokens.begin(), rule.pattern.tokens.end(),
                                    w.tokens.begin() + static_cast<std::ptrdiff_t>(pos)))
                        continue;
                    LinComb next = apply_rule(state, w, pos, rule);
                    std::string key = next.to_string();
                    if (sides[s].index.count(key)) continue;
                    ProveStep step{s, ri, rule.label, w.to_string(), pos, key};
                    std::size_t weight = detail::state_weight(next);
                    sides[s].nodes.push_back({std::move(next), depth + 1,
                                              static_cast<long>(cur), std::move(step)});
                    sides[s].index.emplace(key, sides[s].nodes.size() - 1);
                    sides[s].queue.push({weight, depth + 1, sides[s].nodes.size() - 1});
                    ++total_states;
                    if (sides[1 - s].index.count(key)) {
                        result.states_explored = total_states;
                        build_trace(key);
                        return result;
                    }
                    if (total_states >= budget.max_states) {
                        result.states_explored = total_states;
                        return result;
                    }
                }
            }
        }
    }
    result.states_explored = total_states;
    return result;
}

// Re-derives the rules and replays a recorded proof step by step, checking
// that each application matches and that both ends reach the meet state.
inline bool replay_trace(const Presentation& pres, const LinComb& lhs, const LinComb& rhs,
                         const ProveResult& proof) {
    if (proof.status != ProveStatus::Proved) return false;
    std::vector<RewriteRule> rules = derive_rules(pres);
    LinComb cur[2] = {lhs, rhs};
    for (const auto& step : proof.trace) {
        if (step.side != 0 && step.side != 1) return false;
        if (step.rule_index >= rules.size()) return false;
        const RewriteRule& rule = rules[step.rule_index];
        if (rule.label != step.rule_label) return false;
        const Word* match = nullptr;
        for (const auto& [w, c] : cur[step.side].terms()) {
            (void)c;
            if (w.to_string() == step.term_word) {
                match = &w;
                break;
            }
        }
        if (!match) return false;
        try {
            LinComb next = apply_rule(cur[step.side], *match, step.pos, rule);
            if (next.to_string() != step.state_after) return false;
            cur[step.side] = std::move(next);
        } catch (const std::invalid_argument&) {
            return false;
        }
    }
    return cur[0].to_string() == proof.meet_key && cur[1].to_string() == proof.meet_key;
}

// Image of the D-type generators inside the specialized B-type algebra:
// X0 -> lambda Y X1 Y, e0 -> lambda Y e1 Y, everything of index >= 1 is fixed.
inline LinComb bd_image_of_token(const GenToken& t) {
    const ScalarFraction lam{poly_l()};
    switch (t.family) {
        case GenFamily::X:
            if (t.index == 0) return lam * LinComb::term(Word{tokY(), tokX(1), tokY()});
            return LinComb::term(Word{t});
        case GenFamily::Xinv:
            if (t.index == 0) return lam * LinComb::term(Word{tokY(), tokXinv(1), tokY()});
            return LinComb::term(Word{t});
        case GenFamily::E:
            if (t.index == 0) return lam * LinComb::term(Word{tokY(), tokE(1), tokY()});
            return LinComb::term(Word{t});
        default:
            throw std::invalid_argument("bd_image_of_token: unexpected generator " + t.to_string());
    }
}

inline LinComb bd_image_of_word(const Word& w) {
    LinComb acc = LinComb::unit();
    for (const auto& t : w.tokens) acc = acc * bd_image_of_token(t);
    return acc;
}

inline LinComb bd_image_of_lincomb(const LinComb& c) {
    LinComb acc;
    for (const auto& [w, coef] : c.terms()) acc += coef * bd_image_of_word(w);
    return acc;
}

struct ImageCheck {
    std::string label;
    std::string lhs;  // rendered image of the left side
    std::string rhs;
    ProveStatus status = ProveStatus::Inconclusive;
    bool unverifiable_as_printed = false;
    ProveResult proof;
};

struct ImageReport {
    std::size_t n = 0;
    std::vector<ImageCheck> relation_checks;
    std::vector<ImageCheck> bullet_checks;
    std::size_t proved = 0;
    std::size_t inconclusive = 0; // excludes unverifiable-as-printed entries
    std::size_t unverifiable = 0;

    bool all_proved() const { return inconclusive == 0; }
};

// Documented one-off identities for the morphism, stated on the D-type side.
// The lhs/rhs pair is mapped through the image and proved in the target.
struct BulletIdentity {
    std::string label;
    LinComb lhs, rhs;
    bool unverifiable_as_printed = false;
};

inline std::vector<BulletIdentity> bd_image_bullets(std::size_t n) {
    const ScalarFraction lam{poly_l()};
    const ScalarFraction lam_inv{LaurentPoly::variable(Var::l, -1)};
    const ScalarFraction delta{poly_delta()};
    const ScalarFraction xval{poly_x()};
    std::vector<BulletIdentity> out;
    auto t = [](std::initializer_list<GenToken> toks) { return LinComb::term(Word(toks)); };
    if (n >= 3)
        out.push_back({"bullet[X0X2X0=X2X0X2]", t({tokX(0), tokX(2), tokX(0)}),
                       t({tokX(2), tokX(0), tokX(2)})});
    out.push_back({"bullet[X0X1=X1X0]", t({tokX(0), tokX(1)}), t({tokX(1), tokX(0)})});
    out.push_back({"bullet[e1X0=e1]", t({tokE(1), tokX(0)}), t({tokE(1)})});
    out.push_back({"bullet[e0X1=e0]", t({tokE(0), tokX(1)}), t({tokE(0)})});
    out.push_back({"bullet[X0e0=le0]", t({tokX(0), tokE(0)}), lam * t({tokE(0)})});
    out.push_back({"bullet[X0^2=1+dX0-dle0]", t({tokX(0), tokX(0)}),
                   LinComb::unit() + delta * t({tokX(0)}) - (delta * lam) * t({tokE(0)})});
    if (n >= 3)
        out.push_back({"bullet[e0X2e0=l^-1e0]", t({tokE(0), tokX(2), tokE(0)}),
                       lam_inv * t({tokE(0)})});
    out.push_back({"bullet[e0^2=xe0]", t({tokE(0), tokE(0)}), xval * t({tokE(0)})});
    out.push_back({"bullet[1-X0^2+dX0-de0X0=0]",
                   LinComb::unit() - t({tokX(0), tokX(0)}) + delta * t({tokX(0)}) -
                       delta * t({tokE(0), tokX(0)}),
                   LinComb::zero()});
    // The printed computation for e0X1e0 is corrupted (a mangled exponent and
    // no stated target), so there is nothing well-formed to prove.
    out.push_back({"bullet[e0X1e0]", t({tokE(0), tokX(1), tokE(0)}), LinComb::zero(), true});
    out.push_back({"bullet[e0e1=e1e0]", t({tokE(0), tokE(1)}), t({tokE(1), tokE(0)})});
    if (n >= 3) {
        out.push_back({"bullet[e0X2X0=X2X0e2]", t({tokE(0), tokX(2), tokX(0)}),
                       t({tokX(2), tokX(0), tokE(2)})});
        out.push_back({"bullet[e0e2e0=e0]", t({tokE(0), tokE(2), tokE(0)}), t({tokE(0)})});
    }
    return out;
}

// Pushes every defining relation of the D-type algebra (and the documented
// bullet identities) through the image map and proves the results inside the
// specialized B-type target.
inline ImageReport verify_image_relations(std::size_t n, const ProveBudget& budget = {}) {
    ImageReport report;
    report.n = n;
    Presentation source = builtin_presentation(AlgebraKind::BD, n);
    Presentation target = builtin_presentation(AlgebraKind::BBprime, n);

    auto run = [&](const std::string& label, const LinComb& lhs, const LinComb& rhs,
                   bool unverifiable, std::vector<ImageCheck>& sink) {
        ImageCheck check;
        check.label = label;
        check.unverifiable_as_printed = unverifiable;
        if (unverifiable) {
            ++report.unverifiable;
            sink.push_back(std::move(check));
            return;
        }
        LinComb il = bd_image_of_lincomb(lhs);
        LinComb ir = bd_image_of_lincomb(rhs);
        check.lhs = il.to_string();
        check.rhs = ir.to_string();
        check.proof = prove_equal(target, il, ir, budget);
        check.status = check.proof.status;
        if (check.status == ProveStatus::Proved) ++report.proved;
        else ++report.inconclusive;
        sink.push_back(std::move(check));
    };

    for (const auto& rel : source.relations)
        run(rel.label, rel.lhs, rel.rhs, false, report.relation_checks);
    for (const auto& bullet : bd_image_bullets(n))
        run(bullet.label, bullet.lhs, bullet.rhs, bullet.unverifiable_as_printed,
            report.bullet_checks);
    return report;
}

} // namespace bmwd
