/*
 * Copyright 2026 The pacheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "pacheck/casestudies.hpp"
#include "pacheck/equivalence.hpp"
#include "pacheck/error.hpp"
#include "pacheck/hml.hpp"
#include "pacheck/parser.hpp"
#include "pacheck/semantics.hpp"

using namespace pacheck;
using pacheck::testing::Rng;
namespace pt = pacheck::testing;

namespace {

Lts model_lts(const std::string& name) { return build_subject_lts(Corpus::embedded().model(name)); }

Lts make(std::size_t n, std::vector<std::tuple<StateId, std::string, StateId>> ts) {
    LtsBuilder b(n);
    for (const auto& [s, a, t] : ts) b.add_transition(s, Action::parse(a), t);
    return std::move(b).build();
}

// Signature of a state: (action, block) pairs it can reach in one step.
std::set<std::pair<LabelId, std::size_t>> signature(const Lts& lts, const Partition& p, StateId s) {
    std::set<std::pair<LabelId, std::size_t>> sig;
    for (const auto& t : lts.outgoing(s)) sig.emplace(t.label, p.block_of[t.target]);
    return sig;
}

void check_partition_well_formed(const Partition& p, std::size_t n) {
    REQUIRE(p.block_of.size() == n);
    std::vector<int> seen(n, 0);
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        REQUIRE_FALSE(p.blocks[b].empty());
        for (auto s : p.blocks[b]) {
            ++seen[s];
            CHECK(p.block_of[s] == b);
        }
    }
    for (auto c : seen) CHECK(c == 1);
}

void check_stable(const Lts& lts, const Partition& p) {
    for (const auto& block : p.blocks)
        for (auto s : block) CHECK(signature(lts, p, s) == signature(lts, p, block.front()));
}

const std::vector<std::string> corpus_models = {"pc_spec",         "pc_conc",        "pc_pipe",
                                                "offline_chain1",  "chain1_attribution", "offline_chain2",
                                                "wallet_spec",     "wallet_impl",    "wallet_mutated",
                                                "double_spend",    "torn_transaction", "torn_spec",
                                                "torn_no_recovery"};

}  // namespace

TEST_CASE("kind names") {
    CHECK(to_string(Equivalence::strong) == "strong");
    CHECK(parse_equivalence("weak") == Equivalence::weak);
    CHECK_THROWS_AS(parse_equivalence("branching"), std::invalid_argument);
}

TEST_CASE("refinement examples") {
    const Lts spec = model_lts("pc_spec");
    const Partition p = refine_partition(spec);
    CHECK(p.size() == 3);
    check_partition_well_formed(p, 3);

    const Lts inert(5, {}, {});
    CHECK(refine_partition(inert).size() == 1);

    const Lts empty_alphabet(1, {}, {});
    CHECK(refine_partition(empty_alphabet).blocks == std::vector<std::vector<StateId>>{{0}});
}

TEST_CASE("the union of counter and concurrent implementation has three classes") {
    const Lts spec = model_lts("pc_spec");
    const Lts conc = model_lts("pc_conc");
    const Lts both = disjoint_union(spec, conc);
    const Partition p = refine_partition(both);
    REQUIRE(p.size() == 3);
    // Fill level of each concurrent state, read off its term.
    auto level = [&](StateId s) {
        const Term buffers = conc.terms()[s].left().right();
        return int(buffers.left().kind() == TermKind::prefix) + int(buffers.right().kind() == TermKind::prefix);
    };
    for (StateId s = 0; s < conc.num_states(); ++s) CHECK(p.same_block(static_cast<StateId>(3 + s), level(s)));
}

TEST_CASE("check_equivalence examples") {
    const Lts spec = model_lts("pc_spec");
    const Lts conc = model_lts("pc_conc");
    const Lts pipe = model_lts("pc_pipe");

    auto v = check_equivalence(conc, spec, Equivalence::strong);
    CHECK(v.equivalent);
    CHECK(v.witness_partition.has_value());
    CHECK_FALSE(v.distinguishing.has_value());

    v = check_equivalence(pipe, spec, Equivalence::weak);
    CHECK(v.equivalent);
    CHECK(v.kind == Equivalence::weak);

    v = check_equivalence(pipe, spec, Equivalence::strong);
    CHECK_FALSE(v.equivalent);
    REQUIRE(v.distinguishing.has_value());
    CHECK_FALSE(v.witness_partition.has_value());
    CHECK(evaluate_formula(pipe, 0, *v.distinguishing).holds);
    CHECK_FALSE(evaluate_formula(spec, 0, *v.distinguishing).holds);

    // The reverse direction yields a formula for the counter root.
    v = check_equivalence(spec, pipe, Equivalence::strong);
    REQUIRE(v.distinguishing.has_value());
    CHECK(evaluate_formula(spec, 0, *v.distinguishing).holds);
    CHECK_FALSE(evaluate_formula(pipe, 0, *v.distinguishing).holds);
}

TEST_CASE("weak verdicts use weak modalities only") {
    const Lts a = make(2, {{0, "tau", 1}, {1, "a", 1}});
    const Lts b = make(2, {{0, "b", 1}});
    const auto v = check_equivalence(a, b, Equivalence::weak);
    REQUIRE(v.distinguishing.has_value());
    std::function<bool(const HmlFormula&)> weak_only = [&](const HmlFormula& f) -> bool {
        switch (f.kind()) {
        case FormulaKind::truth:
        case FormulaKind::falsity: return true;
        case FormulaKind::diamond:
        case FormulaKind::box: return false;
        case FormulaKind::conjunction:
        case FormulaKind::disjunction: return weak_only(f.left()) && weak_only(f.right());
        default: return weak_only(f.left());
        }
    };
    CHECK(weak_only(*v.distinguishing));
}

TEST_CASE("distinguishing formula examples on the counter") {
    const Lts spec = model_lts("pc_spec");
    CHECK(render_formula(distinguishing_formula(spec, 0, 2, Equivalence::strong)) == "<deposit> tt");

    const auto f01 = distinguishing_formula(spec, 0, 1, Equivalence::strong);
    // Both have deposit; the split happens one deposit deeper, where 2 is stuck.
    CHECK(render_formula(f01) == "<deposit> <deposit> tt");
    CHECK(evaluate_formula(spec, 0, f01).holds);
    CHECK_FALSE(evaluate_formula(spec, 1, f01).holds);

    const auto f10 = distinguishing_formula(spec, 1, 0, Equivalence::strong);
    CHECK(render_formula(f10) == "not <deposit> <deposit> tt");
    CHECK(evaluate_formula(spec, 1, f10).holds);
    CHECK_FALSE(evaluate_formula(spec, 0, f10).holds);

    const Lts twins = make(3, {{0, "a", 1}, {0, "a", 2}});
    CHECK_THROWS_AS(distinguishing_formula(twins, 1, 2, Equivalence::strong), StatesEquivalent);
    CHECK_THROWS_AS(distinguishing_formula(spec, 1, 1, Equivalence::weak), StatesEquivalent);
}

TEST_CASE("distinguishing formulas are reproducible") {
    const Lts spec = model_lts("pc_spec");
    const Lts pipe = model_lts("pc_pipe");
    const auto a = render_formula(*check_equivalence(pipe, spec, Equivalence::strong).distinguishing);
    const auto b = render_formula(*check_equivalence(pipe, spec, Equivalence::strong).distinguishing);
    CHECK(a == b);
}

TEST_CASE("minimization examples") {
    const Lts spec = model_lts("pc_spec");
    const Lts conc = model_lts("pc_conc");
    const Lts pipe = model_lts("pc_pipe");

    const Lts mc = minimize_lts(conc, Equivalence::strong);
    CHECK(mc.num_states() == 3);
    CHECK(mc.transitions().size() == 4);
    CHECK(pt::isomorphic(mc, spec));
    CHECK(pt::isomorphic(minimize_lts(spec, Equivalence::strong), spec));

    const Lts mp = minimize_lts(pipe, Equivalence::weak);
    CHECK(mp.num_states() == 3);
    for (const auto& a : mp.alphabet()) CHECK_FALSE(a.is_tau());
    CHECK(pt::isomorphic(mp, spec));
}

TEST_CASE("naive oracle examples") {
    const Lts spec = model_lts("pc_spec");
    const Lts conc = model_lts("pc_conc");
    const Lts pipe = model_lts("pc_pipe");
    CHECK(naive_equivalence_oracle(conc, spec, Equivalence::strong));
    CHECK_FALSE(naive_equivalence_oracle(pipe, spec, Equivalence::strong));
    CHECK(naive_equivalence_oracle(pipe, spec, Equivalence::weak));
    for (const auto k : {Equivalence::strong, Equivalence::weak}) {
        CHECK(naive_equivalence_oracle(spec, spec, k));
        CHECK(naive_equivalence_oracle(pipe, pipe, k));
    }
    const Lts big(600, {}, {});
    CHECK_THROWS_AS(naive_equivalence_oracle(big, big, Equivalence::strong), SizeLimitExceeded);
}

TEST_CASE("corpus pairs: engine, library oracle and reference agree") {
    std::map<std::string, Lts> lts;
    for (const auto& name : corpus_models) lts.emplace(name, model_lts(name));
    for (const auto& [na, a] : lts)
        for (const auto& [nb, b] : lts) {
            if (a.num_states() + b.num_states() > naive_oracle_limit) continue;
            for (const auto k : {Equivalence::strong, Equivalence::weak}) {
                INFO(na << " vs " << nb << " " << to_string(k));
                const bool v = check_equivalence(a, b, k).equivalent;
                CHECK(v == naive_equivalence_oracle(a, b, k));
                CHECK(v == pt::reference_bisimilar(a, b, k == Equivalence::weak));
            }
        }
}

TEST_CASE("random pairs: agreement, witness soundness and formula soundness") {
    Rng rng(99);
    int equivalent = 0, inequivalent = 0;
    for (int i = 0; i < 300; ++i) {
        const auto [a, b] = pt::random_pair(rng, {20, 3, 0.25, 3});
        for (const auto k : {Equivalence::strong, Equivalence::weak}) {
            const auto v = check_equivalence(a, b, k);
            const bool weak = k == Equivalence::weak;
            CHECK(v.equivalent == pt::reference_bisimilar(a, b, weak));
            CHECK(v.equivalent == naive_equivalence_oracle(a, b, k));
            CHECK(v.equivalent != v.distinguishing.has_value());
            CHECK(v.equivalent == v.witness_partition.has_value());
            if (v.equivalent) {
                ++equivalent;
                const Lts u = disjoint_union(a, b);
                const Lts graph = weak ? saturate_weak(u) : u;
                check_partition_well_formed(*v.witness_partition, u.num_states());
                CHECK(v.witness_partition->same_block(0, static_cast<StateId>(a.num_states())));
                check_stable(graph, *v.witness_partition);
            } else {
                ++inequivalent;
                const pt::ReferenceHml ra(a), rb(b);
                CHECK(ra.holds(0, *v.distinguishing));
                CHECK_FALSE(rb.holds(0, *v.distinguishing));
            }
        }
    }
    CHECK(equivalent > 100);
    CHECK(inequivalent > 100);
}

TEST_CASE("refined partitions are the coarsest stable ones") {
    Rng rng(4);
    for (int i = 0; i < 150; ++i) {
        const Lts lts = pt::random_lts(rng, {25, 3, 0.2, 3});
        const Partition p = refine_partition(lts);
        check_partition_well_formed(p, lts.num_states());
        check_stable(lts, p);
        const auto reference = pt::signature_classes(pt::adjacency(lts));
        for (StateId s = 0; s < lts.num_states(); ++s)
            for (StateId t = 0; t < lts.num_states(); ++t)
                CHECK(p.same_block(s, t) == (reference[s] == reference[t]));
        // Blocks ordered by smallest member, members ascending.
        for (std::size_t b = 0; b < p.blocks.size(); ++b) {
            CHECK(std::is_sorted(p.blocks[b].begin(), p.blocks[b].end()));
            if (b > 0) CHECK(p.blocks[b - 1].front() < p.blocks[b].front());
        }
    }
}

TEST_CASE("distinguishing formulas for all inequivalent state pairs") {
    Rng rng(12);
    for (int i = 0; i < 40; ++i) {
        const Lts lts = pt::random_lts(rng, {10, 2, 0.3, 2});
        for (const auto k : {Equivalence::strong, Equivalence::weak}) {
            const bool weak = k == Equivalence::weak;
            const pt::ReferenceHml ref(lts);
            for (StateId s = 0; s < lts.num_states(); ++s)
                for (StateId t = 0; t < lts.num_states(); ++t) {
                    if (pt::reference_bisimilar_states(lts, s, t, weak)) {
                        CHECK_THROWS_AS(distinguishing_formula(lts, s, t, k), StatesEquivalent);
                        continue;
                    }
                    const auto f = distinguishing_formula(lts, s, t, k);
                    CHECK(ref.holds(s, f));
                    CHECK_FALSE(ref.holds(t, f));
                }
        }
    }
}

TEST_CASE("strong equivalence implies weak equivalence") {
    Rng rng(8);
    int strong = 0;
    for (int i = 0; i < 300; ++i) {
        const auto [a, b] = pt::random_pair(rng, {16, 3, 0.3, 3});
        if (!check_equivalence(a, b, Equivalence::strong).equivalent) continue;
        ++strong;
        CHECK(check_equivalence(a, b, Equivalence::weak).equivalent);
    }
    CHECK(strong > 30);
}

TEST_CASE("verdict-level equivalence laws") {
    Rng rng(21);
    for (int i = 0; i < 80; ++i) {
        // Triples with a decent chance of being related.
        const Lts a = pt::random_lts(rng, {8, 2, 0.3, 2});
        const Lts b = i % 2 ? pt::duplicate_states(rng, a) : pt::insert_taus(rng, a);
        const Lts c = i % 3 ? pt::duplicate_states(rng, b) : pt::mutate(rng, b, 2);
        for (const auto k : {Equivalence::strong, Equivalence::weak}) {
            CHECK(check_equivalence(a, a, k).equivalent);
            const bool ab = check_equivalence(a, b, k).equivalent;
            const bool bc = check_equivalence(b, c, k).equivalent;
            const bool ac = check_equivalence(a, c, k).equivalent;
            CHECK(ab == check_equivalence(b, a, k).equivalent);
            if (ab && bc) CHECK(ac);
            if (ab && ac) CHECK(bc);
        }
    }
}

TEST_CASE("quotients are equivalent and minimal") {
    Rng rng(17);
    std::vector<Lts> inputs;
    for (const auto& name : corpus_models) inputs.push_back(model_lts(name));
    for (int i = 0; i < 100; ++i) inputs.push_back(pt::random_lts(rng, {25, 3, 0.3, 3}));
    for (const auto& lts : inputs) {
        for (const auto k : {Equivalence::strong, Equivalence::weak}) {
            const Lts q = minimize_lts(lts, k);
            CHECK(q.num_states() <= lts.num_states());
            CHECK(check_equivalence(q, lts, k).equivalent);
            const Lts graph = k == Equivalence::weak ? saturate_weak(q) : q;
            CHECK(refine_partition(graph).size() == q.num_states());
            if (k == Equivalence::weak)
                for (const auto& t : q.transitions())
                    if (q.action(t.label).is_tau()) CHECK(t.source != t.target);
        }
    }
}

TEST_CASE("duplicated and tau-padded copies") {
    Rng rng(55);
    for (int i = 0; i < 100; ++i) {
        const Lts a = pt::random_lts(rng, {15, 3, 0.3, 3});
        CHECK(check_equivalence(a, pt::duplicate_states(rng, a), Equivalence::strong).equivalent);
        CHECK(check_equivalence(a, pt::insert_taus(rng, a), Equivalence::weak).equivalent);
    }
}
