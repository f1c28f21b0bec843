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

#include "generators.hpp"
#include "oracles.hpp"
#include "pacheck/casestudies.hpp"
#include "pacheck/equivalence.hpp"
#include "pacheck/io.hpp"

using namespace pacheck;
namespace pt = pacheck::testing;

namespace {

Lts model_lts(const std::string& name) { return build_subject_lts(Corpus::embedded().model(name)); }

ParseError aut_error(const std::string& text) {
    try {
        read_aut(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for: " << text);
    return ParseError({});
}

}  // namespace

TEST_CASE("aut export of the counter process") {
    CHECK(write_aut(model_lts("pc_spec")) ==
          "des (0, 4, 3)\n"
          "(0, \"deposit\", 1)\n"
          "(1, \"deposit\", 2)\n"
          "(1, \"withdraw\", 0)\n"
          "(2, \"withdraw\", 1)\n");
}

TEST_CASE("tau is written as i") {
    const auto text = write_aut(model_lts("pc_pipe"));
    CHECK(text.rfind("des (0, 5, 4)\n", 0) == 0);
    CHECK(text.find("\"i\"") != std::string::npos);
    CHECK(text.find("tau") == std::string::npos);
}

TEST_CASE("aut import") {
    const Lts lts = read_aut("des (0, 3, 3)\n(0, \"a\", 1)\n(1, i, 2)\n  \n(2, \"tau\", 0)\r\n");
    CHECK(lts.num_states() == 3);
    CHECK(lts.transitions().size() == 3);
    const auto tau = lts.label_of(Action::tau());
    REQUIRE(tau.has_value());
    CHECK(lts.successors(1, *tau) == std::vector<StateId>{2});
    CHECK(lts.successors(2, *tau) == std::vector<StateId>{0});
}

TEST_CASE("aut import renumbers a non-zero initial state") {
    const Lts lts = read_aut("des (2, 2, 3)\n(2, \"a\", 1)\n(1, \"b\", 0)\n");
    const auto a = *lts.label_of(Action::observable("a"));
    const auto b = *lts.label_of(Action::observable("b"));
    CHECK(lts.successors(0, a) == std::vector<StateId>{1});
    CHECK(lts.successors(1, b) == std::vector<StateId>{2});
}

TEST_CASE("aut import errors") {
    CHECK(aut_error("").diagnostic().line == 1);
    CHECK(aut_error("dse (0, 0, 1)\n").diagnostic().column == 1);
    auto e = aut_error("des (0, 2, 2)\n(0, \"a\", 1)\n");
    CHECK(std::string(e.what()).find("declares 2 transitions") != std::string::npos);
    e = aut_error("des (0, 1, 2)\n(0, \"a\", 5)\n");
    CHECK(e.diagnostic().line == 2);
    e = aut_error("des (3, 0, 2)\n");
    CHECK(e.diagnostic().line == 1);
    e = aut_error("des (0, 0, 0)\n");
    CHECK(std::string(e.what()).find("at least one state") != std::string::npos);
    e = aut_error("des (0, 1, 2)\n(0, \"a b\", 1)\n");
    CHECK(e.diagnostic().line == 2);
    e = aut_error("des (0, 1, 2)\n(0, \"a\", 1) junk\n");
    CHECK(e.diagnostic().line == 2);
    e = aut_error("des (0, 1, 2)\n(0, \"a, 1)\n");
    CHECK(e.diagnostic().line == 2);
}

TEST_CASE("aut round trip is an isomorphism") {
    const Corpus corpus = Corpus::embedded();
    for (const auto& [file, text] : corpus.files()) {
        if (file == "manifest.json") continue;
        const std::string name = file.substr(0, file.size() - 3);
        INFO(name);
        const Lts lts = model_lts(name);
        const Lts back = read_aut(write_aut(lts));
        CHECK(back.num_states() == lts.num_states());
        CHECK(write_aut(back) == write_aut(lts));
        CHECK(check_equivalence(lts, back, Equivalence::strong).equivalent);
        if (lts.num_states() <= 20) CHECK(pt::isomorphic(lts, back));
    }
}

TEST_CASE("aut round trip on random systems") {
    pt::Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        const Lts lts = pt::random_lts(rng, {15, 4, 0.3, 3});
        const Lts back = read_aut(write_aut(lts));
        CHECK(write_aut(back) == write_aut(lts));
        CHECK(pt::isomorphic(lts, back));
    }
}

TEST_CASE("dot export") {
    const Lts spec = model_lts("pc_spec");
    const auto plain = write_dot(spec);
    CHECK(plain.rfind("digraph lts {", 0) == 0);
    CHECK(plain.find("0 -> 1 [label=\"deposit\"]") != std::string::npos);
    CHECK(plain.find("init -> 0") != std::string::npos);
    CHECK(plain.find("tooltip=\"ProdCons_1_2\"") != std::string::npos);

    const Lts both = disjoint_union(model_lts("pc_conc"), spec);
    const auto verdict = check_equivalence(model_lts("pc_conc"), spec, Equivalence::strong);
    REQUIRE(verdict.witness_partition.has_value());
    const auto colored = write_dot(both, &*verdict.witness_partition);
    // States of one block share a fill color; blocks differ.
    auto color_of = [&](StateId s) {
        const auto key = "  " + std::to_string(s) + " [label=";
        const auto at = colored.find(key);
        REQUIRE(at != std::string::npos);
        const auto fill = colored.find("fillcolor=\"", at);
        return colored.substr(fill + 11, 7);
    };
    const auto& p = *verdict.witness_partition;
    for (StateId s = 0; s < both.num_states(); ++s)
        for (StateId t = 0; t < both.num_states(); ++t) CHECK((color_of(s) == color_of(t)) == p.same_block(s, t));
}
