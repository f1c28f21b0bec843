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

#include "pacheck/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "pacheck/error.hpp"
#include "pacheck/hml.hpp"

namespace pacheck {

std::string_view to_string(Equivalence kind) noexcept { return kind == Equivalence::strong ? "strong" : "weak"; }

Equivalence parse_equivalence(std::string_view text) {
    if (text == "strong") return Equivalence::strong;
    if (text == "weak") return Equivalence::weak;
    throw std::invalid_argument("unknown equivalence '" + std::string(text) + "' (expected strong or weak)");
}

namespace {

/// Kanellakis-Smolka refinement that remembers how every block was split,
/// so that separated states can be told apart by a formula afterwards.
class Refinement {
public:
    explicit Refinement(const Lts& lts) : lts_(lts) {
        const auto n = lts.num_states();
        blocks_.push_back({{}, 0, std::nullopt});
        for (StateId s = 0; s < n; ++s) blocks_[0].members.push_back(s);
        current_.assign(n, 0);
        lineage_.assign(n, std::vector<std::size_t>{0});
        if (n > 0) run();
    }

    Partition partition() const {
        std::vector<std::size_t> live;
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            if (!blocks_[b].split && !blocks_[b].members.empty()) live.push_back(b);
        std::sort(live.begin(), live.end(),
                  [&](std::size_t a, std::size_t b) { return blocks_[a].members[0] < blocks_[b].members[0]; });
        Partition p;
        p.block_of.assign(lts_.num_states(), 0);
        for (std::size_t i = 0; i < live.size(); ++i) {
            p.blocks.push_back(blocks_[live[i]].members);
            for (auto s : blocks_[live[i]].members) p.block_of[s] = i;
        }
        return p;
    }

    bool separated(StateId a, StateId b) const { return current_[a] != current_[b]; }

    /// Formula with `strong` or weak modalities holding on x and not on y.
    HmlFormula distinguish(StateId x, StateId y, bool weak) {
        const auto key = std::make_pair(x, y);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // The split of the deepest common ancestor block separated x and y.
        const auto& lx = lineage_[x];
        const auto& ly = lineage_[y];
        std::size_t depth = 0;
        while (depth + 1 < lx.size() && depth + 1 < ly.size() && lx[depth + 1] == ly[depth + 1]) ++depth;
        const Split& split = *blocks_[lx[depth]].split;

        const bool x_has = in_block(x, split.positive);
        const StateId p = x_has ? x : y;
        const StateId q = x_has ? y : x;

        // p has a label-successor inside the splitter, q has none.
        StateId witness = 0;
        for (auto t : lts_.successors(p, split.label)) {
            if (in_block(t, split.splitter)) {
                witness = t;
                break;
            }
        }
        std::vector<HmlFormula> conjuncts;
        for (auto t : lts_.successors(q, split.label)) {
            HmlFormula f = distinguish(witness, t, weak);
            if (std::find(conjuncts.begin(), conjuncts.end(), f) == conjuncts.end()) conjuncts.push_back(f);
        }
        HmlFormula body = HmlFormula::truth();
        if (!conjuncts.empty()) {
            body = conjuncts.front();
            for (std::size_t i = 1; i < conjuncts.size(); ++i)
                body = HmlFormula::conjunction(std::move(body), conjuncts[i]);
        }
        const Action& a = lts_.action(split.label);
        HmlFormula psi = weak ? HmlFormula::weak_diamond(a, std::move(body)) : HmlFormula::diamond(a, std::move(body));
        HmlFormula result = x_has ? psi : HmlFormula::negation(std::move(psi));
        memo_.emplace(key, result);
        return result;
    }

private:
    struct Split {
        LabelId label;
        std::size_t splitter;
        std::size_t positive;
        std::size_t negative;
    };

    struct Block {
        std::vector<StateId> members;
        std::size_t depth;
        std::optional<Split> split;
    };

    bool in_block(StateId s, std::size_t block) const {
        const auto d = blocks_[block].depth;
        return lineage_[s].size() > d && lineage_[s][d] == block;
    }

    std::vector<std::size_t> live_blocks() const {
        std::vector<std::size_t> live;
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            if (!blocks_[b].split) live.push_back(b);
        std::sort(live.begin(), live.end(),
                  [&](std::size_t a, std::size_t b) { return blocks_[a].members[0] < blocks_[b].members[0]; });
        return live;
    }

    void run() {
        while (split_once()) {
        }
    }

    // Finds the first (block, label, splitter) triple in canonical order
    // that splits, applies it, and reports whether one was found.
    bool split_once() {
        const auto live = live_blocks();
        const auto labels = static_cast<LabelId>(lts_.alphabet().size());
        for (auto b : live) {
            const auto& members = blocks_[b].members;
            if (members.size() < 2) continue;
            for (LabelId label = 0; label < labels; ++label) {
                // Blocks reached under `label`, per member.
                std::vector<std::vector<std::size_t>> reach(members.size());
                for (std::size_t i = 0; i < members.size(); ++i) {
                    for (const auto& t : lts_.outgoing(members[i]))
                        if (t.label == label) reach[i].push_back(current_[t.target]);
                    std::sort(reach[i].begin(), reach[i].end());
                    reach[i].erase(std::unique(reach[i].begin(), reach[i].end()), reach[i].end());
                }
                if (std::all_of(reach.begin(), reach.end(), [&](const auto& r) { return r == reach[0]; })) continue;
                for (auto c : live) {
                    std::vector<StateId> yes, no;
                    for (std::size_t i = 0; i < members.size(); ++i)
                        (std::binary_search(reach[i].begin(), reach[i].end(), c) ? yes : no).push_back(members[i]);
                    if (yes.empty() || no.empty()) continue;
                    apply(b, label, c, std::move(yes), std::move(no));
                    return true;
                }
            }
        }
        return false;
    }

    void apply(std::size_t parent, LabelId label, std::size_t splitter, std::vector<StateId> yes,
               std::vector<StateId> no) {
        const auto depth = blocks_[parent].depth + 1;
        const auto pos = blocks_.size();
        const auto neg = pos + 1;
        for (auto s : yes) {
            current_[s] = pos;
            lineage_[s].push_back(pos);
        }
        for (auto s : no) {
            current_[s] = neg;
            lineage_[s].push_back(neg);
        }
        blocks_.push_back({std::move(yes), depth, std::nullopt});
        blocks_.push_back({std::move(no), depth, std::nullopt});
        blocks_[parent].split = Split{label, splitter, pos, neg};
    }

    const Lts& lts_;
    std::vector<Block> blocks_;
    std::vector<std::size_t> current_;
    std::vector<std::vector<std::size_t>> lineage_;
    std::map<std::pair<StateId, StateId>, HmlFormula> memo_;
};

}  // namespace

Partition refine_partition(const Lts& lts) { return Refinement(lts).partition(); }

HmlFormula distinguishing_formula(const Lts& lts, StateId s1, StateId s2, Equivalence kind) {
    if (s1 >= lts.num_states() || s2 >= lts.num_states()) throw std::out_of_range("state index out of range");
    const bool weak = kind == Equivalence::weak;
    const Lts saturated = weak && !lts.saturated() ? saturate_weak(lts) : Lts{};
    Refinement r(weak && !lts.saturated() ? saturated : lts);
    if (!r.separated(s1, s2))
        throw StatesEquivalent("states " + std::to_string(s1) + " and " + std::to_string(s2) + " are " +
                               std::string(to_string(kind)) + "ly bisimilar");
    return r.distinguish(s1, s2, weak);
}

EquivalenceVerdict check_equivalence(const Lts& a, const Lts& b, Equivalence kind) {
    const bool weak = kind == Equivalence::weak;
    const Lts joint = disjoint_union(a, b);
    const Lts graph = weak ? saturate_weak(joint) : joint;
    Refinement r(graph);

    const auto root_a = a.initial();
    const auto root_b = static_cast<StateId>(a.num_states() + b.initial());
    EquivalenceVerdict verdict;
    verdict.kind = kind;
    verdict.equivalent = !r.separated(root_a, root_b);
    if (verdict.equivalent) {
        verdict.witness_partition = r.partition();
        return verdict;
    }
    HmlFormula f = r.distinguish(root_a, root_b, weak);
    if (!HmlChecker(a).holds(a.initial(), f) || HmlChecker(b).holds(b.initial(), f))
        throw std::logic_error("internal error: distinguishing formula " + render_formula(f) +
                               " failed verification");
    verdict.distinguishing = std::move(f);
    return verdict;
}

Lts minimize_lts(const Lts& lts, Equivalence kind) {
    if (lts.num_states() == 0) return lts;
    const bool weak = kind == Equivalence::weak;
    const Partition p = weak ? refine_partition(saturate_weak(lts)) : refine_partition(lts);
    const auto tau = lts.label_of(Action::tau());

    // Quotient edges between blocks, numbered later in BFS order from the
    // initial block.
    std::vector<std::vector<std::pair<LabelId, std::size_t>>> edges(p.size());
    for (const auto& t : lts.transitions()) {
        const auto from = p.block_of[t.source];
        const auto to = p.block_of[t.target];
        if (weak && tau && t.label == *tau && from == to) continue;
        edges[from].push_back({t.label, to});
    }
    std::vector<long> number(p.size(), -1);
    std::deque<std::size_t> queue{p.block_of[lts.initial()]};
    number[queue.front()] = 0;
    std::vector<std::size_t> order;
    while (!queue.empty()) {
        const auto b = queue.front();
        queue.pop_front();
        order.push_back(b);
        auto& out = edges[b];
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        for (const auto& [label, to] : out) {
            if (number[to] < 0) {
                number[to] = static_cast<long>(order.size() + queue.size());
                queue.push_back(to);
            }
        }
    }

    LtsBuilder builder(order.size());
    std::vector<Term> terms;
    for (auto b : order) {
        for (const auto& [label, to] : edges[b])
            builder.add_transition(static_cast<StateId>(number[b]), lts.action(label),
                                   static_cast<StateId>(number[to]));
        if (lts.has_terms()) terms.push_back(lts.terms()[p.blocks[b].front()]);
    }
    builder.set_terms(std::move(terms));
    return std::move(builder).build();
}

bool naive_equivalence_oracle(const Lts& a, const Lts& b, Equivalence kind) {
    const std::size_t n = a.num_states() + b.num_states();
    if (n > naive_oracle_limit)
        throw SizeLimitExceeded("naive oracle limited to " + std::to_string(naive_oracle_limit) +
                                " combined states, got " + std::to_string(n));

    // Edges of both systems keyed by action name, over a common numbering.
    std::vector<std::string> names;
    auto name_id = [&](std::string_view name) {
        auto it = std::find(names.begin(), names.end(), name);
        if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
        names.emplace_back(name);
        return names.size() - 1;
    };
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> succ(n);
    for (const auto& t : a.transitions())
        succ[t.source].push_back({name_id(a.action(t.label).name()), t.target});
    for (const auto& t : b.transitions())
        succ[a.num_states() + t.source].push_back(
            {name_id(b.action(t.label).name()), a.num_states() + t.target});
    const std::size_t tau = name_id("tau");
    const std::size_t labels = names.size();

    // Moves that must be matched (strong steps) and moves available to the
    // matching side (strong steps, or weak steps for the weak relation),
    // as dense reachability matrices per label.
    std::vector<std::vector<std::vector<char>>> matchable(labels, std::vector<std::vector<char>>(n, std::vector<char>(n, 0)));
    if (kind == Equivalence::strong) {
        for (std::size_t s = 0; s < n; ++s)
            for (const auto& [l, t] : succ[s]) matchable[l][s][t] = 1;
    } else {
        // Reflexive-transitive tau closure by Warshall's algorithm.
        std::vector<std::vector<char>> star(n, std::vector<char>(n, 0));
        for (std::size_t s = 0; s < n; ++s) {
            star[s][s] = 1;
            for (const auto& [l, t] : succ[s])
                if (l == tau) star[s][t] = 1;
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (star[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (star[k][j]) star[i][j] = 1;
        matchable[tau] = star;
        for (std::size_t l = 0; l < labels; ++l) {
            if (l == tau) continue;
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t u = 0; u < n; ++u) {
                    if (!star[s][u]) continue;
                    for (const auto& [lu, v] : succ[u]) {
                        if (lu != l) continue;
                        for (std::size_t w = 0; w < n; ++w)
                            if (star[v][w]) matchable[l][s][w] = 1;
                    }
                }
        }
    }

    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 1));
    // Every strong step of p must be answered by a matchable step of q.
    auto simulated = [&](std::size_t p, std::size_t q) {
        for (const auto& [l, p2] : succ[p]) {
            bool answered = false;
            for (std::size_t q2 = 0; q2 < n && !answered; ++q2)
                answered = matchable[l][q][q2] && rel[p2][q2];
            if (!answered) return false;
        }
        return true;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                if (!rel[p][q]) continue;
                if (!simulated(p, q) || !simulated(q, p)) {
                    rel[p][q] = 0;
                    rel[q][p] = 0;
                    changed = true;
                }
            }
    }
    return rel[a.initial()][a.num_states() + b.initial()];
}

}  // namespace pacheck
