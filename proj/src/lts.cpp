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

#include "pacheck/lts.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace pacheck {

Lts::Lts(std::size_t num_states, std::vector<Action> alphabet, std::vector<Transition> transitions,
         std::vector<Term> terms, bool saturated)
    : num_states_(num_states), terms_(std::move(terms)), saturated_(saturated) {
    if (!terms_.empty() && terms_.size() != num_states_)
        throw std::invalid_argument("Lts: term count does not match state count");

    // Sort the alphabet and remap labels accordingly.
    std::vector<LabelId> order(alphabet.size());
    for (LabelId i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](LabelId a, LabelId b) { return alphabet[a] < alphabet[b]; });
    std::vector<LabelId> remap(alphabet.size());
    for (LabelId i = 0; i < order.size(); ++i) {
        remap[order[i]] = i;
        alphabet_.push_back(alphabet[order[i]]);
    }
    for (std::size_t i = 1; i < alphabet_.size(); ++i)
        if (alphabet_[i] == alphabet_[i - 1]) throw std::invalid_argument("Lts: duplicate action in alphabet");

    transitions_.reserve(transitions.size());
    for (const auto& t : transitions) {
        if (t.source >= num_states_ || t.target >= num_states_)
            throw std::invalid_argument("Lts: transition endpoint out of range");
        if (t.label >= alphabet.size()) throw std::invalid_argument("Lts: transition label out of range");
        transitions_.push_back({t.source, remap[t.label], t.target});
    }
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

    offsets_.assign(num_states_ + 1, 0);
    for (const auto& t : transitions_) ++offsets_[t.source + 1];
    for (std::size_t i = 0; i < num_states_; ++i) offsets_[i + 1] += offsets_[i];
}

std::optional<LabelId> Lts::label_of(const Action& action) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), action);
    if (it == alphabet_.end() || !(*it == action)) return std::nullopt;
    return static_cast<LabelId>(it - alphabet_.begin());
}

std::span<const Transition> Lts::outgoing(StateId state) const {
    if (state >= num_states_) throw std::out_of_range("state index out of range");
    return {transitions_.data() + offsets_[state], transitions_.data() + offsets_[state + 1]};
}

std::vector<StateId> Lts::successors(StateId state, LabelId label) const {
    std::vector<StateId> out;
    for (const auto& t : outgoing(state))
        if (t.label == label) out.push_back(t.target);
    return out;
}

std::string Lts::describe_state(StateId state) const {
    if (state < terms_.size()) return render_term(terms_[state]);
    return "s" + std::to_string(state);
}

StateId LtsBuilder::add_state() { return static_cast<StateId>(num_states_++); }

void LtsBuilder::ensure_states(std::size_t count) { num_states_ = std::max(num_states_, count); }

void LtsBuilder::add_transition(StateId source, const Action& action, StateId target) {
    auto it = std::find(actions_.begin(), actions_.end(), action);
    const auto label = static_cast<LabelId>(it - actions_.begin());
    if (it == actions_.end()) actions_.push_back(action);
    transitions_.push_back({source, label, target});
}

Lts LtsBuilder::build(bool saturated) && {
    return Lts(num_states_, std::move(actions_), std::move(transitions_), std::move(terms_), saturated);
}

std::vector<Action> reachable_action_set(const Lts& lts, StateId state) {
    if (state >= lts.num_states()) throw std::out_of_range("state index out of range");
    std::vector<char> seen(lts.num_states(), 0);
    std::vector<char> used(lts.alphabet().size(), 0);
    std::vector<StateId> stack{state};
    seen[state] = 1;
    while (!stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        for (const auto& t : lts.outgoing(s)) {
            used[t.label] = 1;
            if (!seen[t.target]) {
                seen[t.target] = 1;
                stack.push_back(t.target);
            }
        }
    }
    std::vector<Action> out;
    for (LabelId l = 0; l < used.size(); ++l)
        if (used[l]) out.push_back(lts.action(l));
    return out;
}

std::vector<StateId> tau_closure(const Lts& lts, StateId state) {
    const auto tau = lts.label_of(Action::tau());
    std::vector<char> seen(lts.num_states(), 0);
    std::vector<StateId> stack{state};
    seen[state] = 1;
    while (tau && !stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        for (const auto& t : lts.outgoing(s)) {
            if (t.label == *tau && !seen[t.target]) {
                seen[t.target] = 1;
                stack.push_back(t.target);
            }
        }
    }
    std::vector<StateId> out;
    for (StateId s = 0; s < seen.size(); ++s)
        if (seen[s]) out.push_back(s);
    return out;
}

Lts saturate_weak(const Lts& lts) {
    const std::size_t n = lts.num_states();
    const auto tau = lts.label_of(Action::tau());

    std::vector<std::vector<StateId>> closure(n);
    for (StateId s = 0; s < n; ++s) closure[s] = tau_closure(lts, s);

    // Output alphabet: every original action plus tau.
    std::vector<Action> alphabet = lts.alphabet();
    if (!tau) alphabet.push_back(Action::tau());
    const LabelId out_tau = tau ? *tau : static_cast<LabelId>(alphabet.size() - 1);

    std::vector<Transition> out;
    for (StateId s = 0; s < n; ++s) {
        for (auto t : closure[s]) out.push_back({s, out_tau, t});
        // s tau* u -a-> v tau* w
        std::vector<std::vector<char>> reached(alphabet.size());
        for (auto u : closure[s]) {
            for (const auto& tr : lts.outgoing(u)) {
                if (tau && tr.label == *tau) continue;
                auto& mark = reached[tr.label];
                if (mark.empty()) mark.assign(n, 0);
                for (auto w : closure[tr.target]) {
                    if (!mark[w]) {
                        mark[w] = 1;
                        out.push_back({s, tr.label, w});
                    }
                }
            }
        }
    }
    return Lts(n, std::move(alphabet), std::move(out), lts.terms(), true);
}

bool has_cycle(const Lts& lts) {
    const std::size_t n = lts.num_states();
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<char> color(n, 0);
    for (StateId root = 0; root < n; ++root) {
        if (color[root]) continue;
        std::vector<std::pair<StateId, std::size_t>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [s, i] = stack.back();
            const auto out = lts.outgoing(s);
            if (i == out.size()) {
                color[s] = 2;
                stack.pop_back();
                continue;
            }
            const auto t = out[i++].target;
            if (color[t] == 1) return true;
            if (color[t] == 0) {
                color[t] = 1;
                stack.push_back({t, 0});
            }
        }
    }
    return false;
}

Lts disjoint_union(const Lts& a, const Lts& b) {
    LtsBuilder builder(a.num_states() + b.num_states());
    const auto shift = static_cast<StateId>(a.num_states());
    for (const auto& t : a.transitions()) builder.add_transition(t.source, a.action(t.label), t.target);
    for (const auto& t : b.transitions())
        builder.add_transition(t.source + shift, b.action(t.label), t.target + shift);
    return std::move(builder).build(a.saturated() && b.saturated());
}

}  // namespace pacheck
