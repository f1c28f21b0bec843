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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pacheck/term.hpp"

namespace pacheck {

using StateId = std::uint32_t;
using LabelId = std::uint32_t;

struct Transition {
    StateId source;
    LabelId label;
    StateId target;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Finite labeled transition system with initial state 0.
///
/// Labels are indices into the alphabet, which is kept sorted by rendered
/// action name. Transitions are sorted by (source, label, target) and
/// duplicate-free. States generated from process terms keep their term.
class Lts {
public:
    Lts() = default;

    /// Normalizes the alphabet order and the transition list. Throws
    /// std::invalid_argument on an out-of-range endpoint or label.
    Lts(std::size_t num_states, std::vector<Action> alphabet, std::vector<Transition> transitions,
        std::vector<Term> terms = {}, bool saturated = false);

    std::size_t num_states() const noexcept { return num_states_; }
    StateId initial() const noexcept { return 0; }
    const std::vector<Action>& alphabet() const noexcept { return alphabet_; }
    const std::vector<Transition>& transitions() const noexcept { return transitions_; }
    /// Empty unless the LTS was generated from terms.
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool has_terms() const noexcept { return !terms_.empty(); }
    /// True for the output of saturate_weak.
    bool saturated() const noexcept { return saturated_; }

    std::optional<LabelId> label_of(const Action& action) const;
    const Action& action(LabelId label) const { return alphabet_.at(label); }

    /// Outgoing transitions of `state`, sorted by (label, target).
    std::span<const Transition> outgoing(StateId state) const;
    /// Targets of `state` under `label`, ascending.
    std::vector<StateId> successors(StateId state, LabelId label) const;

    /// Rendered term of a state, or "s<N>" without terms.
    std::string describe_state(StateId state) const;

private:
    std::size_t num_states_ = 0;
    std::vector<Action> alphabet_;
    std::vector<Transition> transitions_;
    std::vector<std::size_t> offsets_;
    std::vector<Term> terms_;
    bool saturated_ = false;
};

/// Accumulates transitions by action and produces a normalized Lts.
class LtsBuilder {
public:
    explicit LtsBuilder(std::size_t num_states = 0) : num_states_(num_states) {}

    StateId add_state();
    void ensure_states(std::size_t count);
    void add_transition(StateId source, const Action& action, StateId target);
    void set_terms(std::vector<Term> terms) { terms_ = std::move(terms); }

    Lts build(bool saturated = false) &&;

private:
    std::size_t num_states_;
    std::vector<Action> actions_;
    std::vector<Transition> transitions_;
    std::vector<Term> terms_;
};

/// Labels of every transition reachable from `state` (inclusive).
/// Throws std::out_of_range on a bad index.
std::vector<Action> reachable_action_set(const Lts& lts, StateId state);

/// Weak transition system over the same states: s =a=> t iff s tau* a tau* t
/// for observable a, and s =tau=> t iff s tau* t (so every state carries a
/// tau self-loop).
Lts saturate_weak(const Lts& lts);

/// States reachable from `state` through zero or more tau steps, ascending.
std::vector<StateId> tau_closure(const Lts& lts, StateId state);

/// True iff some state can reach itself through a nonempty path.
bool has_cycle(const Lts& lts);

/// Union with b's states shifted by a.num_states(). Terms are dropped.
Lts disjoint_union(const Lts& a, const Lts& b);

}  // namespace pacheck
