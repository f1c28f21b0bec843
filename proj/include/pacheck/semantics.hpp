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
#include <vector>

#include "pacheck/environment.hpp"
#include "pacheck/lts.hpp"
#include "pacheck/term.hpp"

namespace pacheck {

inline constexpr std::size_t default_max_states = 100000;
/// Largest state term (in nodes) exploration accepts.
inline constexpr std::size_t max_state_term_size = std::size_t(1) << 16;

struct Step {
    Action action;
    Term target;
};

/// Unfolds constants standing in static position (at the top of the term or
/// under parallel and hiding) whose definition is itself a parallel, hiding
/// or constant term. Prefix and choice bodies stay folded. Terms are
/// compared for state identity only after this normalization, so a system
/// definition such as `Sys = P ||[a] Q` and its unfolding are the same state.
Term normalize_state(const Term& term, const Environment& env);

/// One-step derivatives of `term`, normalized, sorted by (action name,
/// rendered target) and duplicate-free.
///
/// Parallel synchronization is multiway: a synchronized observable action
/// stays observable and may synchronize again further out. tau never
/// synchronizes. Throws UnboundConstant when a constant has no definition and
/// TermSizeExceeded when a derivative exceeds max_state_term_size nodes.
std::vector<Step> step_transitions(const Term& term, const Environment& env);

/// Breadth-first state space of the environment's root. States are numbered
/// in discovery order, derivatives visited in step_transitions order.
/// Throws StateBoundExceeded when more than `max_states` states are found.
Lts build_lts(const Environment& env, std::size_t max_states = default_max_states);

/// Same, starting from an arbitrary term interpreted in `env`.
Lts build_lts_from(const Term& initial, const Environment& env,
                   std::size_t max_states = default_max_states);

}  // namespace pacheck
