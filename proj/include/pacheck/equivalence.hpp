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

#include <optional>
#include <string_view>
#include <vector>

#include "pacheck/formula.hpp"
#include "pacheck/lts.hpp"

namespace pacheck {

enum class Equivalence { strong, weak };

std::string_view to_string(Equivalence kind) noexcept;
/// "strong" or "weak"; throws std::invalid_argument otherwise.
Equivalence parse_equivalence(std::string_view text);

/// Disjoint blocks covering all states. Blocks are sorted internally and
/// ordered by their smallest member.
struct Partition {
    std::vector<std::vector<StateId>> blocks;
    std::vector<std::size_t> block_of;

    std::size_t size() const noexcept { return blocks.size(); }
    bool same_block(StateId a, StateId b) const { return block_of.at(a) == block_of.at(b); }
};

/// Coarsest partition in which states of a block agree, for every action a
/// and block B, on whether they have an a-transition into B. Computed by
/// Kanellakis-Smolka splitting; blocks are visited in ascending order of
/// their smallest member and actions alphabetically.
Partition refine_partition(const Lts& lts);

struct EquivalenceVerdict {
    bool equivalent = false;
    Equivalence kind = Equivalence::strong;
    /// Partition of the disjoint union (first LTS states first), when equivalent.
    std::optional<Partition> witness_partition;
    /// Holds on the first root and fails on the second, when inequivalent.
    std::optional<HmlFormula> distinguishing;
};

/// Decides bisimilarity of the initial states. For the weak kind the union
/// is saturated first and the distinguishing formula uses weak modalities.
/// The formula is checked by evaluation before being returned.
EquivalenceVerdict check_equivalence(const Lts& a, const Lts& b, Equivalence kind);

/// Formula satisfied by s1 and not by s2, built from the splitting history
/// of `lts` (saturated internally for the weak kind). Throws
/// StatesEquivalent if the states end up in one block.
HmlFormula distinguishing_formula(const Lts& lts, StateId s1, StateId s2, Equivalence kind);

/// Quotient by the partition of the given kind: one state per block
/// reachable from the initial block, transitions lifted and deduplicated.
/// The weak quotient lifts the original transitions and drops tau loops.
Lts minimize_lts(const Lts& lts, Equivalence kind);

/// Greatest fixed point over the full relation on the union of both state
/// spaces, deleting pairs that violate the transfer condition. Independent
/// of refine_partition; intended as a test oracle. Throws SizeLimitExceeded
/// above 1000 combined states.
bool naive_equivalence_oracle(const Lts& a, const Lts& b, Equivalence kind);

inline constexpr std::size_t naive_oracle_limit = 1000;

}  // namespace pacheck
