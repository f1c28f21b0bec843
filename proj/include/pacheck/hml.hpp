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

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pacheck/formula.hpp"
#include "pacheck/lts.hpp"

namespace pacheck {

struct TraceStep {
    StateId source;
    Action action;
    StateId target;
};

struct EvaluationResult {
    bool holds = false;
    /// Explanation of the verdict, one line per reasoning step, indented by
    /// subformula depth. Capped at depth 50.
    std::vector<std::string> trace;
    /// Path from the evaluated state following the explanation: the
    /// execution violating a box, or the witness of a diamond.
    std::vector<TraceStep> path;
};

inline constexpr std::size_t max_trace_depth = 50;

/// Evaluates formulas on one LTS, memoizing satisfaction sets per
/// subformula. Weak modalities quantify over saturate_weak(lts), computed
/// on first use.
class HmlChecker {
public:
    explicit HmlChecker(const Lts& lts);

    /// Throws std::out_of_range on a bad state.
    bool holds(StateId state, const HmlFormula& f);
    /// Satisfaction flag for every state.
    const std::vector<char>& satisfying(const HmlFormula& f);

    EvaluationResult evaluate(StateId state, const HmlFormula& f);

private:
    const Lts& lts_for(const HmlFormula& f);
    void explain(StateId state, const HmlFormula& f, bool expected, std::size_t depth,
                 EvaluationResult& out);

    const Lts& lts_;
    std::optional<Lts> weak_;
    std::unordered_map<const void*, std::vector<char>> memo_;
    std::vector<HmlFormula> pinned_;
};

EvaluationResult evaluate_formula(const Lts& lts, StateId state, const HmlFormula& f);

}  // namespace pacheck
