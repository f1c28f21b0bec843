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

#include "pacheck/hml.hpp"

#include <sstream>
#include <stdexcept>

namespace pacheck {

HmlChecker::HmlChecker(const Lts& lts) : lts_(lts) {}

const Lts& HmlChecker::lts_for(const HmlFormula& f) {
    if (!f.is_weak_modality() || lts_.saturated()) return lts_;
    if (!weak_) weak_ = saturate_weak(lts_);
    return *weak_;
}

const std::vector<char>& HmlChecker::satisfying(const HmlFormula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;

    const std::size_t n = lts_.num_states();
    std::vector<char> sat(n, 0);
    switch (f.kind()) {
    case FormulaKind::truth:
        sat.assign(n, 1);
        break;
    case FormulaKind::falsity:
        break;
    case FormulaKind::negation: {
        const auto& inner = satisfying(f.left());
        for (std::size_t s = 0; s < n; ++s) sat[s] = !inner[s];
        break;
    }
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: {
        const auto lhs = satisfying(f.left());
        const auto& rhs = satisfying(f.right());
        const bool both = f.kind() == FormulaKind::conjunction;
        for (std::size_t s = 0; s < n; ++s) sat[s] = both ? (lhs[s] && rhs[s]) : (lhs[s] || rhs[s]);
        break;
    }
    default: {
        const auto& body = satisfying(f.left());
        const Lts& graph = lts_for(f);
        const auto label = graph.label_of(f.action());
        const bool existential = f.kind() == FormulaKind::diamond || f.kind() == FormulaKind::weak_diamond;
        for (StateId s = 0; s < n; ++s) {
            bool any = false;
            bool all = true;
            if (label) {
                for (const auto& t : graph.outgoing(s)) {
                    if (t.label != *label) continue;
                    if (body[t.target])
                        any = true;
                    else
                        all = false;
                }
            }
            sat[s] = existential ? any : all;
        }
        break;
    }
    }
    pinned_.push_back(f);
    return memo_.emplace(f.id(), std::move(sat)).first->second;
}

bool HmlChecker::holds(StateId state, const HmlFormula& f) {
    if (state >= lts_.num_states()) throw std::out_of_range("state index out of range");
    return satisfying(f)[state] != 0;
}

namespace {

std::string arrow(const HmlFormula& f) {
    const auto name = std::string(f.action().name());
    return f.is_weak_modality() ? " =" + name + "=> " : " -" + name + "-> ";
}

}  // namespace

void HmlChecker::explain(StateId state, const HmlFormula& f, bool expected, std::size_t depth,
                         EvaluationResult& out) {
    const std::string indent(2 * depth, ' ');
    const std::string where = "state " + std::to_string(state) + " (" + lts_.describe_state(state) + ")";
    if (depth >= max_trace_depth) {
        out.trace.push_back(indent + "... (trace truncated)");
        return;
    }
    const std::string verdict = expected ? " satisfies " : " violates ";
    out.trace.push_back(indent + where + verdict + render_formula(f));

    switch (f.kind()) {
    case FormulaKind::truth:
    case FormulaKind::falsity:
        return;
    case FormulaKind::negation:
        explain(state, f.left(), !expected, depth + 1, out);
        return;
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: {
        // Conjunction fails (disjunction holds) through one operand; the
        // other cases need both.
        const bool one_suffices = (f.kind() == FormulaKind::conjunction) != expected;
        if (one_suffices) {
            const bool lhs = holds(state, f.left());
            explain(state, lhs == expected ? f.left() : f.right(), expected, depth + 1, out);
        } else {
            explain(state, f.left(), expected, depth + 1, out);
            explain(state, f.right(), expected, depth + 1, out);
        }
        return;
    }
    default:
        break;
    }

    const Lts& graph = lts_for(f);
    const auto label = graph.label_of(f.action());
    std::vector<StateId> succ;
    if (label) succ = graph.successors(state, *label);
    const bool existential = f.kind() == FormulaKind::diamond || f.kind() == FormulaKind::weak_diamond;
    const HmlFormula body = f.left();

    if (existential == expected) {
        // Diamond holds or box fails: one successor decides.
        for (auto t : succ) {
            if (holds(t, body) != expected) continue;
            out.trace.push_back(indent + "  " + (expected ? "witness " : "counterexample ") + std::to_string(state) +
                                arrow(f) + std::to_string(t));
            out.path.push_back({state, f.action(), t});
            explain(t, body, expected, depth + 1, out);
            return;
        }
        return;
    }

    // Diamond fails or box holds: every successor was examined.
    std::ostringstream os;
    os << indent << "  ";
    if (succ.empty()) {
        os << "no" << arrow(f) << "successors";
    } else {
        os << (expected ? "all" : "none of the") << arrow(f) << "successors {";
        for (std::size_t i = 0; i < succ.size(); ++i) os << (i ? ", " : "") << succ[i];
        os << "} " << (expected ? "satisfy " : "satisfies ") << render_formula(body);
    }
    out.trace.push_back(os.str());
}

EvaluationResult HmlChecker::evaluate(StateId state, const HmlFormula& f) {
    EvaluationResult result;
    result.holds = holds(state, f);
    explain(state, f, result.holds, 0, result);
    return result;
}

EvaluationResult evaluate_formula(const Lts& lts, StateId state, const HmlFormula& f) {
    return HmlChecker(lts).evaluate(state, f);
}

}  // namespace pacheck
