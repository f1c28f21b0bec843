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

#include "pacheck/semantics.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "pacheck/error.hpp"

namespace pacheck {

namespace {

const Term& definition_of(const Term& constant, const Environment& env) {
    const Term* body = env.lookup(constant.name());
    if (!body) throw UnboundConstant(constant.name());
    return *body;
}

// Derivatives before normalization; may contain duplicates.
void derive(const Term& t, const Environment& env, std::vector<Step>& out) {
    switch (t.kind()) {
    case TermKind::nil:
        return;
    case TermKind::prefix:
        out.push_back({t.action(), t.left()});
        return;
    case TermKind::choice:
        derive(t.left(), env, out);
        derive(t.right(), env, out);
        return;
    case TermKind::constant:
        derive(definition_of(t, env), env, out);
        return;
    case TermKind::hide: {
        std::vector<Step> inner;
        derive(t.left(), env, inner);
        for (auto& s : inner) {
            Action a = !s.action.is_tau() && contains(t.names(), s.action.name()) ? Action::tau() : s.action;
            out.push_back({std::move(a), Term::hide(std::move(s.target), t.names())});
        }
        return;
    }
    case TermKind::parallel: {
        const Term l = t.left();
        const Term r = t.right();
        const NameSet& sync = t.names();
        std::vector<Step> dl, dr;
        derive(l, env, dl);
        derive(r, env, dr);
        auto synchronized = [&](const Action& a) { return !a.is_tau() && contains(sync, a.name()); };
        for (const auto& s : dl)
            if (!synchronized(s.action)) out.push_back({s.action, Term::parallel(s.target, sync, r)});
        for (const auto& s : dr)
            if (!synchronized(s.action)) out.push_back({s.action, Term::parallel(l, sync, s.target)});
        for (const auto& sl : dl) {
            if (!synchronized(sl.action)) continue;
            for (const auto& sr : dr)
                if (sr.action == sl.action) out.push_back({sl.action, Term::parallel(sl.target, sync, sr.target)});
        }
        return;
    }
    }
}

bool is_static(TermKind kind) {
    return kind == TermKind::parallel || kind == TermKind::hide || kind == TermKind::constant;
}

}  // namespace

Term normalize_state(const Term& term, const Environment& env) {
    switch (term.kind()) {
    case TermKind::constant: {
        const Term& body = definition_of(term, env);
        // Guardedness rules out a cycle through static definitions.
        return is_static(body.kind()) ? normalize_state(body, env) : term;
    }
    case TermKind::parallel: {
        Term l = normalize_state(term.left(), env);
        Term r = normalize_state(term.right(), env);
        if (l.same_node(term.left()) && r.same_node(term.right())) return term;
        return Term::parallel(std::move(l), term.names(), std::move(r));
    }
    case TermKind::hide: {
        Term b = normalize_state(term.left(), env);
        if (b.same_node(term.left())) return term;
        return Term::hide(std::move(b), term.names());
    }
    default:
        return term;
    }
}

std::vector<Step> step_transitions(const Term& term, const Environment& env) {
    std::vector<Step> raw;
    derive(term, env, raw);

    struct Keyed {
        std::string action;
        std::string target;
        Step step;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(raw.size());
    for (auto& s : raw) {
        Term target = normalize_state(s.target, env);
        if (target.size() > max_state_term_size) throw TermSizeExceeded(max_state_term_size, target.size());
        keyed.push_back({std::string(s.action.name()), render_term(target), {s.action, std::move(target)}});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.action != b.action) return a.action < b.action;
        return a.target < b.target;
    });
    std::vector<Step> out;
    out.reserve(keyed.size());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        // Equal renderings imply equal terms, so neighbours suffice.
        if (i > 0 && keyed[i].action == keyed[i - 1].action && keyed[i].target == keyed[i - 1].target) continue;
        out.push_back(std::move(keyed[i].step));
    }
    return out;
}

Lts build_lts(const Environment& env, std::size_t max_states) {
    return build_lts_from(Term::constant(env.root()), env, max_states);
}

Lts build_lts_from(const Term& initial, const Environment& env, std::size_t max_states) {
    std::vector<Term> states;
    std::unordered_map<Term, StateId, TermHash> index;
    LtsBuilder builder;

    auto intern = [&](Term t, std::size_t pending) -> StateId {
        auto it = index.find(t);
        if (it != index.end()) return it->second;
        if (states.size() >= max_states) throw StateBoundExceeded(max_states, pending);
        const auto id = static_cast<StateId>(states.size());
        index.emplace(t, id);
        states.push_back(std::move(t));
        return id;
    };

    intern(normalize_state(initial, env), 0);
    for (std::size_t next = 0; next < states.size(); ++next) {
        const Term current = states[next];
        for (auto& step : step_transitions(current, env)) {
            const auto target = intern(std::move(step.target), states.size() - next);
            builder.add_transition(static_cast<StateId>(next), step.action, target);
        }
    }
    builder.ensure_states(states.size());
    builder.set_terms(std::move(states));
    return std::move(builder).build();
}

}  // namespace pacheck
