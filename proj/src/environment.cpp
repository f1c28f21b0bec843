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

#include "pacheck/environment.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pacheck {

void Environment::define(std::string name, Term body) {
    if (!is_identifier(name) || name == "tau")
        throw std::invalid_argument("invalid process name '" + name + "'");
    if (index_.count(name)) throw std::invalid_argument("duplicate definition of '" + name + "'");
    index_.emplace(name, defs_.size());
    defs_.push_back({std::move(name), std::move(body)});
}

const Term* Environment::lookup(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return nullptr;
    return &defs_[it->second].body;
}

namespace {

void collect_constants(const Term& t, bool under_prefix_allowed, std::vector<std::string>& out) {
    switch (t.kind()) {
    case TermKind::nil:
        return;
    case TermKind::constant:
        out.push_back(t.name());
        return;
    case TermKind::prefix:
        if (under_prefix_allowed) collect_constants(t.left(), true, out);
        return;
    case TermKind::hide:
        collect_constants(t.left(), under_prefix_allowed, out);
        return;
    case TermKind::choice:
    case TermKind::parallel:
        collect_constants(t.left(), under_prefix_allowed, out);
        collect_constants(t.right(), under_prefix_allowed, out);
        return;
    }
}

}  // namespace

std::vector<std::string> unguarded_constants(const Term& term) {
    std::vector<std::string> out;
    collect_constants(term, false, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ValidationReport validate_environment(const Environment& env) {
    ValidationReport report;
    const auto& defs = env.definitions();

    if (env.root().empty()) {
        report.diagnostics.push_back(
            {"", EnvironmentRule::missing_root, "", "no root process: the model has no definitions"});
    } else if (!env.defines(env.root())) {
        report.diagnostics.push_back({env.root(), EnvironmentRule::undefined_root, env.root(),
                                      "root process '" + env.root() + "' is not defined"});
    }

    for (const auto& def : defs) {
        std::vector<std::string> used;
        collect_constants(def.body, true, used);
        std::set<std::string> reported;
        for (const auto& name : used) {
            if (env.defines(name) || !reported.insert(name).second) continue;
            report.diagnostics.push_back({def.name, EnvironmentRule::undefined_constant, name,
                                          "definition of '" + def.name + "' refers to undefined process '" +
                                              name + "'"});
        }
    }

    // A definition is unguarded-recursive iff it reaches itself through
    // constants that occur outside any prefix.
    std::vector<std::vector<std::size_t>> edges(defs.size());
    for (std::size_t i = 0; i < defs.size(); ++i) {
        for (const auto& name : unguarded_constants(defs[i].body)) {
            auto it = std::find_if(defs.begin(), defs.end(), [&](const Definition& d) { return d.name == name; });
            if (it != defs.end()) edges[i].push_back(static_cast<std::size_t>(it - defs.begin()));
        }
    }
    for (std::size_t start = 0; start < defs.size(); ++start) {
        std::vector<char> seen(defs.size(), 0);
        std::vector<std::size_t> stack(edges[start].begin(), edges[start].end());
        bool cyclic = false;
        while (!stack.empty() && !cyclic) {
            const auto v = stack.back();
            stack.pop_back();
            if (v == start) cyclic = true;
            if (seen[v]) continue;
            seen[v] = 1;
            stack.insert(stack.end(), edges[v].begin(), edges[v].end());
        }
        if (cyclic) {
            report.diagnostics.push_back({defs[start].name, EnvironmentRule::unguarded_recursion, "",
                                          "unguarded recursion: '" + defs[start].name +
                                              "' can unfold to itself without performing an action"});
        }
    }
    return report;
}

}  // namespace pacheck
