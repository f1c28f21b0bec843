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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pacheck/term.hpp"

namespace pacheck {

struct Definition {
    std::string name;
    Term body;
};

/// Named process definitions in declaration order plus the root name.
class Environment {
public:
    /// Throws std::invalid_argument on a duplicate or malformed name.
    void define(std::string name, Term body);
    void set_root(std::string name) { root_ = std::move(name); }

    const std::string& root() const noexcept { return root_; }
    const std::vector<Definition>& definitions() const noexcept { return defs_; }
    /// nullptr if undefined.
    const Term* lookup(std::string_view name) const;
    bool defines(std::string_view name) const { return lookup(name) != nullptr; }

private:
    std::vector<Definition> defs_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::string root_;
};

enum class EnvironmentRule { missing_root, undefined_root, undefined_constant, unguarded_recursion };

struct EnvironmentDiagnostic {
    /// Definition the diagnostic is about (for undefined_constant: the one
    /// containing the dangling reference).
    std::string definition;
    EnvironmentRule rule;
    /// The offending constant for undefined_constant, else empty.
    std::string subject;
    std::string message;
};

struct ValidationReport {
    std::vector<EnvironmentDiagnostic> diagnostics;

    bool ok() const noexcept { return diagnostics.empty(); }
};

/// Checks the root is defined, every referenced constant is defined, and
/// every cycle through definitions crosses at least one action prefix.
ValidationReport validate_environment(const Environment& env);

/// Constants occurring in `term` outside the scope of any prefix.
std::vector<std::string> unguarded_constants(const Term& term);

}  // namespace pacheck
