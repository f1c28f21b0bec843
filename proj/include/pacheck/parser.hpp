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
#include <string>
#include <string_view>
#include <vector>

#include "pacheck/environment.hpp"
#include "pacheck/error.hpp"
#include "pacheck/formula.hpp"
#include "pacheck/term.hpp"

namespace pacheck {

struct DeclaredProperty {
    std::string name;
    HmlFormula formula;
    /// nullopt when declared without an expected verdict.
    std::optional<bool> expected;
};

struct ModelFile {
    Environment env;
    std::vector<DeclaredProperty> properties;

    const DeclaredProperty* property(std::string_view name) const;
};

// All parse functions throw ParseError carrying the first problem found.

Term parse_term(std::string_view text);
HmlFormula parse_formula(std::string_view text);

/// Model file grammar:
///
///   file       := { directive | definition }
///   definition := IDENT "=" term ";"
///   directive  := "root" IDENT ";"
///               | "property" IDENT [ "expected" ("true"|"false") ] ":" formula ";"
///
/// The root is the first definition unless a root directive names another.
/// The environment is validated before returning.
ModelFile parse_model_file(std::string_view text);

/// Canonical text of a model file: one "Name = term;" line per definition,
/// a root directive only when the root is not the first definition, then
/// the properties.
std::string render_model_file(const ModelFile& model);

}  // namespace pacheck
