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

#include <string>
#include <string_view>

#include "pacheck/equivalence.hpp"
#include "pacheck/lts.hpp"

namespace pacheck {

/// Aldebaran format: header `des (0, T, S)` then one `(src, "label", dst)`
/// line per transition; tau is written "i".
std::string write_aut(const Lts& lts);

/// Reads Aldebaran text. Labels "i" and "tau" denote tau; labels may be
/// quoted or bare. The declared initial state is renumbered to 0.
/// Throws ParseError.
Lts read_aut(std::string_view text);

/// Graphviz digraph. With a partition, states of the same block share a fill
/// color and carry their block number.
std::string write_dot(const Lts& lts, const Partition* coloring = nullptr);

}  // namespace pacheck
