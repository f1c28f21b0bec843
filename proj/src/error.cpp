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

#include "pacheck/error.hpp"

#include <sstream>

namespace pacheck {

std::string SourceDiagnostic::to_string() const {
    std::ostringstream os;
    os << line << ':' << column << ": error: " << message;
    if (!snippet.empty()) os << " (at '" << snippet << "')";
    return os.str();
}

ParseError::ParseError(SourceDiagnostic diagnostic)
    : Error(diagnostic.to_string()), diagnostic_(std::move(diagnostic)) {}

namespace {

std::string bound_message(std::size_t max_states, std::size_t frontier) {
    std::ostringstream os;
    os << "state bound exceeded: more than " << max_states << " states (" << frontier
       << " states still unexplored); the state space may be infinite";
    return os.str();
}

}  // namespace

StateBoundExceeded::StateBoundExceeded(std::size_t max_states, std::size_t frontier)
    : Error(bound_message(max_states, frontier)), max_states_(max_states), frontier_(frontier) {}

TermSizeExceeded::TermSizeExceeded(std::size_t limit, std::size_t size)
    : Error("state term has " + std::to_string(size) + " nodes, more than the limit of " + std::to_string(limit) +
            "; the system probably grows without bound"),
      limit_(limit),
      size_(size) {}

UnboundConstant::UnboundConstant(std::string name)
    : Error("unbound process constant '" + name + "'"), name_(std::move(name)) {}

}  // namespace pacheck
