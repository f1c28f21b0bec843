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
#include <stdexcept>
#include <string>

namespace pacheck {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Position-tagged message produced by the text frontends. Lines and columns
/// are 1-based; columns count code points, not bytes.
struct SourceDiagnostic {
    int line = 1;
    int column = 1;
    std::string message;
    std::string snippet;

    std::string to_string() const;
};

class ParseError : public Error {
public:
    explicit ParseError(SourceDiagnostic diagnostic);

    const SourceDiagnostic& diagnostic() const noexcept { return diagnostic_; }

private:
    SourceDiagnostic diagnostic_;
};

/// State exploration hit the configured bound. A truncated LTS would make
/// every later verdict unsound, so this is always fatal.
class StateBoundExceeded : public Error {
public:
    StateBoundExceeded(std::size_t max_states, std::size_t frontier);

    std::size_t max_states() const noexcept { return max_states_; }
    std::size_t frontier() const noexcept { return frontier_; }

private:
    std::size_t max_states_;
    std::size_t frontier_;
};

/// A state term grew past the configured size. Raised by systems whose
/// terms grow without bound even though few states have been found, such as
/// `P = a . (P ||[a] P)`.
class TermSizeExceeded : public Error {
public:
    TermSizeExceeded(std::size_t limit, std::size_t size);

    std::size_t limit() const noexcept { return limit_; }
    std::size_t size() const noexcept { return size_; }

private:
    std::size_t limit_;
    std::size_t size_;
};

class UnboundConstant : public Error {
public:
    explicit UnboundConstant(std::string name);

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Raised when a distinguishing formula is requested for two equivalent states.
class StatesEquivalent : public Error {
public:
    using Error::Error;
};

/// Raised by the brute-force oracle when its input is too large.
class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace pacheck
