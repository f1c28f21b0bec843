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

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace pacheck {

/// True for [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view text) noexcept;

/// An action label: either an observable name or the internal action tau.
class Action {
public:
    static Action tau() { return Action{}; }
    /// Throws std::invalid_argument unless `name` is an identifier other than "tau".
    static Action observable(std::string name);
    /// Accepts "tau" as well as observable names.
    static Action parse(std::string_view text);

    bool is_tau() const noexcept { return name_.empty(); }
    /// Rendered name; "tau" for the internal action.
    std::string_view name() const noexcept;

    friend bool operator==(const Action&, const Action&) = default;
    friend std::strong_ordering operator<=>(const Action& a, const Action& b) noexcept {
        return a.name().compare(b.name()) <=> 0;
    }

private:
    Action() = default;
    explicit Action(std::string name) : name_(std::move(name)) {}

    std::string name_;
};

/// Sorted, duplicate-free set of observable action names.
using NameSet = std::vector<std::string>;

/// Sorts and deduplicates; throws std::invalid_argument on a non-identifier
/// or on "tau".
NameSet make_name_set(std::vector<std::string> names);
bool contains(const NameSet& set, std::string_view name) noexcept;

enum class TermKind { nil, prefix, choice, parallel, hide, constant };

/// Immutable process term with shared structure. Copies are cheap.
///
/// Sync and hiding sets are canonicalized on construction; operands of
/// choice and parallel are kept in the order given, so structural equality
/// is purely syntactic apart from set normalization.
class Term {
public:
    /// Nil.
    Term();

    static Term nil();
    static Term prefix(Action action, Term continuation);
    static Term choice(Term left, Term right);
    static Term parallel(Term left, NameSet sync, Term right);
    static Term hide(Term body, NameSet hidden);
    static Term constant(std::string name);
    /// Right-nested choice over the alternatives; nil for an empty list.
    static Term choice_of(std::vector<Term> alternatives);

    TermKind kind() const noexcept;
    /// Prefix only.
    const Action& action() const;
    /// Prefix continuation, choice/parallel left operand, or hiding body.
    Term left() const;
    /// Choice/parallel right operand.
    Term right() const;
    /// Sync set for parallel, hidden set for hide.
    const NameSet& names() const;
    /// Constant name.
    const std::string& name() const;

    std::size_t hash() const noexcept;
    /// Node count of the term tree, shared subterms counted once per
    /// occurrence; saturates instead of overflowing.
    std::size_t size() const noexcept;
    bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

    friend bool operator==(const Term& a, const Term& b) noexcept;

    struct Node;  // opaque

private:
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

bool structurally_equal(const Term& a, const Term& b) noexcept;

/// Renders with minimal parentheses; the result reparses to an equal term.
std::string render_term(const Term& term);

struct TermHash {
    std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

}  // namespace pacheck
