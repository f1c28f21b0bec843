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

#include "pacheck/term.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace pacheck {

bool is_identifier(std::string_view text) noexcept {
    if (text.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(text.front())) return false;
    return std::all_of(text.begin() + 1, text.end(), [&](char c) { return alpha(c) || digit(c); });
}

Action Action::observable(std::string name) {
    if (!is_identifier(name)) throw std::invalid_argument("invalid action name '" + name + "'");
    if (name == "tau") throw std::invalid_argument("'tau' is reserved for the internal action");
    return Action(std::move(name));
}

Action Action::parse(std::string_view text) {
    if (text == "tau") return tau();
    return observable(std::string(text));
}

std::string_view Action::name() const noexcept {
    if (name_.empty()) return "tau";
    return name_;
}

NameSet make_name_set(std::vector<std::string> names) {
    for (const auto& n : names) {
        if (!is_identifier(n)) throw std::invalid_argument("invalid action name '" + n + "'");
        if (n == "tau") throw std::invalid_argument("'tau' cannot appear in a synchronization or hiding set");
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

bool contains(const NameSet& set, std::string_view name) noexcept {
    return std::binary_search(set.begin(), set.end(), name, std::less<>{});
}

struct Term::Node {
    TermKind kind = TermKind::nil;
    Action action = Action::tau();
    NameSet names;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::size_t hash = 0;
    std::size_t size = 1;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_names(const NameSet& names) {
    std::size_t h = names.size();
    for (const auto& n : names) h = mix(h, std::hash<std::string>{}(n));
    return h;
}

std::size_t add_sizes(std::size_t a, std::size_t b) {
    const std::size_t limit = std::numeric_limits<std::size_t>::max();
    return a >= limit - b - 1 ? limit : a + b + 1;
}

const std::shared_ptr<const Term::Node>& nil_node() {
    static const auto node = std::make_shared<const Term::Node>();
    return node;
}
}  // namespace

Term::Term() : node_(nil_node()) {}

Term Term::nil() { return Term(); }

Term Term::prefix(Action action, Term continuation) {
    auto n = std::make_shared<Node>();
    n->kind = TermKind::prefix;
    n->hash = mix(mix(1, std::hash<std::string_view>{}(action.name())), continuation.hash());
    n->action = std::move(action);
    n->size = add_sizes(continuation.size(), 0);
    n->lhs = std::move(continuation.node_);
    return Term(std::move(n));
}

Term Term::choice(Term left, Term right) {
    auto n = std::make_shared<Node>();
    n->kind = TermKind::choice;
    n->hash = mix(mix(2, left.hash()), right.hash());
    n->size = add_sizes(left.size(), right.size());
    n->lhs = std::move(left.node_);
    n->rhs = std::move(right.node_);
    return Term(std::move(n));
}

Term Term::parallel(Term left, NameSet sync, Term right) {
    auto n = std::make_shared<Node>();
    n->kind = TermKind::parallel;
    n->names = make_name_set(std::move(sync));
    n->hash = mix(mix(mix(3, left.hash()), hash_names(n->names)), right.hash());
    n->size = add_sizes(left.size(), right.size());
    n->lhs = std::move(left.node_);
    n->rhs = std::move(right.node_);
    return Term(std::move(n));
}

Term Term::hide(Term body, NameSet hidden) {
    auto n = std::make_shared<Node>();
    n->kind = TermKind::hide;
    n->names = make_name_set(std::move(hidden));
    n->hash = mix(mix(4, body.hash()), hash_names(n->names));
    n->size = add_sizes(body.size(), 0);
    n->lhs = std::move(body.node_);
    return Term(std::move(n));
}

Term Term::constant(std::string name) {
    if (!is_identifier(name) || name == "tau")
        throw std::invalid_argument("invalid process name '" + name + "'");
    auto n = std::make_shared<Node>();
    n->kind = TermKind::constant;
    n->hash = mix(5, std::hash<std::string>{}(name));
    n->name = std::move(name);
    return Term(std::move(n));
}

Term Term::choice_of(std::vector<Term> alternatives) {
    if (alternatives.empty()) return nil();
    Term acc = alternatives.back();
    for (auto it = alternatives.rbegin() + 1; it != alternatives.rend(); ++it) acc = choice(*it, acc);
    return acc;
}

TermKind Term::kind() const noexcept { return node_->kind; }

std::size_t Term::size() const noexcept { return node_->size; }

const Action& Term::action() const {
    if (node_->kind != TermKind::prefix) throw std::logic_error("Term::action on a non-prefix term");
    return node_->action;
}

Term Term::left() const {
    if (!node_->lhs) throw std::logic_error("Term::left on a leaf term");
    return Term(node_->lhs);
}

Term Term::right() const {
    if (!node_->rhs) throw std::logic_error("Term::right on a term without right operand");
    return Term(node_->rhs);
}

const NameSet& Term::names() const {
    if (node_->kind != TermKind::parallel && node_->kind != TermKind::hide)
        throw std::logic_error("Term::names on a term without an action set");
    return node_->names;
}

const std::string& Term::name() const {
    if (node_->kind != TermKind::constant) throw std::logic_error("Term::name on a non-constant term");
    return node_->name;
}

std::size_t Term::hash() const noexcept { return node_->hash; }

namespace {

bool nodes_equal(const Term::Node* a, const Term::Node* b) noexcept {
    while (true) {
        if (a == b) return true;
        if (a->kind != b->kind || a->hash != b->hash) return false;
        switch (a->kind) {
        case TermKind::nil:
            return true;
        case TermKind::constant:
            return a->name == b->name;
        case TermKind::prefix:
            if (!(a->action == b->action)) return false;
            break;
        case TermKind::hide:
            if (a->names != b->names) return false;
            break;
        case TermKind::parallel:
            if (a->names != b->names) return false;
            if (!nodes_equal(a->rhs.get(), b->rhs.get())) return false;
            break;
        case TermKind::choice:
            if (!nodes_equal(a->rhs.get(), b->rhs.get())) return false;
            break;
        }
        a = a->lhs.get();
        b = b->lhs.get();
    }
}

}  // namespace

bool operator==(const Term& a, const Term& b) noexcept { return nodes_equal(a.node_.get(), b.node_.get()); }

bool structurally_equal(const Term& a, const Term& b) noexcept { return a == b; }

namespace {

// Binding strength, loosest first.
enum Level { level_choice = 0, level_parallel = 1, level_prefix = 2, level_atom = 3 };

Level level_of(const Term& t) {
    switch (t.kind()) {
    case TermKind::choice: return level_choice;
    case TermKind::parallel: return level_parallel;
    case TermKind::prefix: return level_prefix;
    default: return level_atom;
    }
}

void append_names(std::string& out, const NameSet& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
}

void render(const Term& t, Level context, std::string& out) {
    const bool parens = level_of(t) < context;
    if (parens) out += '(';
    switch (t.kind()) {
    case TermKind::nil:
        out += '0';
        break;
    case TermKind::constant:
        out += t.name();
        break;
    case TermKind::prefix:
        out += t.action().name();
        out += " . ";
        render(t.left(), level_prefix, out);
        break;
    case TermKind::choice:
        render(t.left(), level_parallel, out);
        out += " + ";
        render(t.right(), level_choice, out);
        break;
    case TermKind::parallel:
        render(t.left(), level_parallel, out);
        out += " ||[";
        append_names(out, t.names());
        out += "] ";
        render(t.right(), level_prefix, out);
        break;
    case TermKind::hide:
        render(t.left(), level_atom, out);
        out += " \\ {";
        append_names(out, t.names());
        out += '}';
        break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string render_term(const Term& term) {
    std::string out;
    render(term, level_choice, out);
    return out;
}

}  // namespace pacheck
