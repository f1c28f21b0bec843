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

#include "pacheck/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace pacheck {

struct HmlFormula::Node {
    FormulaKind kind = FormulaKind::truth;
    Action action = Action::tau();
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

std::shared_ptr<const HmlFormula::Node> leaf(FormulaKind kind) {
    auto n = std::make_shared<HmlFormula::Node>();
    n->kind = kind;
    return n;
}

}  // namespace

HmlFormula::HmlFormula() : HmlFormula(truth()) {}

HmlFormula HmlFormula::truth() {
    static const auto node = leaf(FormulaKind::truth);
    return HmlFormula(node);
}

HmlFormula HmlFormula::falsity() {
    static const auto node = leaf(FormulaKind::falsity);
    return HmlFormula(node);
}

HmlFormula HmlFormula::negation(HmlFormula f) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::negation;
    n->lhs = std::move(f.node_);
    return HmlFormula(std::move(n));
}

HmlFormula HmlFormula::conjunction(HmlFormula f, HmlFormula g) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::conjunction;
    n->lhs = std::move(f.node_);
    n->rhs = std::move(g.node_);
    return HmlFormula(std::move(n));
}

HmlFormula HmlFormula::disjunction(HmlFormula f, HmlFormula g) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::disjunction;
    n->lhs = std::move(f.node_);
    n->rhs = std::move(g.node_);
    return HmlFormula(std::move(n));
}

namespace {

std::shared_ptr<const HmlFormula::Node> modal(FormulaKind kind, Action a,
                                              std::shared_ptr<const HmlFormula::Node> body) {
    auto n = std::make_shared<HmlFormula::Node>();
    n->kind = kind;
    n->action = std::move(a);
    n->lhs = std::move(body);
    return n;
}

}  // namespace

HmlFormula HmlFormula::diamond(Action a, HmlFormula f) {
    return HmlFormula(modal(FormulaKind::diamond, std::move(a), std::move(f.node_)));
}

HmlFormula HmlFormula::box(Action a, HmlFormula f) {
    return HmlFormula(modal(FormulaKind::box, std::move(a), std::move(f.node_)));
}

HmlFormula HmlFormula::weak_diamond(Action a, HmlFormula f) {
    return HmlFormula(modal(FormulaKind::weak_diamond, std::move(a), std::move(f.node_)));
}

HmlFormula HmlFormula::weak_box(Action a, HmlFormula f) {
    return HmlFormula(modal(FormulaKind::weak_box, std::move(a), std::move(f.node_)));
}

FormulaKind HmlFormula::kind() const noexcept { return node_->kind; }

bool HmlFormula::is_modality() const noexcept {
    switch (node_->kind) {
    case FormulaKind::diamond:
    case FormulaKind::box:
    case FormulaKind::weak_diamond:
    case FormulaKind::weak_box:
        return true;
    default:
        return false;
    }
}

bool HmlFormula::is_weak_modality() const noexcept {
    return node_->kind == FormulaKind::weak_diamond || node_->kind == FormulaKind::weak_box;
}

const Action& HmlFormula::action() const {
    if (!is_modality()) throw std::logic_error("HmlFormula::action on a non-modal formula");
    return node_->action;
}

HmlFormula HmlFormula::left() const {
    if (!node_->lhs) throw std::logic_error("HmlFormula::left on a constant");
    return HmlFormula(node_->lhs);
}

HmlFormula HmlFormula::right() const {
    if (!node_->rhs) throw std::logic_error("HmlFormula::right on a non-binary formula");
    return HmlFormula(node_->rhs);
}

namespace {

bool nodes_equal(const HmlFormula::Node* a, const HmlFormula::Node* b) noexcept {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind || !(a->action == b->action)) return false;
    return nodes_equal(a->lhs.get(), b->lhs.get()) && nodes_equal(a->rhs.get(), b->rhs.get());
}

enum Level { level_or = 0, level_and = 1, level_unary = 2 };

Level level_of(const HmlFormula& f) {
    switch (f.kind()) {
    case FormulaKind::disjunction: return level_or;
    case FormulaKind::conjunction: return level_and;
    default: return level_unary;
    }
}

void render(const HmlFormula& f, Level context, std::string& out) {
    const bool parens = level_of(f) < context;
    if (parens) out += '(';
    switch (f.kind()) {
    case FormulaKind::truth: out += "tt"; break;
    case FormulaKind::falsity: out += "ff"; break;
    case FormulaKind::negation:
        out += "not ";
        render(f.left(), level_unary, out);
        break;
    case FormulaKind::conjunction:
        render(f.left(), level_and, out);
        out += " and ";
        render(f.right(), level_unary, out);
        break;
    case FormulaKind::disjunction:
        render(f.left(), level_or, out);
        out += " or ";
        render(f.right(), level_and, out);
        break;
    case FormulaKind::diamond:
    case FormulaKind::box:
    case FormulaKind::weak_diamond:
    case FormulaKind::weak_box: {
        static constexpr const char* open[] = {"<", "[", "<<", "[["};
        static constexpr const char* close[] = {">", "]", ">>", "]]"};
        const auto i = static_cast<int>(f.kind()) - static_cast<int>(FormulaKind::diamond);
        out += open[i];
        out += f.action().name();
        out += close[i];
        out += ' ';
        render(f.left(), level_unary, out);
        break;
    }
    }
    if (parens) out += ')';
}

}  // namespace

bool operator==(const HmlFormula& a, const HmlFormula& b) noexcept {
    return nodes_equal(a.node_.get(), b.node_.get());
}

std::string render_formula(const HmlFormula& f) {
    std::string out;
    render(f, level_or, out);
    return out;
}

std::size_t modal_depth(const HmlFormula& f) {
    switch (f.kind()) {
    case FormulaKind::truth:
    case FormulaKind::falsity:
        return 0;
    case FormulaKind::negation:
        return modal_depth(f.left());
    case FormulaKind::conjunction:
    case FormulaKind::disjunction:
        return std::max(modal_depth(f.left()), modal_depth(f.right()));
    default:
        return 1 + modal_depth(f.left());
    }
}

std::size_t formula_size(const HmlFormula& f) {
    switch (f.kind()) {
    case FormulaKind::truth:
    case FormulaKind::falsity:
        return 1;
    case FormulaKind::conjunction:
    case FormulaKind::disjunction:
        return 1 + formula_size(f.left()) + formula_size(f.right());
    default:
        return 1 + formula_size(f.left());
    }
}

}  // namespace pacheck
