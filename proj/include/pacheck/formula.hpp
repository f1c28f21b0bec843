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
#include <memory>
#include <string>

#include "pacheck/term.hpp"

namespace pacheck {

enum class FormulaKind {
    truth,
    falsity,
    negation,
    conjunction,
    disjunction,
    diamond,
    box,
    weak_diamond,
    weak_box,
};

/// Hennessy-Milner logic formula. Immutable, shared structure.
class HmlFormula {
public:
    /// tt.
    HmlFormula();

    static HmlFormula truth();
    static HmlFormula falsity();
    static HmlFormula negation(HmlFormula f);
    static HmlFormula conjunction(HmlFormula f, HmlFormula g);
    static HmlFormula disjunction(HmlFormula f, HmlFormula g);
    static HmlFormula diamond(Action a, HmlFormula f);
    static HmlFormula box(Action a, HmlFormula f);
    static HmlFormula weak_diamond(Action a, HmlFormula f);
    static HmlFormula weak_box(Action a, HmlFormula f);

    FormulaKind kind() const noexcept;
    bool is_modality() const noexcept;
    bool is_weak_modality() const noexcept;
    /// Modalities only.
    const Action& action() const;
    /// Operand of negation and modalities; left operand of binary connectives.
    HmlFormula left() const;
    HmlFormula right() const;

    /// Identity of the underlying node; used as a memo key.
    const void* id() const noexcept { return node_.get(); }

    friend bool operator==(const HmlFormula& a, const HmlFormula& b) noexcept;

    struct Node;  // opaque

private:
    explicit HmlFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

std::string render_formula(const HmlFormula& f);
std::size_t modal_depth(const HmlFormula& f);
std::size_t formula_size(const HmlFormula& f);

}  // namespace pacheck
