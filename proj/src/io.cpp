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

#include "pacheck/io.hpp"

#include <charconv>
#include <sstream>

#include "pacheck/error.hpp"

namespace pacheck {

namespace {

std::string aut_label(const Action& a) { return a.is_tau() ? "i" : std::string(a.name()); }

}  // namespace

std::string write_aut(const Lts& lts) {
    std::ostringstream os;
    os << "des (" << lts.initial() << ", " << lts.transitions().size() << ", " << lts.num_states() << ")\n";
    for (const auto& t : lts.transitions())
        os << '(' << t.source << ", \"" << aut_label(lts.action(t.label)) << "\", " << t.target << ")\n";
    return os.str();
}

namespace {

class AutReader {
public:
    explicit AutReader(std::string_view text) : text_(text) {}

    Lts read() {
        next_line();
        expect_word("des");
        expect('(');
        const auto initial = number();
        expect(',');
        const auto count = number();
        expect(',');
        const auto states = number();
        expect(')');
        if (states == 0) fail("an LTS needs at least one state");
        if (initial >= states) fail("initial state out of range");
        end_of_line();

        // Swap the declared initial state with state 0.
        auto renumber = [&](std::size_t s) -> StateId {
            if (s == initial) return 0;
            if (s == 0) return static_cast<StateId>(initial);
            return static_cast<StateId>(s);
        };
        LtsBuilder builder(states);
        std::size_t seen = 0;
        while (next_line()) {
            expect('(');
            const auto src = number();
            expect(',');
            const std::string label = label_text();
            expect(',');
            const auto dst = number();
            expect(')');
            if (src >= states || dst >= states) fail("transition endpoint out of range");
            Action a = Action::tau();
            if (label != "i" && label != "tau") {
                if (!is_identifier(label)) fail("unsupported action label '" + label + "'");
                a = Action::observable(label);
            }
            end_of_line();
            builder.add_transition(renumber(src), a, renumber(dst));
            ++seen;
        }
        if (seen != count)
            fail("header declares " + std::to_string(count) + " transitions, found " + std::to_string(seen));
        return std::move(builder).build();
    }

private:
    // Moves to the next non-blank line; false at end of input.
    bool next_line() {
        while (pos_ < text_.size()) {
            const auto eol = text_.find('\n', pos_);
            const auto line = text_.substr(pos_, eol == std::string_view::npos ? std::string_view::npos : eol - pos_);
            if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
                pos_ = eol == std::string_view::npos ? text_.size() : eol + 1;
                ++line_no_;
                line_start_ = pos_;
                continue;
            }
            line_start_ = pos_;
            return true;
        }
        return false;
    }

    void skip_spaces() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        const int column = static_cast<int>(pos_ - line_start_) + 1;
        throw ParseError(SourceDiagnostic{line_no_, column, message, ""});
    }

    void expect(char c) {
        skip_spaces();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void expect_word(std::string_view word) {
        skip_spaces();
        if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
        pos_ += word.size();
    }

    std::size_t number() {
        skip_spaces();
        std::size_t value = 0;
        const auto* first = text_.data() + pos_;
        const auto* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) fail("expected a number");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    std::string label_text() {
        skip_spaces();
        std::string out;
        if (pos_ < text_.size() && text_[pos_] == '"') {
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') out += text_[pos_++];
            if (pos_ >= text_.size() || text_[pos_] != '"') fail("unterminated label");
            ++pos_;
        } else {
            while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '\n') out += text_[pos_++];
            while (!out.empty() && (out.back() == ' ' || out.back() == '\t')) out.pop_back();
        }
        return out;
    }

    void end_of_line() {
        skip_spaces();
        if (pos_ < text_.size() && text_[pos_] != '\n') fail("unexpected trailing text");
        if (pos_ < text_.size()) ++pos_;
        ++line_no_;
        line_start_ = pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_start_ = 0;
    int line_no_ = 1;
};

const char* const palette[] = {"#f0f0f0", "#bdbdbd", "#737373", "#c6dbef", "#6baed6", "#fdd0a2",
                               "#fd8d3c", "#c7e9c0", "#74c476", "#dadaeb", "#9e9ac8", "#fcbba1"};

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

Lts read_aut(std::string_view text) { return AutReader(text).read(); }

std::string write_dot(const Lts& lts, const Partition* coloring) {
    std::ostringstream os;
    os << "digraph lts {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle, style=filled, fillcolor=\"#ffffff\"];\n";
    os << "  init [shape=point, style=invis];\n";
    for (StateId s = 0; s < lts.num_states(); ++s) {
        os << "  " << s << " [label=\"" << s;
        if (coloring) os << " (B" << coloring->block_of.at(s) << ")";
        os << "\"";
        if (lts.has_terms()) os << ", tooltip=\"" << dot_escape(lts.describe_state(s)) << "\"";
        if (coloring) {
            const auto block = coloring->block_of.at(s);
            os << ", fillcolor=\"" << palette[block % std::size(palette)] << "\"";
        }
        os << "];\n";
    }
    os << "  init -> " << lts.initial() << " [style=dashed];\n";
    for (const auto& t : lts.transitions())
        os << "  " << t.source << " -> " << t.target << " [label=\"" << lts.action(t.label).name() << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace pacheck
