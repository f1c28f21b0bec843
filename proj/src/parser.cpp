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

#include "pacheck/parser.hpp"

#include <map>
#include <stdexcept>

namespace pacheck {

namespace {

enum class Tok {
    ident,
    zero,
    dot,
    plus,
    par,
    lbrack,
    rbrack,
    lbrack2,
    rbrack2,
    langle,
    rangle,
    langle2,
    rangle2,
    backslash,
    lbrace,
    rbrace,
    lparen,
    rparen,
    equals,
    semi,
    comma,
    colon,
    end,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

[[noreturn]] void fail_at(int line, int column, std::string message, std::string snippet) {
    throw ParseError(SourceDiagnostic{line, column, std::move(message), std::move(snippet)});
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_blanks();
            if (pos_ >= text_.size()) {
                out.push_back({Tok::end, "", line_, column_});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    void advance() {
        const auto c = static_cast<unsigned char>(text_[pos_++]);
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else if ((c & 0xC0) != 0x80) {
            // UTF-8 continuation bytes do not start a column.
            ++column_;
        }
    }

    void skip_blanks() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                return;
            }
        }
    }

    static bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
    static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

    Token next() {
        const int line = line_;
        const int column = column_;
        const char c = text_[pos_];
        auto single = [&](Tok kind, std::size_t len) {
            std::string s(text_.substr(pos_, len));
            for (std::size_t i = 0; i < len; ++i) advance();
            return Token{kind, std::move(s), line, column};
        };
        auto at = [&](std::size_t k) { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; };

        if (ident_start(c)) {
            std::size_t len = 1;
            while (ident_char(at(len))) ++len;
            return single(Tok::ident, len);
        }
        if (c >= '0' && c <= '9') {
            std::size_t len = 1;
            while (ident_char(at(len))) ++len;
            if (len != 1 || c != '0')
                fail_at(line, column, "invalid token; the only numeral is the nil process 0",
                        std::string(text_.substr(pos_, len)));
            return single(Tok::zero, 1);
        }
        switch (c) {
        case '.': return single(Tok::dot, 1);
        case '+': return single(Tok::plus, 1);
        case '|':
            if (at(1) != '|') fail_at(line, column, "expected '||'", "|");
            return single(Tok::par, 2);
        case '[': return at(1) == '[' ? single(Tok::lbrack2, 2) : single(Tok::lbrack, 1);
        case ']': return at(1) == ']' ? single(Tok::rbrack2, 2) : single(Tok::rbrack, 1);
        case '<': return at(1) == '<' ? single(Tok::langle2, 2) : single(Tok::langle, 1);
        case '>': return at(1) == '>' ? single(Tok::rangle2, 2) : single(Tok::rangle, 1);
        case '\\': return single(Tok::backslash, 1);
        case '{': return single(Tok::lbrace, 1);
        case '}': return single(Tok::rbrace, 1);
        case '(': return single(Tok::lparen, 1);
        case ')': return single(Tok::rparen, 1);
        case '=': return single(Tok::equals, 1);
        case ';': return single(Tok::semi, 1);
        case ',': return single(Tok::comma, 1);
        case ':': return single(Tok::colon, 1);
        default: break;
        }
        std::size_t len = 1;
        if (static_cast<unsigned char>(c) >= 0x80) {
            while (pos_ + len < text_.size() && (static_cast<unsigned char>(text_[pos_ + len]) & 0xC0) == 0x80)
                ++len;
        }
        fail_at(line, column, "unexpected character", std::string(text_.substr(pos_, len)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

struct Position {
    int line;
    int column;
};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

    Term parse_term_only() {
        Term t = term();
        expect(Tok::end, "end of input");
        return t;
    }

    HmlFormula parse_formula_only() {
        HmlFormula f = formula();
        expect(Tok::end, "end of input");
        return f;
    }

    ModelFile parse_model() {
        ModelFile model;
        std::map<std::string, Position> def_pos;
        std::map<std::string, Position> prop_pos;
        std::optional<Token> root_directive;

        while (peek().kind != Tok::end) {
            const Token& head = peek();
            if (head.kind != Tok::ident)
                fail(head, "expected a definition or directive");
            const bool is_definition = peek(1).kind == Tok::equals;
            if (!is_definition && head.text == "root") {
                next();
                Token name = expect(Tok::ident, "process name after 'root'");
                if (root_directive) fail(name, "duplicate root directive");
                root_directive = name;
                expect(Tok::semi, "';'");
            } else if (!is_definition && head.text == "property") {
                next();
                Token name = expect(Tok::ident, "property name");
                if (prop_pos.count(name.text)) fail(name, "duplicate property '" + name.text + "'");
                prop_pos[name.text] = {name.line, name.column};
                std::optional<bool> expected;
                if (peek().kind == Tok::ident && peek().text == "expected") {
                    next();
                    Token value = expect(Tok::ident, "'true' or 'false'");
                    if (value.text == "true")
                        expected = true;
                    else if (value.text == "false")
                        expected = false;
                    else
                        fail(value, "expected 'true' or 'false'");
                }
                expect(Tok::colon, "':'");
                HmlFormula f = formula();
                expect(Tok::semi, "';'");
                model.properties.push_back({name.text, std::move(f), expected});
            } else {
                Token name = next();
                if (name.text == "tau") fail(name, "'tau' is reserved and cannot name a process");
                if (def_pos.count(name.text)) fail(name, "duplicate definition of '" + name.text + "'");
                def_pos[name.text] = {name.line, name.column};
                expect(Tok::equals, "'='");
                Term body = term();
                expect(Tok::semi, "';'");
                model.env.define(name.text, std::move(body));
            }
        }

        if (root_directive) {
            model.env.set_root(root_directive->text);
        } else if (!model.env.definitions().empty()) {
            model.env.set_root(model.env.definitions().front().name);
        }

        const auto report = validate_environment(model.env);
        if (!report.ok()) {
            const auto& d = report.diagnostics.front();
            switch (d.rule) {
            case EnvironmentRule::missing_root:
                fail(peek(), "missing root: the model defines no process");
            case EnvironmentRule::undefined_root:
                fail(*root_directive, d.message);
            case EnvironmentRule::undefined_constant: {
                const auto p = const_pos_.at(d.subject);
                fail_at(p.line, p.column, d.message, d.subject);
            }
            case EnvironmentRule::unguarded_recursion: {
                const auto p = def_pos.at(d.definition);
                fail_at(p.line, p.column, d.message, d.definition);
            }
            }
        }
        return model;
    }

private:
    const Token& peek(std::size_t k = 0) const {
        const auto i = std::min(index_ + k, tokens_.size() - 1);
        return tokens_[i];
    }

    Token next() {
        Token t = tokens_[index_];
        if (index_ + 1 < tokens_.size()) ++index_;
        return t;
    }

    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        next();
        return true;
    }

    [[noreturn]] void fail(const Token& at, const std::string& message) const {
        fail_at(at.line, at.column, message, at.kind == Tok::end ? "end of input" : at.text);
    }

    Token expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(peek(), std::string("expected ") + what);
        return next();
    }

    // term := choice ; choice := par { "+" par }   (right-nested)
    Term term() {
        std::vector<Term> alternatives{par()};
        while (accept(Tok::plus)) alternatives.push_back(par());
        return Term::choice_of(std::move(alternatives));
    }

    // par := prefix { "||" "[" namelist "]" prefix }   (left-associative)
    Term par() {
        Term acc = prefix();
        while (accept(Tok::par)) {
            expect(Tok::lbrack, "'[' after '||'");
            NameSet sync = name_list(Tok::rbrack, "']'");
            acc = Term::parallel(std::move(acc), std::move(sync), prefix());
        }
        return acc;
    }

    // prefix := IDENT "." prefix | atom
    Term prefix() {
        if (peek().kind == Tok::ident && peek(1).kind == Tok::dot) {
            Token name = next();
            next();
            Action a = name.text == "tau" ? Action::tau() : Action::observable(name.text);
            return Term::prefix(std::move(a), prefix());
        }
        return atom();
    }

    // atom := ( "0" | IDENT | "(" term ")" ) { "\" "{" namelist "}" }
    Term atom() {
        Term base;
        const Token& t = peek();
        switch (t.kind) {
        case Tok::zero:
            next();
            base = Term::nil();
            break;
        case Tok::ident: {
            Token name = next();
            if (name.text == "tau") fail(name, "'tau' is reserved and cannot name a process");
            const_pos_.try_emplace(name.text, Position{name.line, name.column});
            base = Term::constant(name.text);
            break;
        }
        case Tok::lparen:
            next();
            base = term();
            expect(Tok::rparen, "')'");
            break;
        default:
            fail(t, "expected a process term");
        }
        while (accept(Tok::backslash)) {
            expect(Tok::lbrace, "'{' after '\\'");
            base = Term::hide(std::move(base), name_list(Tok::rbrace, "'}'"));
        }
        return base;
    }

    NameSet name_list(Tok close, const char* close_text) {
        std::vector<std::string> names;
        if (accept(close)) return names;
        do {
            Token name = expect(Tok::ident, "action name");
            if (name.text == "tau") fail(name, "'tau' cannot appear in a synchronization or hiding set");
            names.push_back(name.text);
        } while (accept(Tok::comma));
        expect(close, close_text);
        return make_name_set(std::move(names));
    }

    bool keyword(const char* word) const { return peek().kind == Tok::ident && peek().text == word; }

    // formula := and { "or" and }
    HmlFormula formula() {
        HmlFormula acc = conjunction();
        while (keyword("or")) {
            next();
            acc = HmlFormula::disjunction(std::move(acc), conjunction());
        }
        return acc;
    }

    // and := unary { "and" unary }
    HmlFormula conjunction() {
        HmlFormula acc = unary();
        while (keyword("and")) {
            next();
            acc = HmlFormula::conjunction(std::move(acc), unary());
        }
        return acc;
    }

    Action modal_action() {
        Token name = expect(Tok::ident, "action name");
        return name.text == "tau" ? Action::tau() : Action::observable(name.text);
    }

    HmlFormula unary() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::langle: {
            next();
            Action a = modal_action();
            expect(Tok::rangle, "'>'");
            return HmlFormula::diamond(std::move(a), unary());
        }
        case Tok::lbrack: {
            next();
            Action a = modal_action();
            expect(Tok::rbrack, "']'");
            return HmlFormula::box(std::move(a), unary());
        }
        case Tok::langle2: {
            next();
            Action a = modal_action();
            expect(Tok::rangle2, "'>>'");
            return HmlFormula::weak_diamond(std::move(a), unary());
        }
        case Tok::lbrack2: {
            next();
            Action a = modal_action();
            expect(Tok::rbrack2, "']]'");
            return HmlFormula::weak_box(std::move(a), unary());
        }
        case Tok::lparen: {
            next();
            HmlFormula f = formula();
            expect(Tok::rparen, "')'");
            return f;
        }
        case Tok::ident:
            if (t.text == "tt") {
                next();
                return HmlFormula::truth();
            }
            if (t.text == "ff") {
                next();
                return HmlFormula::falsity();
            }
            if (t.text == "not") {
                next();
                return HmlFormula::negation(unary());
            }
            break;
        default:
            break;
        }
        fail(t, "expected a formula");
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    std::map<std::string, Position> const_pos_;
};

}  // namespace

const DeclaredProperty* ModelFile::property(std::string_view name) const {
    for (const auto& p : properties)
        if (p.name == name) return &p;
    return nullptr;
}

Term parse_term(std::string_view text) { return Parser(text).parse_term_only(); }

HmlFormula parse_formula(std::string_view text) { return Parser(text).parse_formula_only(); }

ModelFile parse_model_file(std::string_view text) { return Parser(text).parse_model(); }

std::string render_model_file(const ModelFile& model) {
    std::string out;
    const auto& defs = model.env.definitions();
    if (!defs.empty() && model.env.root() != defs.front().name) out += "root " + model.env.root() + ";\n";
    for (const auto& d : defs) out += d.name + " = " + render_term(d.body) + ";\n";
    for (const auto& p : model.properties) {
        out += "property " + p.name;
        if (p.expected) out += *p.expected ? " expected true" : " expected false";
        out += " : " + render_formula(p.formula) + ";\n";
    }
    return out;
}

}  // namespace pacheck
