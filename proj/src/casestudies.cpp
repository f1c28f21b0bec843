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

#include "pacheck/casestudies.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "embedded_corpus.hpp"
#include "pacheck/error.hpp"
#include "pacheck/hml.hpp"

namespace pacheck {

std::string_view to_string(BufferStyle style) noexcept {
    switch (style) {
    case BufferStyle::spec: return "spec";
    case BufferStyle::concurrent: return "concurrent";
    case BufferStyle::pipeline: return "pipeline";
    }
    return "?";
}

BufferStyle parse_buffer_style(std::string_view text) {
    if (text == "spec") return BufferStyle::spec;
    if (text == "concurrent" || text == "conc") return BufferStyle::concurrent;
    if (text == "pipeline" || text == "pipe") return BufferStyle::pipeline;
    throw std::invalid_argument("unknown buffer style '" + std::string(text) + "'");
}

namespace {

// "X ||[] X ||[] X" for k copies; parenthesized when k > 1.
std::string interleaved(const std::string& name, int k) {
    std::string out = name;
    for (int i = 1; i < k; ++i) out += " ||[] " + name;
    return k > 1 ? "(" + out + ")" : out;
}

std::string pass(int i, int n) { return n == 2 ? "pass" : "pass_" + std::to_string(i); }

std::string counter_model(int n) {
    std::ostringstream os;
    auto state = [n](int i) { return "ProdCons_" + std::to_string(i) + "_" + std::to_string(n); };
    for (int i = 0; i <= n; ++i) {
        os << state(i) << " = ";
        if (i < n) os << "deposit . " << state(i + 1);
        if (i > 0 && i < n) os << " + ";
        if (i > 0) os << "withdraw . " << state(i - 1);
        os << ";\n";
    }
    return os.str();
}

}  // namespace

ModelFile build_producer_consumer(int capacity, int producers, int consumers, BufferStyle style) {
    if (capacity < 1 || producers < 1 || consumers < 1)
        throw std::invalid_argument("capacity, producers and consumers must all be at least 1");
    if (style == BufferStyle::spec) return parse_model_file(counter_model(capacity));

    const std::string n = std::to_string(capacity);
    const std::string prods = interleaved("Prod", producers);
    const std::string cons = interleaved("Cons", consumers);
    std::ostringstream os;
    if (style == BufferStyle::concurrent) {
        os << "PC_conc_" << n << " = " << prods << " ||[deposit] " << interleaved("Buff", capacity)
           << " ||[withdraw] " << cons << ";\n";
        os << "Prod = deposit . Prod;\n";
        os << "Buff = deposit . withdraw . Buff;\n";
        os << "Cons = withdraw . Cons;\n";
        return parse_model_file(os.str());
    }

    std::vector<std::string> cells;
    if (capacity == 1) {
        cells = {"Buff"};
    } else if (capacity == 2) {
        cells = {"LBuff", "RBuff"};
    } else {
        for (int i = 1; i <= capacity; ++i) cells.push_back("Buff_" + std::to_string(i));
    }
    std::string chain = cells[0];
    std::string hidden;
    for (int i = 1; i < capacity; ++i) {
        chain += " ||[" + pass(i, capacity) + "] " + cells[i];
        hidden += (i > 1 ? ", " : "") + pass(i, capacity);
    }
    if (capacity > 1) chain = "(" + chain + ") \\ {" + hidden + "}";
    os << "PC_pipe_" << n << " = " << prods << " ||[deposit] " << chain << " ||[withdraw] " << cons << ";\n";
    os << "Prod = deposit . Prod;\n";
    for (int i = 0; i < capacity; ++i) {
        const std::string in = i == 0 ? "deposit" : pass(i, capacity);
        const std::string out = i == capacity - 1 ? "withdraw" : pass(i + 1, capacity);
        os << cells[i] << " = " << in << " . " << out << " . " << cells[i] << ";\n";
    }
    os << "Cons = withdraw . Cons;\n";
    return parse_model_file(os.str());
}

Lts build_subject_lts(const ModelFile& model, const NameSet& hide, std::size_t max_states) {
    const Term root = Term::constant(model.env.root());
    return build_lts_from(hide.empty() ? root : Term::hide(root, hide), model.env, max_states);
}

std::vector<CheckOutcome> run_case_study(const CaseStudy& study, std::size_t max_states) {
    std::vector<CheckOutcome> outcomes;
    for (const auto& check : study.checks) {
        CheckOutcome out;
        out.case_study = study.name;
        out.check = check.name;
        out.expected = check.expected;
        if (const auto* eq = std::get_if<EquivalenceCheck>(&check.what)) {
            const Lts a = build_subject_lts(study.models.at(eq->subject), eq->hide, max_states);
            const Lts b = build_subject_lts(study.models.at(eq->peer), {}, max_states);
            const auto verdict = check_equivalence(a, b, eq->relation);
            out.actual = verdict.equivalent;
            out.detail = verdict.distinguishing ? "distinguished by " + render_formula(*verdict.distinguishing)
                                                : std::string(to_string(eq->relation)) + " equivalent";
        } else if (const auto* fc = std::get_if<FormulaCheck>(&check.what)) {
            const Lts lts = build_subject_lts(study.models.at(fc->subject), {}, max_states);
            const auto result = evaluate_formula(lts, lts.initial(), fc->formula);
            out.actual = result.holds;
            out.detail = render_formula(fc->formula);
        } else {
            const auto& rc = std::get<ReachabilityCheck>(check.what);
            const Lts lts = build_subject_lts(study.models.at(rc.subject), {}, max_states);
            const auto actions = reachable_action_set(lts, lts.initial());
            out.actual = std::find(actions.begin(), actions.end(), rc.action) != actions.end();
            out.detail = std::string(rc.action.name()) + (out.actual ? " reachable" : " unreachable");
        }
        outcomes.push_back(std::move(out));
    }
    return outcomes;
}

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw Error("manifest: " + where + " lacks '" + key + "'");
    return obj.at(key);
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_string()) throw Error("manifest: " + where + "." + key + " must be a string");
    return v.get<std::string>();
}

bool bool_field(const json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_boolean()) throw Error("manifest: " + where + "." + key + " must be a boolean");
    return v.get<bool>();
}

}  // namespace

Corpus Corpus::from_files(std::map<std::string, std::string> files) {
    Corpus corpus;
    corpus.files_ = std::move(files);
    const auto manifest_it = corpus.files_.find("manifest.json");
    if (manifest_it == corpus.files_.end()) throw Error("corpus has no manifest.json");

    json manifest;
    try {
        manifest = json::parse(manifest_it->second);
    } catch (const json::parse_error& e) {
        throw Error(std::string("manifest.json: ") + e.what());
    }

    for (const auto& [name, file] : field(manifest, "models", "manifest").items()) {
        if (!file.is_string()) throw Error("manifest: models." + name + " must be a file name");
        const auto text = corpus.files_.find(file.get<std::string>());
        if (text == corpus.files_.end()) throw Error("manifest: model file '" + file.get<std::string>() + "' missing");
        try {
            corpus.models_.emplace(name, parse_model_file(text->second));
        } catch (const ParseError& e) {
            throw Error(text->first + ":" + e.what());
        }
    }

    auto model_ref = [&](const std::string& name, const std::string& where) -> const ModelFile& {
        auto it = corpus.models_.find(name);
        if (it == corpus.models_.end()) throw Error("manifest: " + where + " refers to unknown model '" + name + "'");
        return it->second;
    };

    for (const auto& entry : field(manifest, "case_studies", "manifest")) {
        CaseStudy study;
        study.name = string_field(entry, "name", "case study");
        study.description = entry.value("description", "");
        study.model_name = string_field(entry, "model", study.name);
        study.models.emplace(study.model_name, model_ref(study.model_name, study.name));

        for (const auto& c : field(entry, "checks", study.name)) {
            CorpusCheck check;
            check.name = string_field(c, "name", study.name + " check");
            const std::string where = study.name + "." + check.name;
            check.description = c.value("description", "");
            const std::string kind = string_field(c, "kind", where);
            const std::string subject = c.contains("subject") ? string_field(c, "subject", where) : study.model_name;
            const ModelFile& subject_model = model_ref(subject, where);
            study.models.emplace(subject, subject_model);

            if (kind == "equivalence") {
                EquivalenceCheck eq;
                eq.subject = subject;
                eq.peer = string_field(c, "peer", where);
                study.models.emplace(eq.peer, model_ref(eq.peer, where));
                try {
                    eq.relation = parse_equivalence(string_field(c, "relation", where));
                    if (c.contains("hide")) eq.hide = make_name_set(c.at("hide").get<std::vector<std::string>>());
                } catch (const std::exception& e) {
                    throw Error("manifest: " + where + ": " + e.what());
                }
                check.expected = bool_field(c, "expected", where);
                check.what = std::move(eq);
            } else if (kind == "property") {
                const std::string property = string_field(c, "property", where);
                const auto* declared = subject_model.property(property);
                if (!declared) throw Error("manifest: " + where + " names unknown property '" + property + "'");
                if (!declared->expected && !c.contains("expected"))
                    throw Error("manifest: " + where + " has no expected verdict");
                check.expected = c.contains("expected") ? bool_field(c, "expected", where) : *declared->expected;
                check.what = FormulaCheck{subject, property, declared->formula};
            } else if (kind == "reachable") {
                const std::string action = string_field(c, "action", where);
                if (!is_identifier(action) || action == "tau")
                    throw Error("manifest: " + where + " has invalid action '" + action + "'");
                check.expected = bool_field(c, "expected", where);
                check.what = ReachabilityCheck{subject, Action::observable(action)};
            } else {
                throw Error("manifest: " + where + " has unknown kind '" + kind + "'");
            }
            study.checks.push_back(std::move(check));
        }
        if (corpus.find(study.name)) throw Error("manifest: duplicate case study '" + study.name + "'");
        corpus.studies_.push_back(std::move(study));
    }
    return corpus;
}

Corpus Corpus::embedded() {
    static const Corpus corpus = from_files(detail::embedded_corpus_files());
    return corpus;
}

Corpus Corpus::load_directory(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw Error("not a directory: " + dir.string());
    std::map<std::string, std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const auto ext = entry.path().extension();
        if (ext != ".pa" && ext != ".json") continue;
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        files.emplace(entry.path().filename().string(), buf.str());
    }
    return from_files(std::move(files));
}

const CaseStudy* Corpus::find(std::string_view name) const {
    for (const auto& s : studies_)
        if (s.name == name) return &s;
    return nullptr;
}

const ModelFile& Corpus::model(std::string_view name) const {
    auto it = models_.find(name);
    if (it == models_.end()) throw Error("no corpus model named '" + std::string(name) + "'");
    return it->second;
}

namespace {

CaseStudy embedded_study(std::string_view name) {
    const Corpus corpus = Corpus::embedded();
    const auto* study = corpus.find(name);
    if (!study) throw Error("embedded corpus lacks case study '" + std::string(name) + "'");
    return *study;
}

}  // namespace

CaseStudy build_offline_chain(ChainVariant variant) {
    return embedded_study(variant == ChainVariant::chain1 ? "offline_chain1" : "offline_chain2");
}

CaseStudy build_double_spend() { return embedded_study("double_spend"); }

CaseStudy build_torn_transaction() { return embedded_study("torn_transaction"); }

CaseStudy build_producer_consumer_study() { return embedded_study("producer_consumer"); }

}  // namespace pacheck
