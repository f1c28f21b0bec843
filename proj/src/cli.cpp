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

#include "pacheck/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "pacheck/casestudies.hpp"
#include "pacheck/equivalence.hpp"
#include "pacheck/error.hpp"
#include "pacheck/hml.hpp"
#include "pacheck/io.hpp"
#include "pacheck/parser.hpp"
#include "pacheck/semantics.hpp"

namespace pacheck::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text, RunReport& report) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw Error("cannot write '" + path + "'");
    outf << text;
    if (!outf) throw Error("error while writing '" + path + "'");
    report.artifacts_written.push_back(path);
}

bool is_aut(const std::string& path) { return fs::path(path).extension() == ".aut"; }

// Parse errors are reported against the file they came from.
ModelFile load_model_file(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_model_file(text);
    } catch (const ParseError& e) {
        throw Error(path + ":" + e.what());
    }
}

struct LoadedModel {
    Lts lts;
    std::optional<ModelFile> model;
};

LoadedModel load_lts(const std::string& path, const std::vector<std::string>& hide, std::size_t max_states) {
    if (is_aut(path)) {
        if (!hide.empty()) throw Error("--hide needs a model file, not an .aut file");
        try {
            return {read_aut(read_file(path)), std::nullopt};
        } catch (const ParseError& e) {
            throw Error(path + ":" + e.what());
        }
    }
    ModelFile model = load_model_file(path);
    Lts lts = build_subject_lts(model, make_name_set(hide), max_states);
    return {std::move(lts), std::move(model)};
}

std::string render_lts(const Lts& lts, const std::string& format, const Partition* coloring = nullptr) {
    return format == "dot" ? write_dot(lts, coloring) : write_aut(lts);
}

void emit(const std::string& text, const std::string& output, std::ostream& out, RunReport& report) {
    if (output.empty() || output == "-")
        out << text;
    else
        write_file(output, text, report);
}

struct Options {
    std::size_t max_states = default_max_states;
    std::string model, other, kind = "strong", format = "aut", output, witness, formula, property;
    std::string case_study, corpus_dir, style = "spec";
    std::vector<std::string> hide;
    long state = 0;
    bool trace = false;
    bool all = false;
    int capacity = 2, producers = 1, consumers = 1;
};

void add_max_states(CLI::App* cmd, Options& o) {
    cmd->add_option("--max-states", o.max_states, "Abort exploration beyond this many states")
        ->check(CLI::PositiveNumber);
}

void add_hide(CLI::App* cmd, Options& o) {
    cmd->add_option("--hide", o.hide, "Actions of the (first) model to hide")->delimiter(',');
}

void add_kind(CLI::App* cmd, Options& o) {
    cmd->add_option("-k,--kind", o.kind, "Equivalence: strong or weak")
        ->check(CLI::IsMember({"strong", "weak"}));
}

int cmd_lts(const Options& o, std::ostream& out, RunReport& report) {
    const auto loaded = load_lts(o.model, o.hide, o.max_states);
    if (o.format == "summary") {
        out << "states: " << loaded.lts.num_states() << "\ntransitions: " << loaded.lts.transitions().size()
            << "\n";
    } else {
        emit(render_lts(loaded.lts, o.format), o.output, out, report);
    }
    if (!o.output.empty() && o.output != "-")
        out << loaded.lts.num_states() << " states, " << loaded.lts.transitions().size()
            << " transitions written to " << o.output << "\n";
    report.verdict = std::to_string(loaded.lts.num_states()) + " states";
    return success;
}

int cmd_bisim(const Options& o, std::ostream& out, RunReport& report, bool diff) {
    const auto a = load_lts(o.model, o.hide, o.max_states);
    const auto b = load_lts(o.other, {}, o.max_states);
    const auto kind = parse_equivalence(o.kind);
    const auto verdict = check_equivalence(a.lts, b.lts, kind);
    if (verdict.equivalent) {
        report.verdict = "equivalent";
        if (diff) {
            out << "no difference: the models are " << to_string(kind) << "ly equivalent\n";
            return input_error;
        }
        out << "equivalent (" << to_string(kind) << ")\n";
        if (!o.witness.empty()) {
            const Lts both = disjoint_union(a.lts, b.lts);
            write_file(o.witness, write_dot(both, &*verdict.witness_partition), report);
            out << "witness partition (" << verdict.witness_partition->size() << " blocks) written to "
                << o.witness << "\n";
        }
        return success;
    }
    report.verdict = "inequivalent";
    const std::string formula = render_formula(*verdict.distinguishing);
    if (diff) {
        out << formula << "\n";
    } else {
        out << "not equivalent (" << to_string(kind) << ")\n";
        out << "distinguishing formula: " << formula << "\n";
        out << "  holds in the initial state of " << o.model << ", fails in the initial state of " << o.other
            << "\n";
    }
    return negative;
}

int cmd_check(const Options& o, std::ostream& out, RunReport& report) {
    const auto loaded = load_lts(o.model, o.hide, o.max_states);
    if (o.state < 0 || static_cast<std::size_t>(o.state) >= loaded.lts.num_states())
        throw Error("--state out of range");
    const auto state = static_cast<StateId>(o.state);

    std::vector<DeclaredProperty> targets;
    if (!o.formula.empty()) {
        try {
            targets.push_back({"formula", parse_formula(o.formula), std::nullopt});
        } catch (const ParseError& e) {
            throw Error(std::string("--formula:") + e.what());
        }
    } else {
        if (!loaded.model) throw Error("--property and --all need a model file");
        if (o.all) {
            targets = loaded.model->properties;
            if (targets.empty()) throw Error(o.model + " declares no properties");
        } else {
            const auto* p = loaded.model->property(o.property);
            if (!p) throw Error(o.model + " declares no property '" + o.property + "'");
            targets.push_back(*p);
        }
    }

    HmlChecker checker(loaded.lts);
    bool all_as_expected = true;
    for (const auto& t : targets) {
        const auto result = checker.evaluate(state, t.formula);
        const bool ok = t.expected ? result.holds == *t.expected : result.holds;
        all_as_expected = all_as_expected && ok;
        out << t.name << ": " << (result.holds ? "holds" : "fails");
        if (t.expected) out << " (expected " << (*t.expected ? "true" : "false") << ")";
        out << "\n";
        if (o.trace || !ok)
            for (const auto& line : result.trace) out << "  " << line << "\n";
    }
    report.verdict = all_as_expected ? "holds" : "fails";
    return all_as_expected ? success : negative;
}

int cmd_minimize(const Options& o, std::ostream& out, RunReport& report) {
    const auto loaded = load_lts(o.model, o.hide, o.max_states);
    const Lts quotient = minimize_lts(loaded.lts, parse_equivalence(o.kind));
    emit(render_lts(quotient, o.format), o.output, out, report);
    if (!o.output.empty() && o.output != "-")
        out << loaded.lts.num_states() << " states reduced to " << quotient.num_states() << " ("
            << o.kind << "), written to " << o.output << "\n";
    report.verdict = std::to_string(quotient.num_states()) + " states";
    return success;
}

Corpus load_corpus(const Options& o) {
    return o.corpus_dir.empty() ? Corpus::embedded() : Corpus::load_directory(o.corpus_dir);
}

int cmd_corpus_run(const Options& o, std::ostream& out, RunReport& report) {
    const Corpus corpus = load_corpus(o);
    std::vector<const CaseStudy*> studies;
    if (o.case_study.empty()) {
        for (const auto& s : corpus.case_studies()) studies.push_back(&s);
    } else {
        const auto* s = corpus.find(o.case_study);
        if (!s) throw Error("no case study named '" + o.case_study + "'");
        studies.push_back(s);
    }
    std::size_t total = 0, passed = 0;
    for (const auto* study : studies) {
        for (const auto& r : run_case_study(*study, o.max_states)) {
            ++total;
            if (r.passed()) ++passed;
            out << "CHECK " << r.case_study << "/" << r.check << " expected=" << (r.expected ? "true" : "false")
                << " actual=" << (r.actual ? "true" : "false") << " " << (r.passed() ? "PASS" : "FAIL") << "\n";
            if (!r.passed() || o.trace) out << "  " << r.detail << "\n";
        }
    }
    out << passed << "/" << total << " checks passed\n";
    report.verdict = std::to_string(passed) + "/" + std::to_string(total);
    return passed == total ? success : negative;
}

int cmd_corpus_list(const Options& o, std::ostream& out, RunReport& report) {
    const Corpus corpus = load_corpus(o);
    for (const auto& s : corpus.case_studies()) {
        out << s.name << " (" << s.checks.size() << " checks): " << s.description << "\n";
        for (const auto& c : s.checks) out << "  " << c.name << ": " << c.description << "\n";
    }
    report.verdict = std::to_string(corpus.case_studies().size()) + " case studies";
    return success;
}

int cmd_corpus_export(const Options& o, std::ostream& out, RunReport& report) {
    const Corpus corpus = load_corpus(o);
    fs::create_directories(o.output);
    for (const auto& [name, text] : corpus.files()) write_file((fs::path(o.output) / name).string(), text, report);
    out << corpus.files().size() << " files written to " << o.output << "\n";
    report.verdict = "exported";
    return success;
}

int cmd_pc(const Options& o, std::ostream& out, RunReport& report) {
    const auto model = build_producer_consumer(o.capacity, o.producers, o.consumers, parse_buffer_style(o.style));
    emit(render_model_file(model), o.output, out, report);
    report.verdict = "generated";
    return success;
}

}  // namespace

RunReport run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    Options o;

    CLI::App app{"Bisimulation and Hennessy-Milner logic checker for process-algebra models", "pacheck"};
    app.require_subcommand(1);

    auto* lts = app.add_subcommand("lts", "Generate the LTS of a model");
    lts->add_option("MODEL", o.model, "Model file (.pa) or LTS (.aut)")->required();
    lts->add_option("-f,--format", o.format, "aut, dot or summary")
        ->check(CLI::IsMember({"aut", "dot", "summary"}));
    lts->add_option("-o,--output", o.output, "Output path (default stdout)");
    add_max_states(lts, o);
    add_hide(lts, o);

    auto* bisim = app.add_subcommand("bisim", "Decide strong or weak bisimilarity of two models");
    bisim->add_option("MODEL1", o.model)->required();
    bisim->add_option("MODEL2", o.other)->required();
    add_kind(bisim, o);
    bisim->add_option("--witness", o.witness, "Write the bisimulation partition as DOT when equivalent");
    add_max_states(bisim, o);
    add_hide(bisim, o);

    auto* diff = app.add_subcommand("diff", "Print a formula distinguishing two models");
    diff->add_option("MODEL1", o.model)->required();
    diff->add_option("MODEL2", o.other)->required();
    add_kind(diff, o);
    add_max_states(diff, o);
    add_hide(diff, o);

    auto* check = app.add_subcommand("check", "Evaluate a Hennessy-Milner formula");
    check->add_option("MODEL", o.model)->required();
    auto* formula_opt = check->add_option("--formula", o.formula, "Formula text");
    auto* property_opt = check->add_option("--property", o.property, "Property declared in the model file");
    auto* all_opt = check->add_flag("--all", o.all, "Every property declared in the model file");
    formula_opt->excludes(property_opt)->excludes(all_opt);
    property_opt->excludes(all_opt);
    check->add_option("--state", o.state, "State to evaluate in (default: initial)");
    check->add_flag("--trace", o.trace, "Print the explanation even when the verdict is as expected");
    add_max_states(check, o);
    add_hide(check, o);

    auto* minimize = app.add_subcommand("minimize", "Quotient a model by strong or weak bisimilarity");
    minimize->add_option("MODEL", o.model)->required();
    add_kind(minimize, o);
    minimize->add_option("-f,--format", o.format, "aut or dot")->check(CLI::IsMember({"aut", "dot"}));
    minimize->add_option("-o,--output", o.output, "Output path (default stdout)");
    add_max_states(minimize, o);
    add_hide(minimize, o);

    auto* corpus = app.add_subcommand("corpus", "Case-study corpus");
    corpus->require_subcommand(1);
    auto* corpus_run = corpus->add_subcommand("run", "Run case-study checks");
    corpus_run->add_option("NAME", o.case_study, "Case study (default: all)");
    corpus_run->add_option("--dir", o.corpus_dir, "Corpus directory (default: built-in corpus)");
    corpus_run->add_flag("--verbose", o.trace, "Print details of passing checks too");
    add_max_states(corpus_run, o);
    auto* corpus_list = corpus->add_subcommand("list", "List case studies and checks");
    corpus_list->add_option("--dir", o.corpus_dir);
    auto* corpus_export = corpus->add_subcommand("export", "Write the built-in corpus to a directory");
    corpus_export->add_option("DIR", o.output)->required();

    auto* pc = app.add_subcommand("pc", "Generate a producer-consumer model");
    pc->add_option("-n,--capacity", o.capacity)->check(CLI::PositiveNumber);
    pc->add_option("--producers", o.producers)->check(CLI::PositiveNumber);
    pc->add_option("--consumers", o.consumers)->check(CLI::PositiveNumber);
    pc->add_option("-s,--style", o.style, "spec, concurrent or pipeline")
        ->check(CLI::IsMember({"spec", "concurrent", "pipeline"}));
    pc->add_option("-o,--output", o.output, "Output path (default stdout)");

    auto finish = [&](int code) {
        report.exit_code = code;
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return report;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return finish(success);
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return finish(success);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (!app.get_subcommands().empty()) err << "run with --help for usage\n";
        report.verdict = "usage error";
        return finish(input_error);
    }

    try {
        int code = success;
        if (lts->parsed()) {
            report.command = "lts";
            code = cmd_lts(o, out, report);
        } else if (bisim->parsed()) {
            report.command = "bisim";
            code = cmd_bisim(o, out, report, false);
        } else if (diff->parsed()) {
            report.command = "diff";
            code = cmd_bisim(o, out, report, true);
        } else if (check->parsed()) {
            report.command = "check";
            if (o.formula.empty() && o.property.empty() && !o.all)
                throw Error("check needs --formula, --property or --all");
            code = cmd_check(o, out, report);
        } else if (minimize->parsed()) {
            report.command = "minimize";
            code = cmd_minimize(o, out, report);
        } else if (corpus_run->parsed()) {
            report.command = "corpus run";
            code = cmd_corpus_run(o, out, report);
        } else if (corpus_list->parsed()) {
            report.command = "corpus list";
            code = cmd_corpus_list(o, out, report);
        } else if (corpus_export->parsed()) {
            report.command = "corpus export";
            code = cmd_corpus_export(o, out, report);
        } else if (pc->parsed()) {
            report.command = "pc";
            code = cmd_pc(o, out, report);
        }
        return finish(code);
    } catch (const StateBoundExceeded& e) {
        err << "error: " << e.what() << "\n";
        report.verdict = "state bound exceeded";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        report.verdict = "error";
    }
    return finish(input_error);
}

}  // namespace pacheck::cli
