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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pacheck/casestudies.hpp"
#include "pacheck/cli.hpp"
#include "pacheck/equivalence.hpp"
#include "pacheck/error.hpp"
#include "pacheck/hml.hpp"
#include "pacheck/io.hpp"
#include "pacheck/parser.hpp"
#include "pacheck/semantics.hpp"

namespace py = pybind11;
using namespace pacheck;

namespace {

py::tuple transition_tuple(const Lts& lts, const Transition& t) {
    return py::make_tuple(t.source, lts.action(t.label).name(), t.target);
}

py::list definitions_of(const ModelFile& m) {
    py::list out;
    for (const auto& d : m.env.definitions()) out.append(py::make_tuple(d.name, render_term(d.body)));
    return out;
}

py::list properties_of(const ModelFile& m) {
    py::list out;
    for (const auto& p : m.properties) {
        py::object expected = p.expected ? py::object(py::bool_(*p.expected)) : py::object(py::none());
        out.append(py::make_tuple(p.name, render_formula(p.formula), expected));
    }
    return out;
}

py::dict outcome_dict(const CheckOutcome& r) {
    py::dict d;
    d["case_study"] = r.case_study;
    d["check"] = r.check;
    d["expected"] = r.expected;
    d["actual"] = r.actual;
    d["passed"] = r.passed();
    d["detail"] = r.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(pacheck, m) {
    m.doc() = "Process algebra LTS generation, bisimulation checking and Hennessy-Milner model checking";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<StateBoundExceeded>(m, "StateBoundExceeded", error.ptr());
    py::register_exception<TermSizeExceeded>(m, "TermSizeExceeded", error.ptr());
    m.attr("DEFAULT_MAX_STATES") = default_max_states;

    py::class_<ModelFile>(m, "Model")
        .def_property_readonly("root", [](const ModelFile& f) { return f.env.root(); })
        .def_property_readonly("definitions", &definitions_of, "List of (name, body) pairs in declaration order")
        .def_property_readonly("properties", &properties_of, "List of (name, formula, expected) triples")
        .def("render", &render_model_file)
        .def("__repr__", [](const ModelFile& f) { return "<pacheck.Model root=" + f.env.root() + ">"; });

    py::class_<Lts>(m, "Lts")
        .def_property_readonly("num_states", &Lts::num_states)
        .def_property_readonly("initial", &Lts::initial)
        .def_property_readonly("alphabet",
                               [](const Lts& l) {
                                   std::vector<std::string> names;
                                   for (const auto& a : l.alphabet()) names.emplace_back(a.name());
                                   return names;
                               })
        .def_property_readonly("transitions",
                               [](const Lts& l) {
                                   py::list out;
                                   for (const auto& t : l.transitions()) out.append(transition_tuple(l, t));
                                   return out;
                               })
        .def("describe_state", &Lts::describe_state)
        .def("to_aut", &write_aut)
        .def("to_dot", [](const Lts& l) { return write_dot(l); })
        .def("__repr__", [](const Lts& l) {
            return "<pacheck.Lts states=" + std::to_string(l.num_states()) +
                   " transitions=" + std::to_string(l.transitions().size()) + ">";
        });

    m.def("parse_model", [](const std::string& text) { return parse_model_file(text); }, py::arg("text"));
    m.def("render_formula", [](const std::string& text) { return render_formula(parse_formula(text)); },
          py::arg("text"), "Canonical rendering of a formula");
    m.def(
        "build_lts",
        [](const ModelFile& model, const std::vector<std::string>& hide, std::size_t max_states) {
            return build_subject_lts(model, make_name_set(hide), max_states);
        },
        py::arg("model"), py::arg("hide") = std::vector<std::string>{}, py::arg("max_states") = default_max_states);
    m.def("read_aut", [](const std::string& text) { return read_aut(text); }, py::arg("text"));

    m.def(
        "check_equivalence",
        [](const Lts& a, const Lts& b, const std::string& kind) {
            const auto v = check_equivalence(a, b, parse_equivalence(kind));
            py::dict d;
            d["equivalent"] = v.equivalent;
            d["kind"] = std::string(to_string(v.kind));
            d["distinguishing"] =
                v.distinguishing ? py::object(py::str(render_formula(*v.distinguishing))) : py::object(py::none());
            d["blocks"] = v.witness_partition ? py::object(py::cast(v.witness_partition->blocks)) : py::object(py::none());
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("kind") = "strong");

    m.def(
        "evaluate",
        [](const Lts& lts, const std::string& formula, StateId state) {
            const auto r = evaluate_formula(lts, state, parse_formula(formula));
            py::dict d;
            d["holds"] = r.holds;
            d["trace"] = r.trace;
            py::list path;
            for (const auto& s : r.path) path.append(py::make_tuple(s.source, s.action.name(), s.target));
            d["path"] = path;
            return d;
        },
        py::arg("lts"), py::arg("formula"), py::arg("state") = 0);

    m.def(
        "minimize", [](const Lts& lts, const std::string& kind) { return minimize_lts(lts, parse_equivalence(kind)); },
        py::arg("lts"), py::arg("kind") = "strong");

    m.def(
        "producer_consumer",
        [](int capacity, int producers, int consumers, const std::string& style) {
            return build_producer_consumer(capacity, producers, consumers, parse_buffer_style(style));
        },
        py::arg("capacity"), py::arg("producers") = 1, py::arg("consumers") = 1, py::arg("style") = "spec");

    m.def(
        "corpus_model", [](const std::string& name) { return Corpus::embedded().model(name); }, py::arg("name"),
        "Parsed model from the built-in corpus");

    m.def(
        "run_corpus",
        [](const std::optional<std::string>& dir) {
            const Corpus corpus = dir ? Corpus::load_directory(*dir) : Corpus::embedded();
            py::list out;
            for (const auto& study : corpus.case_studies())
                for (const auto& r : run_case_study(study)) out.append(outcome_dict(r));
            return out;
        },
        py::arg("dir") = py::none());

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const auto report = cli::run(args, out, err);
            return py::make_tuple(report.exit_code, out.str(), err.str());
        },
        py::arg("args"), "Runs a command line; returns (exit_code, stdout, stderr)");
}
