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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pacheck/cli.hpp"
#include "pacheck/equivalence.hpp"
#include "pacheck/hml.hpp"
#include "pacheck/io.hpp"
#include "pacheck/parser.hpp"

using namespace pacheck;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    cli::RunReport report;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    auto report = cli::run(args, out, err);
    return {report.exit_code, out.str(), err.str(), report};
}

std::string corpus(const std::string& file) { return (fs::path(PACHECK_CORPUS_DIR) / file).string(); }

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::current_path() / "cli_scratch";
    fs::create_directories(dir);
    return dir / name;
}

std::string write_scratch(const std::string& name, const std::string& text) {
    const auto p = scratch(name);
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("bisim verdicts and exit codes") {
    auto r = run({"bisim", corpus("pc_conc.pa"), corpus("pc_spec.pa")});
    CHECK(r.code == 0);
    CHECK(r.out == "equivalent (strong)\n");
    CHECK(r.report.command == "bisim");

    r = run({"bisim", corpus("pc_pipe.pa"), corpus("pc_spec.pa"), "-k", "strong"});
    CHECK(r.code == 1);
    CHECK(r.out.rfind("not equivalent (strong)\ndistinguishing formula: ", 0) == 0);

    r = run({"bisim", corpus("pc_pipe.pa"), corpus("pc_spec.pa"), "--kind", "weak"});
    CHECK(r.code == 0);
    CHECK(r.out == "equivalent (weak)\n");
}

TEST_CASE("bisim formula is genuinely distinguishing") {
    const auto r = run({"diff", corpus("pc_pipe.pa"), corpus("pc_spec.pa")});
    REQUIRE(r.code == 1);
    const auto text = r.out.substr(0, r.out.size() - 1);
    const auto f = parse_formula(text);
    const auto pipe = read_aut(run({"lts", corpus("pc_pipe.pa")}).out);
    const auto spec = read_aut(run({"lts", corpus("pc_spec.pa")}).out);
    CHECK(evaluate_formula(pipe, 0, f).holds);
    CHECK_FALSE(evaluate_formula(spec, 0, f).holds);
}

TEST_CASE("diff on equivalent models is an input error") {
    const auto r = run({"diff", corpus("pc_conc.pa"), corpus("pc_spec.pa")});
    CHECK(r.code == 2);
    CHECK(r.out.find("no difference") != std::string::npos);
}

TEST_CASE("lts output formats") {
    auto r = run({"lts", corpus("pc_spec.pa"), "--format", "aut"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("des (0, 4, 3)\n", 0) == 0);

    r = run({"lts", corpus("pc_conc.pa"), "-f", "summary"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("states: 4\ntransitions: 8", 0) == 0);

    r = run({"lts", corpus("pc_spec.pa"), "-f", "dot"});
    CHECK(r.out.rfind("digraph lts {", 0) == 0);

    const auto path = scratch("spec.aut");
    fs::remove(path);
    r = run({"lts", corpus("pc_spec.pa"), "-o", path.string()});
    CHECK(r.code == 0);
    CHECK(slurp(path).rfind("des (0, 4, 3)", 0) == 0);
    CHECK(r.report.artifacts_written == std::vector<std::string>{path.string()});

    // .aut inputs are accepted wherever a model is.
    r = run({"bisim", path.string(), corpus("pc_conc.pa")});
    CHECK(r.code == 0);
}

TEST_CASE("hiding from the command line") {
    auto r = run({"lts", corpus("pc_spec.pa"), "--hide", "deposit,withdraw", "-f", "summary"});
    CHECK(r.code == 0);
    r = run({"bisim", corpus("pc_spec.pa"), corpus("pc_spec.pa"), "--hide", "withdraw"});
    CHECK(r.code == 1);
    r = run({"lts", corpus("pc_spec.pa"), "--hide", "tau"});
    CHECK(r.code == 2);
}

TEST_CASE("input errors exit with 2") {
    SUBCASE("parse error with position") {
        const auto bad = write_scratch("bad.pa", "A = a . ;\n");
        const auto r = run({"lts", bad});
        CHECK(r.code == 2);
        CHECK(r.err.find("bad.pa:1:") != std::string::npos);
    }
    SUBCASE("missing file") {
        const auto r = run({"lts", "/nonexistent/model.pa"});
        CHECK(r.code == 2);
        CHECK(r.err.rfind("error: ", 0) == 0);
    }
    SUBCASE("unknown subcommand") { CHECK(run({"frobnicate"}).code == 2); }
    SUBCASE("unknown flag") { CHECK(run({"lts", corpus("pc_spec.pa"), "--bogus"}).code == 2); }
    SUBCASE("bad kind") { CHECK(run({"bisim", corpus("pc_spec.pa"), corpus("pc_spec.pa"), "-k", "branching"}).code == 2); }
    SUBCASE("missing argument") { CHECK(run({"bisim", corpus("pc_spec.pa")}).code == 2); }
    SUBCASE("no command") { CHECK(run({}).code == 2); }
    SUBCASE("bad formula") {
        const auto r = run({"check", corpus("pc_spec.pa"), "--formula", "<a tt"});
        CHECK(r.code == 2);
        CHECK(r.err.find("--formula:1:") != std::string::npos);
    }
    SUBCASE("state out of range") {
        CHECK(run({"check", corpus("pc_spec.pa"), "--formula", "tt", "--state", "3"}).code == 2);
    }
    SUBCASE("unknown property") { CHECK(run({"check", corpus("pc_spec.pa"), "--property", "nope"}).code == 2); }
    SUBCASE("malformed aut") {
        const auto bad = write_scratch("bad.aut", "des (0, 1, 1)\n");
        CHECK(run({"lts", bad}).code == 2);
    }
}

TEST_CASE("help exits with 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bisim") != std::string::npos);
}

TEST_CASE("state bound") {
    const auto unbounded = write_scratch("grow.pa", "P = a . (P ||[] P);\n");
    auto r = run({"lts", unbounded, "--max-states", "50"});
    CHECK(r.code == 2);
    CHECK(r.report.verdict == "state bound exceeded");
    r = run({"lts", corpus("wallet_impl.pa"), "--max-states", "39"});
    CHECK(r.code == 2);
    r = run({"lts", corpus("wallet_impl.pa"), "--max-states", "40", "-f", "summary"});
    CHECK(r.code == 0);
}

TEST_CASE("check") {
    auto r = run({"check", corpus("pc_spec.pa"), "--formula", "<deposit> tt"});
    CHECK(r.code == 0);
    CHECK(r.out == "formula: holds\n");

    r = run({"check", corpus("pc_spec.pa"), "--formula", "<withdraw> tt"});
    CHECK(r.code == 1);
    CHECK(r.out.rfind("formula: fails\n", 0) == 0);
    CHECK(r.out.find("no -withdraw-> successors") != std::string::npos);

    r = run({"check", corpus("pc_spec.pa"), "--formula", "<withdraw> tt", "--state", "1"});
    CHECK(r.code == 0);

    r = run({"check", corpus("pc_spec.pa"), "--property", "bounded"});
    CHECK(r.code == 0);
    CHECK(r.out == "bounded: holds (expected true)\n");

    r = run({"check", corpus("double_spend.pa"), "--all"});
    CHECK(r.code == 0);

    // A property expected to be false passes when it fails.
    const auto neg = write_scratch("neg.pa", "A = a . 0;\nproperty p expected false : <b> tt;\n");
    r = run({"check", neg, "--all"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("p: fails (expected false)\n", 0) == 0);
}

TEST_CASE("minimize") {
    const auto path = scratch("conc_min.aut");
    fs::remove(path);
    auto r = run({"minimize", corpus("pc_conc.pa"), "-o", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("4 states reduced to 3") != std::string::npos);
    const Lts quotient = read_aut(slurp(path));
    CHECK(quotient.num_states() == 3);

    r = run({"minimize", corpus("pc_pipe.pa"), "-k", "weak"});
    CHECK(r.code == 0);
    CHECK(read_aut(r.out).num_states() == 3);
}

TEST_CASE("witness partition") {
    const auto path = scratch("witness.dot");
    fs::remove(path);
    auto r = run({"bisim", corpus("pc_conc.pa"), corpus("pc_spec.pa"), "--witness", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("3 blocks") != std::string::npos);
    const auto dot = slurp(path);
    CHECK(dot.rfind("digraph lts {", 0) == 0);
    CHECK(dot.find("(B2)") != std::string::npos);
    CHECK(dot.find("(B3)") == std::string::npos);
}

TEST_CASE("corpus commands") {
    auto r = run({"corpus", "run"});
    CHECK(r.code == 0);
    CHECK(r.out.find("16/16 checks passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    r = run({"corpus", "run", "torn_transaction"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3/3 checks passed") != std::string::npos);
    CHECK(run({"corpus", "run", "nope"}).code == 2);

    r = run({"corpus", "list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("double_spend (3 checks)") != std::string::npos);

    const auto dir = scratch("exported");
    fs::remove_all(dir);
    r = run({"corpus", "export", dir.string()});
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK(run({"corpus", "run", "--dir", dir.string()}).code == 0);

    // A broken expectation turns into exit code 1.
    std::string manifest = slurp(dir / "manifest.json");
    const auto at = manifest.find("\"expected\": true");
    REQUIRE(at != std::string::npos);
    manifest.replace(at, 16, "\"expected\": false");
    std::ofstream(dir / "manifest.json") << manifest;
    r = run({"corpus", "run", "--dir", dir.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("pc generator") {
    auto r = run({"pc", "-n", "3", "-s", "pipeline"});
    CHECK(r.code == 0);
    const auto path = write_scratch("pipe3.pa", r.out);
    r = run({"pc", "-n", "3"});
    const auto spec = write_scratch("spec3.pa", r.out);
    CHECK(run({"bisim", path, spec, "-k", "weak"}).code == 0);
    CHECK(run({"bisim", path, spec}).code == 1);
    CHECK(run({"pc", "-n", "0"}).code == 2);
    CHECK(run({"pc", "-s", "ring"}).code == 2);
}

TEST_CASE("outputs are deterministic") {
    const std::vector<std::string> args{"bisim", corpus("wallet_mutated.pa"), corpus("wallet_spec.pa"), "-k", "weak"};
    const auto first = run(args);
    CHECK(first.code == 1);
    for (int i = 0; i < 3; ++i) CHECK(run(args).out == first.out);
    CHECK(run({"lts", corpus("torn_transaction.pa")}).out == run({"lts", corpus("torn_transaction.pa")}).out);
}
