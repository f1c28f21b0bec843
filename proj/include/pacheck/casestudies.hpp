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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pacheck/equivalence.hpp"
#include "pacheck/formula.hpp"
#include "pacheck/parser.hpp"
#include "pacheck/semantics.hpp"

namespace pacheck {

enum class BufferStyle { spec, concurrent, pipeline };

std::string_view to_string(BufferStyle style) noexcept;
BufferStyle parse_buffer_style(std::string_view text);

/// Producer-consumer system over a buffer of `capacity` positions.
///
///   spec        counter ProdCons_i_n, i = 0..n (producers and consumers are
///               not observable individually, so their counts do not matter)
///   concurrent  n independent one-slot buffers interleaved under ||[]
///   pipeline    n one-slot buffers chained by hidden pass actions
///
/// Producers and consumers are interleaved among themselves and synchronize
/// with the buffer on deposit and withdraw respectively. Throws
/// std::invalid_argument if any count is below 1.
ModelFile build_producer_consumer(int capacity, int producers, int consumers, BufferStyle style);

struct EquivalenceCheck {
    std::string subject;
    std::string peer;
    Equivalence relation = Equivalence::strong;
    /// Actions of the subject hidden before comparison.
    NameSet hide;
};

struct FormulaCheck {
    std::string subject;
    std::string property;
    HmlFormula formula;
};

struct ReachabilityCheck {
    std::string subject;
    Action action = Action::tau();
};

struct CorpusCheck {
    std::string name;
    std::string description;
    std::variant<EquivalenceCheck, FormulaCheck, ReachabilityCheck> what;
    bool expected = true;
};

struct CaseStudy {
    std::string name;
    std::string description;
    /// Main model of the study; checks default to it as subject.
    std::string model_name;
    /// Every model referenced by the checks, by corpus name.
    std::map<std::string, ModelFile> models;
    std::vector<CorpusCheck> checks;

    const ModelFile& model() const { return models.at(model_name); }
};

struct CheckOutcome {
    std::string case_study;
    std::string check;
    bool expected = false;
    bool actual = false;
    /// Distinguishing formula, failing trace summary, or similar.
    std::string detail;

    bool passed() const noexcept { return expected == actual; }
};

/// Runs every declared check in order.
std::vector<CheckOutcome> run_case_study(const CaseStudy& study,
                                         std::size_t max_states = default_max_states);

/// Builds the LTS a check refers to: the subject model with the given
/// actions hidden at the top.
Lts build_subject_lts(const ModelFile& model, const NameSet& hide = {},
                      std::size_t max_states = default_max_states);

/// Model files plus a JSON manifest (`manifest.json`) naming the models and
/// listing each case study's checks with their expected outcomes.
class Corpus {
public:
    /// The corpus compiled into the library.
    static Corpus embedded();
    static Corpus load_directory(const std::filesystem::path& dir);
    /// File name to contents; must include manifest.json. Throws Error or
    /// ParseError (prefixed with the file name) on malformed input.
    static Corpus from_files(std::map<std::string, std::string> files);

    const std::vector<CaseStudy>& case_studies() const noexcept { return studies_; }
    const CaseStudy* find(std::string_view name) const;
    const std::map<std::string, std::string>& files() const noexcept { return files_; }
    /// Parsed model by corpus name.
    const ModelFile& model(std::string_view name) const;

private:
    std::map<std::string, std::string> files_;
    std::map<std::string, ModelFile, std::less<>> models_;
    std::vector<CaseStudy> studies_;
};

enum class ChainVariant { chain1, chain2 };

/// Offline transaction chains S -> A -> R and S -> A ... B -> R. A ledger
/// receives the transaction histories of S and R on reconnection and blames
/// a device only when both histories name the same intermediary.
CaseStudy build_offline_chain(ChainVariant variant);
/// Payee wallet rejecting replayed token identities.
CaseStudy build_double_spend();
/// Transfer over a lossy channel with a refund handshake.
CaseStudy build_torn_transaction();
/// The two-position producer-consumer system and its two implementations.
CaseStudy build_producer_consumer_study();

}  // namespace pacheck
