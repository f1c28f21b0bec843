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

#include <iosfwd>
#include <string>
#include <vector>

namespace pacheck::cli {

/// Exit code contract shared by all subcommands.
enum ExitCode : int {
    success = 0,       // property holds, models equivalent, command done
    negative = 1,      // property fails, models inequivalent, corpus mismatch
    input_error = 2,   // usage, parse, I/O or state-bound error
};

struct RunReport {
    std::string command;
    std::string verdict;
    std::vector<std::string> artifacts_written;
    double elapsed_ms = 0.0;
    int exit_code = success;
};

/// Runs one command line (without the program name). Never throws; every
/// failure is reported on `err` and mapped to exit code 2.
RunReport run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pacheck::cli
