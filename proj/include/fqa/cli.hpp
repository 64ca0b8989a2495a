// Copyright 2026 The fqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fqa/engine.hpp"
#include "fqa/error.hpp"
#include "fqa/rescaling.hpp"

namespace fqa::cli {

/// Bad command line. The message names the offending flag.
class UsageError : public Error {
  public:
    using Error::Error;
};

enum class Command { run, sweep, oracle };
enum class ProblemKind { maxcut, annni };

struct CliConfig {
    Command command = Command::run;
    ProblemKind problem = ProblemKind::maxcut;

    // MaxCut instance: a file, or a seeded random 3-regular graph.
    std::optional<std::string> graph_path;
    std::optional<std::size_t> generate_regular;
    std::uint64_t seed = 1;

    // ANNNI instance.
    std::size_t chain_length = 0;
    double kappa = 0.0;
    double g = 0.0;

    double dt = 0.0;
    std::size_t layers = 0;
    double max_substep = kDefaultMaxSubstep;
    RescaleSpec rescale;               // run
    std::vector<RescaleSpec> variants; // sweep
    std::size_t jobs = 1;

    std::string out; // optional for oracle
};

/// `args` excludes the program name. Throws UsageError.
[[nodiscard]] CliConfig parse_args(const std::vector<std::string> &args);

/// Runs the command; returns the process exit status. Diagnostics go to `err`.
int execute(const CliConfig &config, std::ostream &out, std::ostream &err);

/// Exact header of every trajectory CSV.
inline constexpr const char *kCsvHeader = "layer,beta,A,J,fdot,success_prob";

void write_trajectory_csv(std::ostream &os, const Trajectory &t);

/// Writes `content` to `path` through a sibling temp file and a rename, so
/// a failed write never leaves a partial file at `path`.
void write_file_atomic(const std::string &path, const std::string &content);

/// "r.csv" + "sine-a2-tf16" -> "r.sine-a2-tf16.csv".
[[nodiscard]] std::string variant_path(const std::string &out, const std::string &label);

} // namespace fqa::cli
