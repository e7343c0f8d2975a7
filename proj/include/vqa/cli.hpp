// Copyright 2026 The vqa Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Command-line front end.
 *
 *     vqa solve      --problem F | --graph G [--p --guiding --eta --alpha --shots --seed
 *                    --optimizer --restarts --max-iters --tol --grid-points] [--out R.json]
 *     vqa landscape  --problem F | --graph G [--p --guiding ... --grid-points --target] [--out L.csv]
 *     vqa verify     [--n-max 6] [--trials 10] [--seed 0]
 *     vqa bruteforce --problem F | --graph G [--out B.json]
 *
 * Exit codes: 0 success, 1 verification failure, 2 configuration error,
 * 3 size cap exceeded, 4 numerical failure. Reports go to --out (written
 * through a temporary file and renamed) or standard output; diagnostics go
 * to standard error.
 */
#pragma once

#include "vqa/circuit.hpp"
#include "vqa/report.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vqa::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerifyFailed = 1,
    kConfigError = 2,
    kSizeLimit = 3,
    kNumericalFailure = 4,
};

struct LandscapeConfig {
    RunConfig run;
    unsigned points = 16;
    /// Column p_success reports this bitstring's probability instead of the optimal-set mass.
    std::optional<std::string> target;
};

struct VerifyConfig {
    unsigned n_max = 6;
    unsigned trials = 10;
    std::uint64_t seed = 0;
};

/// Replaceable pieces of the verify pipeline, so a deliberately broken build can be exercised.
struct VerifyHooks {
    std::function<Circuit(unsigned, std::span<const unsigned>, double)> ladder;
};

/// Loads the problem named in `cfg` as a minimization polynomial.
PseudoBooleanPoly load_problem(const RunConfig &cfg);

SolveReport solve(const RunConfig &cfg);

/// One CSV document, header included.
std::string landscape_csv(const LandscapeConfig &cfg);

int cmd_solve(const RunConfig &cfg, const std::filesystem::path &out, std::ostream &stdout_, std::ostream &stderr_);
int cmd_landscape(const LandscapeConfig &cfg, const std::filesystem::path &out, std::ostream &stdout_,
                  std::ostream &stderr_);
int cmd_verify(const VerifyConfig &cfg, std::ostream &stdout_, std::ostream &stderr_, const VerifyHooks &hooks = {});
int cmd_bruteforce(const RunConfig &cfg, const std::filesystem::path &out, std::ostream &stdout_,
                   std::ostream &stderr_);

/// Writes `contents` to a sibling temporary file, then renames it over `path`.
void write_atomically(const std::filesystem::path &path, const std::string &contents);

/// Parses `args` (without the program name) and dispatches to a subcommand.
int run(const std::vector<std::string> &args, std::ostream &stdout_, std::ostream &stderr_,
        const VerifyHooks &hooks = {});

} // namespace vqa::cli
