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

#include <iostream>
#include <string>
#include <vector>

#include "fqa/cli.hpp"

namespace {

constexpr const char *kUsage = R"(usage:
  fqa run    --problem maxcut|annni INSTANCE --dt DT --layers N --out FILE.csv
             [--rescale identity|sine|poly --a A --tf TF]
  fqa sweep  --problem maxcut|annni INSTANCE --dt DT --layers N --out FILE.csv
             --variant identity|sine:A:TF|poly:A:TF [--variant ...] [--jobs N]
  fqa oracle --problem maxcut|annni INSTANCE [--out FILE]

INSTANCE:
  maxcut: --graph FILE | --generate-regular V [--seed S]
  annni:  --L N --kappa K --g G

run and sweep also accept --max-substep H (default 0.005), the longest
product-formula step used for a non-diagonal problem Hamiltonian.
)";

} // namespace

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "-h" || args[0] == "--help") {
        std::cout << kUsage;
        return args.empty() ? 2 : 0;
    }
    fqa::cli::CliConfig config;
    try {
        config = fqa::cli::parse_args(args);
    } catch (const fqa::cli::UsageError &e) {
        std::cerr << "fqa: " << e.what() << "\n\n" << kUsage;
        return 2;
    }
    return fqa::cli::execute(config, std::cout, std::cerr);
}
