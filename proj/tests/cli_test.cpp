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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <gtest/gtest.h>

#include "fqa/cli.hpp"

namespace fqa::cli {
namespace {

namespace fs = std::filesystem;

std::vector<std::string> split(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;) {
        out.push_back(w);
    }
    return out;
}

std::string usage_message(const std::string &line) {
    try {
        (void)parse_args(split(line));
    } catch (const UsageError &e) {
        return e.what();
    }
    return {};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string &s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class TempDir : public ::testing::Test {
  protected:
    void SetUp() override {
        const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() /
               (std::string("fqa_cli_") + info->name() + "_" + std::to_string(::getpid()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path dir_;
};

TEST(ParseArgs, RescaledMaxCutRun) {
    const auto cfg = parse_args(split("run --problem maxcut --graph g.edges --dt 0.04 --layers 400 "
                                      "--rescale sine --a 2 --tf 16 --out r.csv"));
    EXPECT_EQ(cfg.command, Command::run);
    EXPECT_EQ(cfg.problem, ProblemKind::maxcut);
    EXPECT_EQ(cfg.graph_path, "g.edges");
    EXPECT_DOUBLE_EQ(cfg.dt, 0.04);
    EXPECT_EQ(cfg.layers, 400u);
    EXPECT_EQ(cfg.rescale.family, RescaleFamily::sine);
    EXPECT_DOUBLE_EQ(cfg.rescale.a, 2.0);
    EXPECT_DOUBLE_EQ(cfg.rescale.t_f, 16.0);
    EXPECT_EQ(cfg.out, "r.csv");
}

TEST(ParseArgs, AnnniRun) {
    const auto cfg = parse_args(split("run --problem annni --L 8 --kappa 0.5 --g 0.5 --dt 0.01 "
                                      "--layers 1000 --rescale identity --out r.csv"));
    EXPECT_EQ(cfg.problem, ProblemKind::annni);
    EXPECT_EQ(cfg.chain_length, 8u);
    EXPECT_DOUBLE_EQ(cfg.kappa, 0.5);
    EXPECT_DOUBLE_EQ(cfg.g, 0.5);
    EXPECT_EQ(cfg.layers, 1000u);
    EXPECT_EQ(cfg.rescale.family, RescaleFamily::identity);
}

TEST(ParseArgs, SweepVariants) {
    const auto cfg =
        parse_args(split("sweep --problem maxcut --generate-regular 10 --seed 4 --dt 0.04 "
                         "--layers 100 --variant identity --variant sine:2:4 --variant poly:3:6 "
                         "--jobs 2 --out s.csv"));
    EXPECT_EQ(cfg.command, Command::sweep);
    EXPECT_EQ(cfg.generate_regular, 10u);
    EXPECT_EQ(cfg.seed, 4u);
    EXPECT_EQ(cfg.jobs, 2u);
    ASSERT_EQ(cfg.variants.size(), 3u);
    EXPECT_EQ(cfg.variants[0].family, RescaleFamily::identity);
    EXPECT_EQ(cfg.variants[1].label(), "sine-a2-tf4");
    EXPECT_EQ(cfg.variants[2].label(), "poly-a3-tf6");
}

TEST(ParseArgs, Errors) {
    const std::string base = "run --problem maxcut --graph g --dt 0.04 --layers 10 --out r.csv";
    EXPECT_NE(usage_message(base + " --rescale sine --a 0 --tf 16").find("a must be positive"),
              std::string::npos);
    EXPECT_NE(usage_message(base + " --rescale sine --a 2 --tf -1").find("--tf"),
              std::string::npos);
    EXPECT_NE(usage_message(base + " --rescale sine --tf 16").find("--a"), std::string::npos);
    EXPECT_NE(usage_message(base + " --bogus 1").find("--bogus"), std::string::npos);
    EXPECT_NE(usage_message("run --problem maxcut --graph g --layers 10 --out r.csv").find("--dt"),
              std::string::npos);
    EXPECT_NE(usage_message("run --problem maxcut --graph g --dt abc --layers 10 --out r.csv")
                  .find("--dt"),
              std::string::npos);
    EXPECT_NE(usage_message("run --problem maxcut --graph g --dt 0 --layers 10 --out r.csv")
                  .find("--dt"),
              std::string::npos);
    EXPECT_NE(usage_message("run --problem maxcut --graph g --dt 0.1 --layers 0 --out r.csv")
                  .find("--layers"),
              std::string::npos);
    EXPECT_NE(usage_message("run --problem annni --L 3 --kappa 0 --g 1 --dt 0.1 --layers 1 "
                            "--out r.csv")
                  .find("--L"),
              std::string::npos);
    EXPECT_NE(usage_message("run --problem maxcut --dt 0.1 --layers 1 --out r.csv")
                  .find("--graph"),
              std::string::npos);
    EXPECT_FALSE(usage_message("sweep --problem maxcut --graph g --dt 0.1 --layers 1 --out r.csv "
                               "--variant sine:0:4")
                     .empty());
    EXPECT_FALSE(usage_message("").empty());
}

TEST(VariantPath, InsertsLabelBeforeExtension) {
    EXPECT_EQ(variant_path("r.csv", "sine-a2-tf16"), "r.sine-a2-tf16.csv");
    EXPECT_EQ(variant_path("out/r.csv", "identity"), "out/r.identity.csv");
}

using Execute = TempDir;

TEST_F(Execute, SeededRunWritesCsvAndSummary) {
    const auto csv = dir_ / "r.csv";
    const auto cfg = parse_args(split("run --problem maxcut --generate-regular 8 --seed 3 --dt 0.04 "
                                      "--layers 400 --rescale sine --a 2 --tf 16 --out " +
                                      csv.string()));
    std::ostringstream out;
    std::ostringstream err;
    ASSERT_EQ(execute(cfg, out, err), 0) << err.str();
    const auto text = slurp(csv);
    EXPECT_EQ(count_lines(text), 401u);
    EXPECT_EQ(text.substr(0, text.find('\n')), kCsvHeader);
    EXPECT_EQ(text.find("nan"), std::string::npos);
    const auto summary = slurp(csv.string() + ".summary");
    EXPECT_NE(summary.find("status=complete\n"), std::string::npos);
    EXPECT_NE(summary.find("final_J="), std::string::npos);
    EXPECT_NE(summary.find("gap="), std::string::npos);
    EXPECT_NE(summary.find("final_success_prob="), std::string::npos);
    EXPECT_NE(summary.find("wall_time_s="), std::string::npos);

    ASSERT_EQ(execute(cfg, out, err), 0);
    EXPECT_EQ(slurp(csv), text);
    EXPECT_FALSE(fs::exists(csv.string() + ".tmp"));
}

TEST_F(Execute, AnnniLeavesSuccessColumnEmpty) {
    const auto csv = dir_ / "a.csv";
    const auto cfg = parse_args(split("run --problem annni --L 4 --kappa 0.5 --g 0.5 --dt 0.01 "
                                      "--layers 5 --out " +
                                      csv.string()));
    std::ostringstream out;
    std::ostringstream err;
    ASSERT_EQ(execute(cfg, out, err), 0) << err.str();
    std::istringstream lines(slurp(csv));
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
        EXPECT_EQ(line.back(), ',');
    }
}

TEST_F(Execute, TruncatedRunRecordsFailure) {
    const auto csv = dir_ / "p.csv";
    const auto cfg = parse_args(split("run --problem maxcut --generate-regular 6 --seed 1 --dt 0.04 "
                                      "--layers 400 --rescale poly --a 2 --tf 16 --out " +
                                      csv.string()));
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_NE(execute(cfg, out, err), 0);
    EXPECT_EQ(count_lines(slurp(csv)), 230u);
    const auto summary = slurp(csv.string() + ".summary");
    EXPECT_NE(summary.find("status=truncated\n"), std::string::npos);
    EXPECT_NE(summary.find("failure_layer=230\n"), std::string::npos);
    EXPECT_NE(err.str().find("230"), std::string::npos);
}

TEST_F(Execute, SweepWritesOneCsvPerVariant) {
    const auto csv = dir_ / "s.csv";
    const auto cfg = parse_args(split("sweep --problem maxcut --generate-regular 6 --seed 2 "
                                      "--dt 0.04 --layers 20 --variant identity --variant "
                                      "sine:2:0.8 --jobs 2 --out " +
                                      csv.string()));
    std::ostringstream out;
    std::ostringstream err;
    ASSERT_EQ(execute(cfg, out, err), 0) << err.str();
    for (const char *label : {"identity", "sine-a2-tf0.8"}) {
        const auto path = variant_path(csv.string(), label);
        EXPECT_EQ(count_lines(slurp(path)), 21u) << path;
        EXPECT_TRUE(fs::exists(path + ".summary"));
    }
}

TEST_F(Execute, OracleOnTriangle) {
    const auto graph = dir_ / "k3.edges";
    std::ofstream(graph) << "3\n0 1 1\n1 2 1\n0 2 1\n";
    const auto cfg = parse_args(split("oracle --problem maxcut --graph " + graph.string()));
    std::ostringstream out;
    std::ostringstream err;
    ASSERT_EQ(execute(cfg, out, err), 0) << err.str();
    EXPECT_NE(out.str().find("max_cut=2\n"), std::string::npos) << out.str();
    EXPECT_NE(out.str().find("num_solutions=6\n"), std::string::npos);
    EXPECT_NE(out.str().find("ground_energy=-2"), std::string::npos);
}

TEST_F(Execute, UnwritableOutputFailsWithoutPartialFile) {
    const auto csv = dir_ / "missing" / "r.csv";
    const auto cfg = parse_args(split("run --problem maxcut --generate-regular 6 --seed 1 --dt 0.04 "
                                      "--layers 10 --out " +
                                      csv.string()));
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_NE(execute(cfg, out, err), 0);
    EXPECT_FALSE(err.str().empty());
    EXPECT_FALSE(fs::exists(csv));
    EXPECT_FALSE(fs::exists(csv.string() + ".tmp"));
}

TEST_F(Execute, MissingGraphFileFails) {
    const auto cfg = parse_args(split("run --problem maxcut --graph " + (dir_ / "nope").string() +
                                      " --dt 0.04 --layers 10 --out " + (dir_ / "r.csv").string()));
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_NE(execute(cfg, out, err), 0);
    EXPECT_FALSE(fs::exists(dir_ / "r.csv"));
}

using Binary = TempDir;

TEST_F(Binary, ExitCodes) {
    const std::string exe = FQA_CLI_PATH;
    const auto csv = dir_ / "b.csv";
    const auto quiet = " >/dev/null 2>&1";
    const int ok = std::system((exe + " run --problem maxcut --generate-regular 6 --dt 0.04 "
                                      "--layers 10 --out " +
                                csv.string() + quiet)
                                   .c_str());
    EXPECT_EQ(WEXITSTATUS(ok), 0);
    EXPECT_EQ(count_lines(slurp(csv)), 11u);
    const int usage = std::system((exe + " run --problem maxcut --rescale sine --a 0" + quiet).c_str());
    EXPECT_EQ(WEXITSTATUS(usage), 2);
}

} // namespace
} // namespace fqa::cli
