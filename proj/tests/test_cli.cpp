#include "qrealism/verify.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace qreal {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(QREALISM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream fields(line);
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qrealism-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, Figure2IdealRows) {
  ASSERT_EQ(run("figure2 --points 5 --out " + path("f2.csv")).exit_code, 0);
  const auto rows = csv(slurp(path("f2.csv")));
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"kind", "alpha", "V", "R_W", "R_P"}));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double w = std::stod(rows[r][3]), p = std::stod(rows[r][4]);
    if (rows[r][0] == "qdce") {
      EXPECT_NEAR(w, 1.0, 1e-9);
      EXPECT_NEAR(p, 0.0, 1e-9);
    } else if (std::stod(rows[r][2]) > 1 - 1e-9) {
      EXPECT_NEAR(w, 1.0, 1e-9);
      EXPECT_NEAR(p, 0.0, 1e-9);
    }
  }
}

TEST_F(Cli, Figure2NoisyHasErrorColumns) {
  ASSERT_EQ(run("figure2 --points 3 --noise 0.01 --samples 20 --seed 4 --out " + path("f2n.csv")).exit_code, 0);
  const auto rows = csv(slurp(path("f2n.csv")));
  ASSERT_EQ(rows.size(), 7u);
  ASSERT_EQ(rows[0].size(), 8u);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    EXPECT_GT(std::stod(rows[r][6]), 0.0);
    EXPECT_GT(std::stod(rows[r][7]), 0.0);
  }
}

TEST_F(Cli, Figure2ByteIdentical) {
  ASSERT_EQ(run("figure2 --points 9 --noise 0.01 --samples 10 --seed 3 --out " + path("a.csv")).exit_code, 0);
  ASSERT_EQ(run("figure2 --points 9 --noise 0.01 --samples 10 --seed 3 --out " + path("b.csv")).exit_code, 0);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  ASSERT_EQ(run("figure2 --points 9 --noise 0.01 --samples 10 --seed 4 --out " + path("c.csv")).exit_code, 0);
  EXPECT_NE(slurp(path("a.csv")), slurp(path("c.csv")));
}

TEST_F(Cli, Figure3ValuesAndDeterminism) {
  ASSERT_EQ(run("figure3 --kind qcre --alpha-points 4 --theta-points 6 --out " + path("a.csv")).exit_code, 0);
  ASSERT_EQ(run("figure3 --kind qcre --alpha-points 4 --theta-points 6 --out " + path("b.csv")).exit_code, 0);
  const std::string text = slurp(path("a.csv"));
  EXPECT_EQ(text, slurp(path("b.csv")));
  const auto rows = csv(text);
  ASSERT_EQ(rows.size(), 1u + 24u + 4u);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"p0", "0", "0", "1"}));
  // alpha = pi rows: flat pattern at 0.5.
  for (std::size_t r = 19; r <= 24; ++r) EXPECT_NEAR(std::stod(rows[r][3]), 0.5, 1e-12);
  // alpha = pi/3 visibility row.
  EXPECT_EQ(rows[26][0], "visibility");
  EXPECT_EQ(rows[26][2], "");
  EXPECT_NEAR(std::stod(rows[26][3]), 0.75, 1e-6);
}

TEST_F(Cli, SweepWithDegrees) {
  const auto r = run("sweep --kind qcre --alpha 90 --theta 0,60 --degrees --out -");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].size(), 9u);
  EXPECT_NEAR(std::stod(rows[1][2]), 0.18872187554086717, 1e-9);
  EXPECT_NEAR(std::stod(rows[2][5]), 0.625, 1e-9);
}

TEST_F(Cli, SweepNoisyUsesReportFormat) {
  const auto r = run("sweep --kind qdce --alpha-points 2 --noise 0.01 --samples 5 --seed 9 --out -");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 1u + 2u * 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"alpha", "theta", "quantity", "mean", "std", "samples", "seed"}));
  EXPECT_EQ(rows[1][5], "5");
  EXPECT_EQ(rows[1][6], "9");
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("bogus").exit_code, 2);
  EXPECT_EQ(run("figure2").exit_code, 2);
  EXPECT_EQ(run("figure3 --kind xyz --out -").exit_code, 2);
  EXPECT_EQ(run("sweep --kind qcre --alpha 4 --out -").exit_code, 2);
  EXPECT_EQ(run("figure2 --out /nonexistent-dir/x.csv").exit_code, 2);
  EXPECT_EQ(run("pulse compile --seq /nonexistent.seq").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST_F(Cli, ConfigFile) {
  {
    std::ofstream cfg(path("cfg.ini"));
    cfg << "[figure2]\npoints=3\n";
  }
  ASSERT_EQ(run("--config " + path("cfg.ini") + " figure2 --out " + path("f.csv")).exit_code, 0);
  EXPECT_EQ(csv(slurp(path("f.csv"))).size(), 7u);
}

TEST_F(Cli, PulseCompile) {
  const std::string seq = std::string(QREALISM_PULSE_DIR) + "/qcre.seq";
  const auto good = run("pulse compile --seq " + seq + " --check-against qcre --alpha 1.2 --theta 2.0");
  EXPECT_EQ(good.exit_code, 0);
  EXPECT_NE(good.out.find("equivalent=true"), std::string::npos);
  EXPECT_NE(good.out.find("within_budget=true"), std::string::npos);
  const auto bad = run("pulse compile --seq " + seq + " --check-against qdce --alpha 1.2 --theta 2.0");
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.out.find("equivalent=false"), std::string::npos);
  {
    std::ofstream broken(path("broken.seq"));
    broken << "ROT H Q 1\n";
  }
  EXPECT_EQ(run("pulse compile --seq " + path("broken.seq")).exit_code, 2);
}

TEST_F(Cli, VerifyPasses) {
  const auto r = run("verify --states 100");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
}

TEST_F(Cli, VerifyDetectsWrongBeamSplitter) {
  const auto r = run("verify --states 20 --fault-hadamard");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("[FAIL] stage states match closed-form kets"), std::string::npos) << r.out;
}

TEST(Verify, AllChecksPassInProcess) {
  VerifyOptions opts;
  opts.pulse_dir = QREALISM_PULSE_DIR;
  opts.random_states = 50;
  for (const auto& r : run_verification(opts)) EXPECT_TRUE(r.passed()) << r.name << ": " << r.detail;
}

}  // namespace
}  // namespace qreal
