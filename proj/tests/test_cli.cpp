#include "fullow/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fullow::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fullow_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SolveWritesHistory) {
  const auto hist = dir_ / "h.csv";
  const auto r = run({"solve", "rosenbrock", "smooth", "fullow", "--seed", "1", "--history", hist.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("best_f"), std::string::npos);
  EXPECT_NE(r.out.find("evaluations  4000 / 4000"), std::string::npos);
  ASSERT_TRUE(fs::exists(hist));
  EXPECT_EQ(slurp(hist).rfind("# schema=1\neval_index,best_f\n1,24.19999", 0), 0u);
}

TEST_F(CliTest, SolveDefaultsToOutputDirectoryFromEnvironment) {
  ::setenv("FULLOW_OUTPUT_DIR", dir_.c_str(), 1);
  const auto r = run({"solve", "rosenbrock", "piecewise", "pds", "--budget", "50"});
  ::unsetenv("FULLOW_OUTPUT_DIR");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "histories" / "rosenbrock__piecewise__0__pds__0.csv"));
}

TEST_F(CliTest, SolveErrors) {
  EXPECT_NE(run({"solve", "rosenbrock", "smooth", "nomad", "--out", dir_.string()}).code, 0);
  EXPECT_NE(run({"solve", "nonexistent", "smooth", "fullow", "--out", dir_.string()}).code, 0);
  const auto small = run({"solve", "watson_n9_s1", "smooth", "fullow", "--budget", "10", "--out", dir_.string()});
  EXPECT_NE(small.code, 0);
  EXPECT_NE(small.err.find("budget too small"), std::string::npos);
  EXPECT_NE(run({"solve", "rosenbrock", "smooth", "fullow", "--set", "bogus=1", "--out", dir_.string()}).code, 0);
  EXPECT_NE(run({"frobnicate"}).code, 0);
}

TEST_F(CliTest, BenchIsByteIdenticalAcrossRunsAndWorkerCounts) {
  const auto a = dir_ / "a";
  const auto b = dir_ / "b";
  auto r1 = run({"bench", "--suite", "scalable:4", "--budget-multiplier", "25", "--seed", "3", "--out", a.string()});
  auto r2 = run({"bench", "--suite", "scalable:4", "--budget-multiplier", "25", "--seed", "3", "--workers", "4",
                 "--out", b.string()});
  ASSERT_EQ(r1.code, 0) << r1.err;
  ASSERT_EQ(r2.code, 0) << r2.err;
  const auto csv = slurp(a / "results.csv");
  EXPECT_EQ(csv, slurp(b / "results.csv"));
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  EXPECT_EQ(lines, 2u + 12u * 3u);
  for (const auto& entry : fs::directory_iterator(a / "histories"))
    EXPECT_EQ(slurp(entry.path()), slurp(b / "histories" / entry.path().filename()));
}

TEST_F(CliTest, NoisyBenchRecordsNoiseLevel) {
  const auto out = dir_ / "noisy";
  const auto r = run({"bench", "--suite", "noisy:additive-stochastic", "--solvers", "pds", "--kind", "data",
                      "--budget-multiplier", "2", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(out / "results.csv");
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_NE(line.find(",additive-stochastic,0.001,pds,"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 53);
}

TEST_F(CliTest, ProfileFromBenchOutput) {
  const auto bench = dir_ / "bench";
  ASSERT_EQ(run({"bench", "--suite", "scalable:4", "--budget-multiplier", "50", "--out", bench.string()}).code, 0);
  const auto prof = dir_ / "prof";
  const auto r = run({"profile", (bench / "results.csv").string(), "--tau", "0.01", "--out", prof.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_TRUE(fs::exists(prof / "performance_tau0.01.csv"));
  const auto j = nlohmann::json::parse(slurp(prof / "performance_tau0.01.json"));
  EXPECT_EQ(j["problems"], 12);
  ASSERT_EQ(j["solvers"].size(), 3u);
  for (const auto& s : j["solvers"]) {
    EXPECT_GE(s["value_at_2"].get<double>(), s["value_at_1"].get<double>());
    EXPECT_LE(s["solved_fraction"].get<double>(), 1.0);
  }
  const auto csv = slurp(prof / "performance_tau0.01.csv");
  EXPECT_EQ(csv.rfind("# schema=1\nalpha,solver,value\n", 0), 0u);

  // Same inputs, same bytes.
  const auto prof2 = dir_ / "prof2";
  ASSERT_EQ(run({"profile", (bench / "results.csv").string(), "--tau", "0.01", "--out", prof2.string()}).code, 0);
  EXPECT_EQ(csv, slurp(prof2 / "performance_tau0.01.csv"));

  const auto d = run({"profile", (bench / "results.csv").string(), "--kind", "data", "--out", prof.string()});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_TRUE(fs::exists(prof / "data_tau0.01.json"));
  EXPECT_TRUE(fs::exists(prof / "data_tau1e-05.json"));
}

TEST_F(CliTest, ProfileErrors) {
  const auto bench = dir_ / "bench";
  ASSERT_EQ(run({"bench", "--suite", "scalable:4", "--solvers", "pds", "--budget-multiplier", "5", "--out",
                 bench.string()})
                .code,
            0);
  EXPECT_EQ(run({"profile", (bench / "results.csv").string(), "--tau", "1.5", "--out", dir_.string()}).code, 2);
  EXPECT_EQ(run({"profile", (bench / "results.csv").string(), "--tau", "0", "--out", dir_.string()}).code, 2);
  std::ofstream(dir_ / "bad.csv") << "problem,solver\nx,y\n";
  EXPECT_NE(run({"profile", (dir_ / "bad.csv").string(), "--out", dir_.string()}).code, 0);
  EXPECT_NE(run({"profile", (dir_ / "missing.csv").string(), "--out", dir_.string()}).code, 0);
}
