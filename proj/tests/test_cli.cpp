#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(TRICOVER_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("tricover_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenWritesOneGraph6Line) {
  const CliRun r = cli("gen --kind gnp --n 64 --theta 0.75 --seed 7 --out " + path("g.g6"));
  EXPECT_EQ(r.code, 0);
  const std::string text = slurp(path("g.g6"));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
  EXPECT_EQ(text.substr(0, 4), "~?@?");  // n = 64 needs the long header
}

TEST_F(Cli, SolveTauOnK4) {
  std::ofstream(path("k4.g6")) << "C~\n";
  const CliRun r = cli("solve --problem tau --in " + path("k4.g6"));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"][0]["value_upper"], 2);
  EXPECT_EQ(j["results"][0]["status"], "OPTIMAL");
  EXPECT_EQ(j["results"][0]["certificate_valid"], true);
  EXPECT_EQ(j["version"], "0.1.0");

  const CliRun o = cli("solve --problem tau --oracle --in " + path("k4.g6"));
  EXPECT_EQ(nlohmann::json::parse(o.out)["results"][0]["value_upper"], 2);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(cli("solve --bogus-flag").code, 2);
  EXPECT_EQ(cli("").code, 2);
  std::ofstream(path("bad.g6")) << "not-graph6!\n";
  EXPECT_EQ(cli("solve --in " + path("bad.g6")).code, 2);
  EXPECT_EQ(cli("gen --kind gnp --n 40 --p 0.5 --seed 3 --out " + path("big.g6")).code, 0);
  EXPECT_EQ(cli("solve --problem alpha1 --require-optimal --budget-nodes 2 --in " + path("big.g6")).code, 3);
  EXPECT_EQ(cli("solve --problem alpha1 --budget-nodes 2 --in " + path("big.g6")).code, 0);
  std::ofstream(path("empty.g6")) << "I????????\n";
  EXPECT_EQ(cli("verify density --in " + path("empty.g6") + " --p 0.5 --eps 0.5").code, 1);
}

TEST_F(Cli, VerifyTritauExhaustiveFive) {
  const CliRun r = cli("verify tritau --exhaustive-n 5 --k 1,2,3");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(j["checks"][0]["verdict"], "pass");
}

TEST_F(Cli, ConstructNorinOnFiveCycle) {
  std::ofstream(path("c5.g6")) << "Dhc\n";
  const CliRun r = cli("construct norin --in " + path("c5.g6") + " --c 2");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["report"]["verdict"], "pass");
  EXPECT_EQ(j["report"]["tau_g"]["value_lower"], 3);
}

TEST_F(Cli, SweepRowsAndSidecar) {
  const CliRun r = cli("sweep --n 64 --d min-ratio --eps 0.5 --seed-count 3 --out " + path("s.csv"));
  ASSERT_EQ(r.code, 0);
  const std::string csv = slurp(path("s.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);  // comment, header, 3 rows
  const auto side = nlohmann::json::parse(slurp(path("s.csv.json")));
  EXPECT_EQ(side["rows"], 3);
  EXPECT_EQ(side["version"], "0.1.0");

  const CliRun z = cli("sweep --n 16 --d 0.3 --seed-count 1 --out " + path("z.csv"));
  EXPECT_EQ(z.code, 0);
  EXPECT_NE(slurp(path("z.csv")).find(",true,"), std::string::npos);
}

TEST_F(Cli, SequentialRunsAreByteIdentical) {
  const std::string args = "construct egt --n 64 --d min-ratio --seed 5 --out ";
  ASSERT_EQ(cli(args + path("a.json")).code, 0);
  ASSERT_EQ(cli(args + path("b.json")).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(Cli, ParallelSweepMatchesSequentialRows) {
  const std::string grid = "sweep --n 32,48 --d 0.5,1.0 --seed-count 2 ";
  ASSERT_EQ(cli(grid + "--out " + path("seq.csv")).code, 0);
  ASSERT_EQ(cli(grid + "--parallel 3 --out " + path("par.csv")).code, 0);
  auto body = [](std::string s) { return s.substr(s.find('\n') + 1); };
  EXPECT_EQ(body(slurp(path("seq.csv"))), body(slurp(path("par.csv"))));
}
