#include "cli.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tennenbaum;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tennenbaum_cli_test_" + name);
}

}  // namespace

TEST(Cli, ProveSeven) {
  const Result r = run({"prove", "7"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "irrational by halved descent; 7·(7−9) = −14 < 0; parity lemma holds\n");
}

TEST(Cli, ProvePerfectSquarePrintsWitnesses) {
  const Result r = run({"prove", "9"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("perfect square"), std::string::npos);
  EXPECT_NE(r.out.find("witness (3,1) defect 0"), std::string::npos);
  EXPECT_NE(r.out.find("witness (9,3) defect 0"), std::string::npos);
}

TEST(Cli, ProveEleven) {
  const Result r = run({"prove", "11"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("11·(11−9) = 22 ≥ 0"), std::string::npos);
}

TEST(Cli, DescendFive) {
  const Result r = run({"descend", "5", "29", "13"});
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int steps = 0;
  std::string last;
  while (std::getline(lines, line)) {
    if (line.rfind("step ", 0) == 0) ++steps;
    last = line;
  }
  EXPECT_EQ(steps, 7);
  EXPECT_EQ(last, "stop at (2,0) — q reached zero");
  EXPECT_NE(r.out.find("step 1: (29,13) -> (18,8)  defect 4 -> -4"), std::string::npos);
}

TEST(Cli, DescendVariantOverride) {
  const Result full = run({"descend", "3", "19", "11", "--variant", "full", "--max-steps", "1"});
  EXPECT_EQ(full.status, 0);
  EXPECT_NE(full.out.find("(19,11) -> (14,8)  defect 2 -> -4"), std::string::npos);
  EXPECT_NE(full.out.find("max steps reached"), std::string::npos);

  const Result halved = run({"descend", "3", "19", "11"});
  EXPECT_NE(halved.out.find("(19,11) -> (7,4)"), std::string::npos);
  EXPECT_NE(halved.out.find("precondition failed"), std::string::npos);
}

TEST(Cli, DescendUnsupportedNeedsExplicitVariant) {
  const Result r = run({"descend", "11", "10", "3"});
  EXPECT_EQ(r.status, cli::kPrecondition);
  EXPECT_NE(r.err.find("11·(11−9) = 22"), std::string::npos);
  EXPECT_EQ(run({"descend", "11", "10", "3", "--variant", "full"}).status, 0);
  EXPECT_EQ(run({"descend", "11", "10", "3", "--variant", "sideways"}).status, cli::kUsage);
}

TEST(Cli, LimitsTable) {
  const Result r = run({"limits", "12"});
  ASSERT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);  // header
  std::map<int, std::string> verdict;
  while (std::getline(lines, line)) {
    std::istringstream row(line);
    int n;
    std::string v;
    row >> n >> v;
    verdict[n] = v;
  }
  ASSERT_EQ(verdict.size(), 11u);
  for (const auto& [n, v] : verdict) {
    const std::string expected = n == 2 ? "Full" : (n == 3 || n == 5 || n == 7) ? "Halved" : "Unsupported";
    EXPECT_EQ(v, expected) << n;
  }
}

TEST(Cli, LayoutRecordRoundTrips) {
  const auto path = temp_path("ledger.txt");
  const Result r = run({"layout", "5", "29", "13", "--oracle", "--out", path.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const AreaLedger parsed = parse_record(r.out);
  EXPECT_EQ(parsed, area_ledger(build_layout(classify(5), Candidate{29, 13})));
  EXPECT_EQ(parsed.uncovered, 320 * 16);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), r.out);
  std::filesystem::remove(path);
}

TEST(Cli, LayoutErrors) {
  const Result gap = run({"layout", "3", "40", "11"});
  EXPECT_EQ(gap.status, cli::kPrecondition);
  EXPECT_NE(gap.err.find("q < p <= n·q"), std::string::npos);
  EXPECT_EQ(run({"layout", "11", "1001", "101", "--oracle"}).status, cli::kResource);
  EXPECT_EQ(run({"layout", "11", "1001", "101"}).status, 0);
  EXPECT_EQ(run({"layout", "5", "29.5", "13"}).status, cli::kUsage);
  EXPECT_EQ(run({"layout", "5", "29"}).status, cli::kUsage);
}

TEST(Cli, RenderWritesSvg) {
  const auto path = temp_path("fig.svg");
  const Result r = run({"render", "5", "29", "13", "-o", path.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), render_layout(build_layout(classify(5), Candidate{29, 13}), [] {
                         FigureStyle s;
                         s.unit_scale = 12;
                         return s;
                       }()).text);
  EXPECT_NO_THROW(oracle::parse_xml(buf.str()));
  std::filesystem::remove(path);

  EXPECT_EQ(run({"render", "5", "29", "13", "-o", path.string(), "--scale", "10"}).status, cli::kPrecondition);
  EXPECT_EQ(run({"render", "5", "29", "13", "-o", path.string(), "--orientation", "upside"}).status, cli::kUsage);
  EXPECT_EQ(run({"render", "3", "19", "11", "-o", path.string(), "--banner"}).status, 0);
  std::filesystem::remove(path);
}

TEST(Cli, SearchAndConvergents) {
  const Result none = run({"search", "7", "2000"});
  EXPECT_EQ(none.status, 0);
  EXPECT_EQ(none.out, "none up to q_max = 2000\n");

  const Result square = run({"search", "9", "4"});
  EXPECT_EQ(square.out, "(3,1)\n(6,2)\n(9,3)\n(12,4)\n");

  const Result near = run({"search", "5", "13", "--defect-bound", "4"});
  EXPECT_NE(near.out.find("(29,13) defect 4"), std::string::npos);

  const Result conv = run({"convergents", "2", "4"});
  EXPECT_EQ(conv.out, "(1,1) defect 1\n(3,2) defect -1\n(7,5) defect 1\n(17,12) defect -1\n");
  EXPECT_EQ(run({"convergents", "16", "4"}).status, cli::kPrecondition);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).status, cli::kUsage);
  EXPECT_EQ(run({"prove", "seven"}).status, cli::kUsage);
  EXPECT_EQ(run({"prove", "1"}).status, cli::kPrecondition);
  EXPECT_EQ(run({"--help"}).status, 0);
}
