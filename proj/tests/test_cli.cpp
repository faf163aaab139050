#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>

#include "avgdeg/families.hpp"
#include "golden_cases.hpp"
#include "test_util.hpp"

using namespace avgdeg;

namespace {

const std::string kDir = AVGDEG_GOLDEN_DIR;

bool updating() {
  const char* env = std::getenv("AVGDEG_UPDATE_GOLDEN");
  return env && std::string(env) == "1";
}

}  // namespace

TEST(Cli, GoldenOutputs) {
  for (const auto& c : golden::cases()) {
    SCOPED_TRACE(c.name);
    const auto res = golden::run(c.args, kDir);
    EXPECT_EQ(res.exit_code, c.exit_code) << res.err;
    const std::string path = golden::golden_path(kDir, c);
    if (updating()) {
      std::ofstream(path, std::ios::binary) << res.out;
      continue;
    }
    EXPECT_EQ(res.out, golden::read_text(path));
  }
}

TEST(Cli, FrozenWitnessesVerify) {
  for (const auto& c : golden::cases()) {
    if (!c.emits_witness) continue;
    SCOPED_TRACE(c.name);
    const auto res = golden::verify_frozen(c, kDir);
    EXPECT_EQ(res.exit_code, 0) << res.out << res.err;
    EXPECT_EQ(res.out.find("INVALID"), std::string::npos);
  }
}

TEST(Cli, CheckReportLines) {
  const auto k4 = golden::run({"check", "@/k4.txt", "--k", "3"}, kDir);
  EXPECT_EQ(k4.out.rfind("member=true minimal=false", 0), 0U);
  EXPECT_NE(k4.out.find("removable_edge=0,1"), std::string::npos);

  const auto bow = golden::run({"check", "@/bowtie.txt", "--k", "3"}, kDir);
  EXPECT_EQ(bow.out.rfind("member=true minimal=true", 0), 0U);

  const auto bc = golden::run({"check", "@/bowtie_c3.txt", "--k", "3"}, kDir);
  EXPECT_NE(bc.out.find("deficient_set=5,6,7 value=0"), std::string::npos);

  const auto c5 = golden::run({"check", "@/c5.txt", "--k", "3"}, kDir);
  EXPECT_EQ(c5.exit_code, 1);
  EXPECT_EQ(c5.out.rfind("member=false", 0), 0U);
}

TEST(Cli, RefusalMessages) {
  const auto ds = golden::run({"embed", "@/k5.txt", "--tree", "@/path6.tree"}, kDir);
  EXPECT_EQ(ds.exit_code, 1);
  EXPECT_NE(ds.err.find("m=1 p=2 k=6"), std::string::npos) << ds.err;

  const auto r2 = golden::run({"keyring", "@/k4.txt", "--k", "3", "--r", "2"}, kDir);
  EXPECT_NE(r2.err.find("2r <= k-1"), std::string::npos) << r2.err;

  const auto raw = golden::run({"check", "@/no_such_file.txt", "--k", "3"}, kDir);
  EXPECT_NE(raw.err.find("cannot open"), std::string::npos);
}

TEST(Cli, MinimalizeOutputParsesBack) {
  const auto res = golden::run({"minimalize", "@/bowtie_c3.txt", "--k", "3"}, kDir);
  ASSERT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.out.rfind("# original ids: 0,1,2,3,4\n", 0), 0U);
  EXPECT_EQ(parse_graph(res.out), families::bowtie());
}

TEST(Cli, FormatFlag) {
  EXPECT_EQ(golden::run({"check", "@/k6.g6", "--k", "5", "--format", "graph6"}, kDir).exit_code, 0);
  EXPECT_EQ(golden::run({"check", "@/k6.g6", "--k", "5", "--format", "edgelist"}, kDir).exit_code, 2);
  EXPECT_EQ(golden::run({"check", "@/k6.g6", "--k", "5", "--format", "dot"}, kDir).exit_code, 2);
}

TEST(Cli, SweepRejectsBadR) {
  EXPECT_EQ(golden::run({"sweep", "--n", "4", "--k", "3", "--r", "2"}, kDir).exit_code, 1);
  EXPECT_EQ(golden::run({"sweep", "--n", "8", "--k", "3"}, kDir).exit_code, 2);
}

TEST(Cli, FreshWitnessesRoundTrip) {
  std::mt19937_64 rng(83);
  const std::string tmp = ::testing::TempDir() + "/avgdeg_cli_roundtrip";
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testutil::random_graph(rng, 6 + static_cast<int>(rng() % 8), 0.5);
    std::ofstream(tmp + ".g") << to_edgelist(g);
    for (int k = 3; k <= 6; ++k) {
      if (!in_Dk(g, k)) continue;
      const auto kr = golden::run({"keyring", tmp + ".g", "--k", std::to_string(k), "--r", "1"}, kDir);
      ASSERT_EQ(kr.exit_code, 0) << kr.err;
      std::ofstream(tmp + ".w") << kr.out;
      const auto v = golden::run({"verify", tmp + ".g", "--witness", tmp + ".w", "--k", std::to_string(k)}, kDir);
      ASSERT_EQ(v.exit_code, 0) << kr.out << v.out;
    }
  }
}

TEST(Cli, FirstChoiceOnlyStallsWhereSearchSucceeds) {
  const auto search = golden::run({"embed", "@/stall_host.g6", "--tree", "@/stall_path.tree"}, kDir);
  EXPECT_EQ(search.exit_code, 0) << search.err;
  const auto literal =
      golden::run({"embed", "@/stall_host.g6", "--tree", "@/stall_path.tree", "--first-choice-only"}, kDir);
  EXPECT_EQ(literal.exit_code, 1);
  EXPECT_NE(literal.err.find("host edges to unreached A-vertices"), std::string::npos) << literal.err;
}
