#include <gtest/gtest.h>

#include <sstream>

#include "snap/cli.hpp"
#include "test_support.hpp"

namespace snap {
namespace {

using testing::TempDir;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "snap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& rel) { return (testing::fixture_dir() / rel).string(); }

class CliTest : public ::testing::Test {
 protected:
  std::string index_path() const { return (dir_.path() / "trio.idx").string(); }
  void ingest_trio() {
    const auto r = run({"ingest", fixture("trio"), "--tier", "olr", "--index", index_path()});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  TempDir dir_;
};

TEST_F(CliTest, IngestReportsCounts) {
  const auto r = run({"ingest", fixture("trio"), "--index", index_path()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ingested 3"), std::string::npos) << r.out;
  EXPECT_EQ(load_index(index_path()).size(), 3u);

  const auto again = run({"ingest", fixture("trio"), "--index", index_path()});
  EXPECT_EQ(again.code, 0);
  EXPECT_NE(again.out.find("skipped 3"), std::string::npos) << again.out;
  EXPECT_EQ(load_index(index_path()).size(), 3u);
}

TEST_F(CliTest, IngestJsonLinesIntoAnotherTier) {
  ingest_trio();
  const auto corpus = dir_.write("remote.jsonl", R"({"raw_text":"conn.open();"})" "\n");
  const auto r = run({"ingest", corpus.string(), "--tier", "snar", "--index", index_path()});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto index = load_index(index_path());
  EXPECT_EQ(index.size(), 4u);
  EXPECT_EQ(index.tier_members(RepoTier::SNAR).size(), 1u);
}

TEST_F(CliTest, QueryJsonHasOneRecommendation) {
  ingest_trio();
  const auto r = run({"query", "--index", index_path(), "--pattern", "appendToGroup", "--min-support", "3",
                      "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto payload = nlohmann::json::parse(r.out);
  EXPECT_FALSE(payload.contains("session_id"));
  ASSERT_EQ(payload["recommendations"].size(), 1u);
  EXPECT_EQ(payload["recommendations"][0]["symbols"], nlohmann::json::array({"manager.appendToGroup/2"}));
  EXPECT_EQ(payload["tier"], "OLR");
}

TEST_F(CliTest, TextAndJsonAgreeOnOrder) {
  ingest_trio();
  const std::vector<std::string> base{"query", "--index", index_path(), "--pattern", "appendToGroup",
                                      "--min-support", "1"};
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto payload = nlohmann::json::parse(run(json_args).out);
  const auto text = run(base).out;
  std::size_t last = 0;
  for (const auto& rec : payload["recommendations"]) {
    const auto pos = text.find(rec["id"].get<std::string>() + " ");
    ASSERT_NE(pos, std::string::npos) << text;
    EXPECT_GE(pos, last);
    last = pos;
  }
  EXPECT_NE(text.find("tier OLR"), std::string::npos) << text;
}

TEST_F(CliTest, AutoEscalateFlag) {
  const auto idx = (dir_.path() / "esc.idx").string();
  ASSERT_EQ(run({"ingest", fixture("escalation/olr"), "--index", idx}).code, 0);
  const std::vector<std::string> base{"query", "--index", idx, "--pattern", "appendToGroup", "--format", "json",
                                      "--snar-fixture", fixture("escalation/snar.json"), "--ossnr-fixture",
                                      fixture("escalation/ossnr.json")};
  const auto plain = nlohmann::json::parse(run(base).out);
  EXPECT_EQ(plain["tier"], "OLR");
  EXPECT_TRUE(plain["recommendations"].empty());
  auto escalate = base;
  escalate.push_back("--auto-escalate");
  const auto walked = nlohmann::json::parse(run(escalate).out);
  EXPECT_EQ(walked["tier"], "SNAR");
  EXPECT_FALSE(walked["recommendations"].empty());
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"query", "--index", index_path()}).code, 64);
  EXPECT_EQ(run({"query", "--index", index_path(), "--pattern", "x", "--top-k", "0"}).code, 64);
  EXPECT_EQ(run({"query", "--index", index_path(), "--pattern", "x", "--format", "yaml"}).code, 64);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({"--help"}).code, 0);

  EXPECT_EQ(run({"query", "--index", (dir_.path() / "missing.idx").string(), "--pattern", "x"}).code, 2);
  const auto bad = dir_.write("bad.idx", "not an index\n");
  const auto r = run({"query", "--index", bad.string(), "--pattern", "x"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"ingest", (dir_.path() / "nowhere").string(), "--index", index_path()}).code, 2);

  ingest_trio();
  EXPECT_EQ(run({"query", "--index", index_path(), "--pattern", "x", "--pre", "long", "--window", "2"}).code, 64);
}

TEST_F(CliTest, EvalTableAndCsv) {
  ingest_trio();
  const auto queries = dir_.write("q.txt", "appendToGroup\n\nisEnabled\n");
  const auto table = run({"eval", "--index", index_path(), "--queries", queries.string()});
  ASSERT_EQ(table.code, 0) << table.err;
  EXPECT_EQ(table.out.rfind("Serial | Query", 0), 0u) << table.out;
  EXPECT_NE(table.out.find("01     | appendToGroup |        3 |"), std::string::npos) << table.out;
  EXPECT_NE(table.out.find("02     | isEnabled"), std::string::npos) << table.out;

  const auto csv = run({"eval", "--index", index_path(), "--queries", queries.string(), "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "serial,query,baseline,snap");
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 3);

  EXPECT_EQ(run({"eval", "--index", index_path(), "--queries", (dir_.path() / "none.txt").string()}).code, 2);
  const auto empty = dir_.write("empty.txt", "\n\n");
  EXPECT_EQ(run({"eval", "--index", index_path(), "--queries", empty.string()}).code, 64);
}

TEST_F(CliTest, ServeRejectsBadAddress) {
  ingest_trio();
  EXPECT_EQ(run({"serve", "--index", index_path(), "--addr", "nonsense"}).code, 64);
}

}  // namespace
}  // namespace snap
