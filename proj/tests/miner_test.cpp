#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "snap/miner.hpp"
#include "test_support.hpp"

namespace snap {
namespace {

using Symbols = std::vector<std::string>;

FrequentPattern pat(Symbols symbols, std::vector<std::string> ids) {
  return {std::move(symbols), ids.size(), std::move(ids)};
}

const SequenceDB kThree{{"s1", {"a", "b", "c"}}, {"s2", {"a", "c"}}, {"s3", {"b", "c"}}};

TEST(PrefixSpan, SingleElement) {
  const SequenceDB db{{"s1", {"a"}}};
  EXPECT_EQ(prefixspan(db, 1), (std::vector<FrequentPattern>{pat({"a"}, {"s1"})}));
}

TEST(PrefixSpan, ThreeSequencesAtSupportTwo) {
  const std::vector<FrequentPattern> expected{
      pat({"c"}, {"s1", "s2", "s3"}), pat({"a", "c"}, {"s1", "s2"}), pat({"b", "c"}, {"s1", "s3"}),
      pat({"a"}, {"s1", "s2"}),       pat({"b"}, {"s1", "s3"}),
  };
  EXPECT_EQ(prefixspan(kThree, 2), expected);
  EXPECT_EQ(brute_force_patterns(kThree, 2, 3), expected);
}

TEST(PrefixSpan, RepeatedSymbolAndEmptyDb) {
  const SequenceDB db{{"s1", {"a", "a"}}};
  EXPECT_EQ(prefixspan(db, 1), (std::vector<FrequentPattern>{pat({"a", "a"}, {"s1"}), pat({"a"}, {"s1"})}));
  EXPECT_EQ(brute_force_patterns(db, 1, 2), prefixspan(db, 1));
  EXPECT_TRUE(prefixspan({}, 1).empty());
  EXPECT_TRUE(brute_force_patterns({}, 3, 4).empty());
}

TEST(PrefixSpan, SupportCountsSequencesNotOccurrences) {
  const SequenceDB db{{"s1", {"x", "x", "x"}}, {"s2", {"y"}}};
  const auto out = prefixspan(db, 2);
  EXPECT_TRUE(out.empty());
}

TEST(PrefixSpan, ZeroMinSupportIsAnArgumentError) { EXPECT_THROW(prefixspan(kThree, 0), std::invalid_argument); }

TEST(Project, Examples) {
  EXPECT_EQ(project({{"s1", {"a", "b", "a", "c"}}}, "a"), (SequenceDB{{"s1", {"b", "a", "c"}}}));
  EXPECT_TRUE(project({{"s1", {"b"}}}, "a").empty());
  EXPECT_EQ(project(kThree, "b"), (SequenceDB{{"s1", {"c"}}, {"s3", {"c"}}}));
}

TEST(Rank, Examples) {
  const auto ranked = rank({pat({"a"}, {"1", "2"}), pat({"a", "c"}, {"1", "2"}), pat({"c"}, {"1", "2", "3"})});
  EXPECT_EQ(ranked, (std::vector<FrequentPattern>{pat({"c"}, {"1", "2", "3"}), pat({"a", "c"}, {"1", "2"}),
                                                  pat({"a"}, {"1", "2"})}));
  EXPECT_EQ(rank({pat({"q"}, {"1"})}), (std::vector<FrequentPattern>{pat({"q"}, {"1"})}));
  const auto tie = rank({pat({"b"}, {"1"}), pat({"a"}, {"1"})});
  EXPECT_EQ(tie[0].symbols, Symbols{"a"});
}

TEST(DefaultMinSupport, FloorOfTwo) {
  EXPECT_EQ(default_min_support(0), 2u);
  EXPECT_EQ(default_min_support(3), 2u);
  EXPECT_EQ(default_min_support(20), 2u);
  EXPECT_EQ(default_min_support(21), 3u);
  EXPECT_EQ(default_min_support(200), 20u);
}

TEST(PrefixSpan, TrioSequencesShareAppendToGroup) {
  const auto index = testing::trio_index();
  SequenceDB db;
  for (const auto& [id, s] : index.snippets()) db.push_back({id, s.sequence()});
  const auto out = prefixspan(db, 3);
  ASSERT_FALSE(out.empty());
  const auto it = std::find_if(out.begin(), out.end(),
                               [](const FrequentPattern& p) { return p.symbols == Symbols{"manager.appendToGroup/2"}; });
  ASSERT_NE(it, out.end());
  EXPECT_EQ(it->support, 3u);
}

// Properties.

TEST(MinerProperties, PrefixSpanEqualsBruteForce) {
  std::mt19937 rng(51);
  for (int iter = 0; iter < 600; ++iter) {
    const auto db = testing::random_sequence_db(rng);
    for (std::size_t min_support : {1u, 2u, 3u}) {
      ASSERT_EQ(prefixspan(db, min_support), brute_force_patterns(db, min_support, 6)) << "iter " << iter;
    }
  }
}

TEST(MinerProperties, AntiMonotoneAndSoundSupportSets) {
  std::mt19937 rng(52);
  for (int iter = 0; iter < 300; ++iter) {
    const auto db = testing::random_sequence_db(rng);
    const auto out = prefixspan(db, 1 + rng() % 3);
    std::map<Symbols, std::size_t> support;
    for (const auto& p : out) support[p.symbols] = p.support;
    for (const auto& p : out) {
      EXPECT_EQ(p.support, p.support_ids.size());
      EXPECT_TRUE(std::is_sorted(p.support_ids.begin(), p.support_ids.end()));
      for (std::size_t len = 1; len < p.symbols.size(); ++len) {
        const Symbols prefix(p.symbols.begin(), p.symbols.begin() + static_cast<std::ptrdiff_t>(len));
        ASSERT_TRUE(support.count(prefix));
        EXPECT_GE(support[prefix], p.support);
      }
      for (const auto& rec : db) {
        const bool listed = std::binary_search(p.support_ids.begin(), p.support_ids.end(), rec.id);
        EXPECT_EQ(listed, is_subsequence(p.symbols, rec.symbols));
      }
    }
  }
}

TEST(MinerProperties, RankIgnoresInputOrder) {
  std::mt19937 rng(53);
  for (int iter = 0; iter < 200; ++iter) {
    auto patterns = prefixspan(testing::random_sequence_db(rng), 1);
    const auto ranked = rank(patterns);
    std::shuffle(patterns.begin(), patterns.end(), rng);
    EXPECT_EQ(rank(patterns), ranked);
    EXPECT_TRUE(std::is_sorted(ranked.begin(), ranked.end(), rank_before));
  }
}

}  // namespace
}  // namespace snap
