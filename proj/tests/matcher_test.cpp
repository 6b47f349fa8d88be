#include <gtest/gtest.h>

#include <random>

#include "snap/matcher.hpp"
#include "test_support.hpp"

namespace snap {
namespace {

using Hits = std::vector<MatchHit>;

constexpr std::string_view kViewWithSpace = "manager.appendToGroup(GEFActionConstants.GROUP VIEW, action);";

TEST(EditDistance, Examples) {
  EXPECT_EQ(edit_distance("abc", "abc"), 0u);
  EXPECT_EQ(edit_distance("abc", ""), 3u);
  EXPECT_EQ(edit_distance("", "abc"), 3u);
  EXPECT_EQ(edit_distance("GROUP_VIEW", "GROUP VIEW"), 1u);
  EXPECT_EQ(edit_distance("kitten", "sitting"), 3u);
}

TEST(BpmSearch, ExactOccurrence) {
  const auto r = bpm_search("abc", "xxabcxx", 0);
  EXPECT_EQ(r.hits, (Hits{{4, 0}}));
  EXPECT_FALSE(r.fallback);
}

TEST(BpmSearch, UnderscoreReplacedBySpace) {
  // Frozen from the brute-force window oracle: only the window ending at the
  // final 'W' (index 50) is within distance 1.
  const auto oracle = testing::brute_force_occurrences("GROUP_VIEW", kViewWithSpace, 1);
  ASSERT_EQ(oracle, (Hits{{50, 1}}));
  EXPECT_EQ(bpm_search("GROUP_VIEW", kViewWithSpace, 1).hits, oracle);
  EXPECT_EQ(dp_occurrence_search("GROUP_VIEW", kViewWithSpace, 1), oracle);
}

TEST(BpmSearch, PatternLongerThanText) {
  EXPECT_TRUE(bpm_search("abc", "ab", 0).hits.empty());
  EXPECT_TRUE(dp_occurrence_search("abc", "ab", 0).empty());
}

TEST(BpmSearch, EmptyPatternIsAnArgumentError) {
  EXPECT_THROW(bpm_search("", "abc", 1), std::invalid_argument);
  EXPECT_THROW(dp_occurrence_search("", "abc", 1), std::invalid_argument);
  EXPECT_THROW(PatternMasks(""), std::invalid_argument);
}

TEST(DpOccurrenceSearch, Examples) {
  EXPECT_EQ(dp_occurrence_search("abc", "xxabcxx", 0), (Hits{{4, 0}}));
  const Hits aa{{0, 1}, {1, 1}, {2, 1}};
  EXPECT_EQ(testing::brute_force_occurrences("aa", "aba", 1), aa);
  EXPECT_EQ(dp_occurrence_search("aa", "aba", 1), aa);
  EXPECT_EQ(bpm_search("aa", "aba", 1).hits, aa);
  EXPECT_TRUE(dp_occurrence_search("x", "yyy", 0).empty());
  EXPECT_TRUE(bpm_search("x", "yyy", 0).hits.empty());
}

TEST(BpmSearch, LongPatternFallsBackToTable) {
  const std::string pattern(70, 'a');
  const std::string text = std::string(10, 'b') + std::string(70, 'a') + "b";
  const auto r = bpm_search(pattern, text, 1);
  EXPECT_TRUE(r.fallback);
  EXPECT_EQ(r.hits, dp_occurrence_search(pattern, text, 1));
  EXPECT_EQ(r.hits, (Hits{{78, 1}, {79, 0}, {80, 1}}));
}

TEST(PatternMasks, EachPositionCoveredOnce) {
  const PatternMasks masks("abcab");
  EXPECT_EQ(masks.length(), 5u);
  EXPECT_EQ(masks['a'], 0b01001u);
  EXPECT_EQ(masks['b'], 0b10010u);
  EXPECT_EQ(masks['c'], 0b00100u);
  std::uint64_t all = 0;
  for (int c = 0; c < 256; ++c) {
    EXPECT_EQ(all & masks[static_cast<unsigned char>(c)], 0u);
    all |= masks[static_cast<unsigned char>(c)];
  }
  EXPECT_EQ(all, 0b11111u);
}

TEST(BpmSearch, FullWordWidthPattern) {
  std::mt19937 rng(3);
  const auto pattern = testing::random_string(rng, 64, "ACGT");
  const auto text = testing::random_string(rng, 40, "ACGT") + pattern + testing::random_string(rng, 40, "ACGT");
  const auto r = bpm_search(pattern, text, 3);
  EXPECT_FALSE(r.fallback);
  EXPECT_EQ(r.hits, dp_occurrence_search(pattern, text, 3));
}

TEST(BpmSearch, NonAsciiBytesAreOrdinarySymbols) {
  const std::string text = "x\xc3\xa9y\xff";
  EXPECT_EQ(bpm_search("\xc3\xa9", text, 0).hits, (Hits{{2, 0}}));
  EXPECT_EQ(bpm_search("\xff", text, 0).hits, (Hits{{4, 0}}));
}

// Properties.

TEST(MatcherProperties, BitParallelEqualsTable) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> plen(1, 64), tlen(0, 256), kdist(0, 3);
  for (int iter = 0; iter < 1500; ++iter) {
    const auto p = testing::random_string(rng, plen(rng), "abcd");
    const auto t = testing::random_string(rng, tlen(rng), "abcd");
    const auto k = kdist(rng);
    ASSERT_EQ(bpm_search(p, t, k).hits, dp_occurrence_search(p, t, k)) << p << " / " << t << " / " << k;
  }
}

TEST(MatcherProperties, AdversarialInputs) {
  for (std::size_t m = 1; m <= 64; m += 7) {
    const std::string same(m, 'a');
    for (std::size_t k : {std::size_t{0}, m / 2, m, m + 3}) {
      EXPECT_EQ(bpm_search(same, std::string(100, 'a'), k).hits, dp_occurrence_search(same, std::string(100, 'a'), k));
      EXPECT_EQ(bpm_search(same, same, k).hits, dp_occurrence_search(same, same, k));
      EXPECT_EQ(bpm_search(same, std::string(50, 'b'), k).hits, dp_occurrence_search(same, std::string(50, 'b'), k));
    }
  }
  // k >= |p|: every position is a hit.
  EXPECT_EQ(bpm_search("abc", "zzzz", 3).hits.size(), 4u);
}

TEST(MatcherProperties, ExactSearchMatchesSubstringOccurrences) {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    const auto p = testing::random_string(rng, 1 + rng() % 4, "ab");
    const auto t = testing::random_string(rng, rng() % 60, "ab");
    Hits expected;
    for (std::size_t pos = t.find(p); pos != std::string::npos; pos = t.find(p, pos + 1)) {
      expected.push_back({pos + p.size() - 1, 0});
    }
    EXPECT_EQ(bpm_search(p, t, 0).hits, expected);
  }
}

TEST(MatcherProperties, MonotoneInK) {
  std::mt19937 rng(6);
  for (int iter = 0; iter < 300; ++iter) {
    const auto p = testing::random_string(rng, 1 + rng() % 12, "abcd");
    const auto t = testing::random_string(rng, rng() % 80, "abcd");
    for (std::size_t k = 0; k < 3; ++k) {
      const auto small = bpm_search(p, t, k).hits;
      const auto large = bpm_search(p, t, k + 1).hits;
      for (const auto& h : small) {
        EXPECT_NE(std::find(large.begin(), large.end(), h), large.end());
      }
    }
  }
}

TEST(MatcherProperties, ReportedDistancesAreMinimalOverWindows) {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const auto p = testing::random_string(rng, 1 + rng() % 6, "abc");
    const auto t = testing::random_string(rng, rng() % 20, "abc");
    const auto k = rng() % 3;
    EXPECT_EQ(bpm_search(p, t, k).hits, testing::brute_force_occurrences(p, t, k)) << p << " / " << t;
  }
}

}  // namespace
}  // namespace snap
