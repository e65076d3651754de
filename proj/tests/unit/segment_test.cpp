#include <gtest/gtest.h>

#include <sstream>

#include "fixture.hpp"
#include "oracles.hpp"
#include "tweetloc/error.hpp"
#include "tweetloc/segment.hpp"

using namespace tweetloc;

TEST(UnigramModel, LoadSumsCaseFoldedDuplicates) {
  std::istringstream in("nepal\t100\nquake\t50");
  auto m = load_unigram_model(in);
  EXPECT_EQ(m.total(), 150u);
  std::istringstream dup("The\t5\nthe\t5");
  EXPECT_EQ(load_unigram_model(dup).count("the"), 10u);
}

TEST(UnigramModel, LoadErrorsNameTheLine) {
  std::istringstream bad("abc\t-1");
  try {
    load_unigram_model(bad);
    FAIL() << "expected LoadError";
  } catch (const LoadError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  std::istringstream later("a\t1\nb\tx\n");
  try {
    load_unigram_model(later);
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream empty("");
  EXPECT_THROW(load_unigram_model(empty), LoadError);
}

TEST(Segment, FixtureModelExamples) {
  auto m = fixture::small_model();
  EXPECT_EQ(segment_word(m, "nepalquake").words, (std::vector<std::string>{"nepal", "quake"}));
  EXPECT_EQ(segment_word(m, "NepalQuake").words, (std::vector<std::string>{"nepal", "quake"}));
}

TEST(Segment, MaximalWordStaysWhole) {
  UnigramModel m({{"kerala", 1000}, {"ker", 10}, {"ala", 10}});
  EXPECT_EQ(segment_word(m, "kerala").words, (std::vector<std::string>{"kerala"}));
}

TEST(Segment, BundledModelSplitsBengaluru) {
  auto res = fixture::resources();
  EXPECT_EQ(res->model.count("bengaluru"), 0u);
  EXPECT_EQ(segment_word(res->model, "bengaluru").words, (std::vector<std::string>{"bengal", "uru"}));
}

TEST(Segment, ScoreIsSumOfWordScores) {
  auto m = fixture::small_model();
  auto s = segment_word(m, "nepalquakezz");
  LogScoreUnits sum = 0;
  double log_sum = 0;
  for (const auto& w : s.words) {
    sum += m.score_units(w);
    log_sum += m.log10_prob(w);
  }
  EXPECT_EQ(s.score_units, sum);
  EXPECT_NEAR(s.log_score, log_sum, 1e-9);
}

TEST(Segment, ScoresMatchReferenceFormula) {
  auto m = fixture::small_model();
  for (std::string w : {"nepal", "quake", "ne", "pal", "x", "zzzz", "kisiizi"})
    EXPECT_NEAR(m.log10_prob(w), static_cast<double>(oracle::reference_log10_prob(m, w)), 1e-12) << w;
}

TEST(Segment, MaxWordLenBoundsSegments) {
  UnigramModel m({{"a", 1}}, 3);
  for (const auto& w : segment_word(m, "bbbbbbbbbb").words) EXPECT_LE(w.size(), 3u);
}

TEST(HashtagExpansions, OriginalFirstThenSplits) {
  auto m = fixture::small_model();
  EXPECT_EQ(hashtag_expansions(m, "NepalQuake"), (std::vector<std::string>{"NepalQuake", "Nepal Quake"}));
  EXPECT_EQ(hashtag_expansions(m, "delhi"), (std::vector<std::string>{"delhi"}));
}

TEST(HashtagExpansions, OriginalSurvivesBadSegmentation) {
  // With almost no vocabulary the DP breaks the body into pieces.
  UnigramModel tiny({{"ki", 1}, {"zi", 1}});
  auto ex = hashtag_expansions(tiny, "Kisiizi");
  ASSERT_GE(ex.size(), 2u);
  EXPECT_EQ(ex.front(), "Kisiizi");
  EXPECT_NE(ex.back(), "kisiizi");
}

TEST(SegmentProperties, ReconstructionAndDeterminism) {
  auto res = fixture::resources();
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> ch(0, 25), len(1, 30);
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (int k = len(rng); k > 0; --k) s.push_back(static_cast<char>('a' + ch(rng)));
    auto a = segment_word(res->model, s);
    auto b = segment_word(res->model, s);
    std::string joined;
    for (const auto& w : a.words) joined += w;
    ASSERT_EQ(joined, s);
    ASSERT_EQ(a.words, b.words);
  }
}

TEST(SegmentProperties, OriginalRetention) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> ch(0, 52), len(1, 20);
  auto m = fixture::small_model();
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (int k = len(rng); k > 0; --k) {
      int c = ch(rng);
      s.push_back(c == 52 ? '_' : c < 26 ? static_cast<char>('a' + c) : static_cast<char>('A' + c - 26));
    }
    if (s.find_first_not_of('_') == std::string::npos) continue;
    auto ex = hashtag_expansions(m, s);
    ASSERT_FALSE(ex.empty());
    ASSERT_EQ(ex.front(), s);
  }
}

TEST(SegmentProperties, MatchesBruteForceOnSmallStrings) {
  auto m = fixture::small_model();
  std::mt19937 rng(13);
  const std::string alphabet = "nepalquk";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(1, 12);
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    for (int k = len(rng); k > 0; --k) s.push_back(alphabet[pick(rng)]);
    auto dp = segment_word(m, s);
    auto brute = oracle::brute_force_segment(m, s);
    ASSERT_EQ(dp.words, brute.words) << s;
    ASSERT_EQ(dp.score_units, brute.score) << s;
  }
}
