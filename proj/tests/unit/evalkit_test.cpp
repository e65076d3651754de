#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "fixture.hpp"
#include "tweetloc/error.hpp"
#include "tweetloc/evalkit.hpp"

using namespace tweetloc;

namespace {

GoldRecord gold(std::string id, std::vector<std::string> names) {
  GoldRecord g;
  g.tweet.id = std::move(id);
  g.gold_locations = std::move(names);
  return g;
}

// Extractor that returns fixed phrases per tweet id.
Extractor fixed(std::map<std::string, std::vector<std::string>> by_id) {
  return [by_id = std::move(by_id)](const RawTweet& t) {
    ExtractionResult r;
    r.tweet_id = t.id;
    GeonameId next = 1;
    if (auto it = by_id.find(t.id); it != by_id.end())
      for (const auto& p : it->second) {
        LocatedMention m;
        m.candidate.phrase = p;
        m.entry_id = next++;
        r.mentions.push_back(m);
      }
    r.untagged = r.mentions.empty();
    return r;
  };
}

const MatchRule kStrict{false, nullptr};

}  // namespace

TEST(Evaluate, PerfectMatch) {
  std::vector<GoldRecord> corpus{gold("1", {"Delhi"})};
  auto r = evaluate(corpus, fixed({{"1", {"Delhi"}}}), kStrict);
  EXPECT_EQ(r.precision, 1.0);
  EXPECT_EQ(r.recall, 1.0);
  EXPECT_EQ(r.f_score, 1.0);
}

TEST(Evaluate, OneThirdPrecision) {
  std::vector<GoldRecord> corpus{gold("1", {"delhi"})};
  auto r = evaluate(corpus, fixed({{"1", {"delhi", "song", "monsoon"}}}), kStrict);
  EXPECT_DOUBLE_EQ(r.precision, 1.0 / 3.0);
  EXPECT_EQ(r.recall, 1.0);
  EXPECT_DOUBLE_EQ(r.f_score, 0.5);
}

TEST(Evaluate, PooledCounts) {
  std::vector<GoldRecord> corpus{gold("1", {"a", "d"}), gold("2", {"b"})};
  auto r = evaluate(corpus, fixed({{"1", {"a"}}, {"2", {"b", "c"}}}), kStrict);
  EXPECT_DOUBLE_EQ(r.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.recall, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.f_score, 2.0 / 3.0);
  EXPECT_EQ(r.matched_total, 2u);
}

TEST(Evaluate, OneToOneMatching) {
  std::vector<GoldRecord> corpus{gold("1", {"Delhi"})};
  auto r = evaluate(corpus, fixed({{"1", {"Delhi", "delhi"}}}), kStrict);
  EXPECT_EQ(r.matched_total, 1u);
  EXPECT_DOUBLE_EQ(r.precision, 0.5);
}

TEST(Evaluate, EntryNamesAcceptAlternates) {
  auto res = fixture::resources();
  std::vector<GoldRecord> corpus{gold("1", {"Bombay"})};
  Extractor ex = [](const RawTweet&) {
    ExtractionResult r;
    LocatedMention m;
    m.candidate.phrase = "Mumbai";
    m.entry_id = 1275339;
    r.mentions.push_back(m);
    return r;
  };
  EXPECT_EQ(evaluate(corpus, ex, {true, &res->gazetteer}).matched_total, 1u);
  EXPECT_EQ(evaluate(corpus, ex, kStrict).matched_total, 0u);
}

TEST(Evaluate, EmptyCorpusAndFailures) {
  EXPECT_THROW(evaluate({}, fixed({})), ContractError);
  std::vector<GoldRecord> corpus{gold("1", {"Delhi"}), gold("2", {"Goa"})};
  Extractor flaky = [](const RawTweet& t) -> ExtractionResult {
    if (t.id == "1") throw std::runtime_error("boom");
    return fixed({{"2", {"Goa"}}})(t);
  };
  auto r = evaluate(corpus, flaky, kStrict);
  ASSERT_EQ(r.per_tweet.size(), 2u);
  EXPECT_TRUE(r.per_tweet[0].failed);
  EXPECT_TRUE(r.per_tweet[0].retrieved.empty());
  EXPECT_EQ(r.precision, 1.0);
  EXPECT_EQ(r.recall, 0.5);
}

TEST(Evaluate, EmptyTweetChangesNothing) {
  std::vector<GoldRecord> corpus{gold("1", {"a", "d"}), gold("2", {"b"})};
  auto ex = fixed({{"1", {"a"}}, {"2", {"b", "c"}}});
  auto base = evaluate(corpus, ex, kStrict);
  corpus.push_back(gold("3", {}));
  auto more = evaluate(corpus, ex, kStrict);
  EXPECT_EQ(base.precision, more.precision);
  EXPECT_EQ(base.recall, more.recall);
  EXPECT_EQ(base.f_score, more.f_score);
}

TEST(FScore, HarmonicMean) {
  EXPECT_EQ(f_score(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(f_score(1.0 / 3.0, 1.0), 0.5);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    double p = u(rng), r = u(rng);
    ASSERT_DOUBLE_EQ(f_score(p, r), 2 * p * r / (p + r));
  }
}

TEST(Timing, EmptyCorpusAndBestOf) {
  auto t = time_extractor({}, fixed({}), 3);
  EXPECT_EQ(t.total.count(), 0);
  EXPECT_EQ(t.mean_per_tweet.count(), 0);
  EXPECT_THROW(time_extractor({}, fixed({}), 0), ContractError);

  std::vector<RawTweet> corpus(2);
  int call = 0;
  // Passes take 20, 4 and 12 ms; the best pass wins.
  const int delays[] = {10, 10, 2, 2, 6, 6};
  Extractor slow = [&](const RawTweet& tw) {
    std::this_thread::sleep_for(std::chrono::milliseconds(delays[call++ % 6]));
    return ExtractionResult{tw.id, {}, true, {}};
  };
  auto best = time_extractor(corpus, slow, 3);
  EXPECT_GE(best.total, std::chrono::milliseconds(4));
  EXPECT_LT(best.total, std::chrono::milliseconds(12));
  EXPECT_EQ(best.mean_per_tweet, best.total / 2);
}

TEST(GoldCorpus, ReadsFixture) {
  auto corpus = fixture::gold_corpus();
  EXPECT_GE(corpus.size(), 30u);
  EXPECT_EQ(corpus[0].tweet.id, "t01");
  EXPECT_EQ(corpus[0].gold_locations, (std::vector<std::string>{"Tamil Nadu"}));
}

TEST(GoldCorpus, MalformedLineNamed) {
  std::istringstream in(
      "{\"id\":\"a\",\"text\":\"x\",\"created_at\":\"2017-09-01T00:00:00Z\",\"gold\":[]}\n{\"id\":\"b\"}\n");
  try {
    read_gold_corpus(in);
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Report, JsonColumns) {
  std::vector<GoldRecord> corpus{gold("1", {"Delhi"})};
  auto r = evaluate(corpus, fixed({{"1", {"Delhi"}}}), kStrict);
  auto j = nlohmann::json::parse(report_json("GEOLOC", r));
  for (const char* k : {"Precision", "Recall", "F-score", "Timing"}) EXPECT_TRUE(j.contains(k)) << k;
}
