#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include "fixture.hpp"
#include "synthetic.hpp"
#include "tweetloc/error.hpp"
#include "tweetloc/pipeline.hpp"

using namespace tweetloc;

namespace {

constexpr const char* kMumbaiTweet = "Mumbai lost its mudflats and wetlands, now floods with every monsoon.";

RawTweet tweet(std::string id, std::string text) {
  RawTweet t;
  t.id = std::move(id);
  t.text = std::move(text);
  return t;
}

PipelineConfig config(Mode mode = Mode::GeoLoc) {
  PipelineConfig c;
  c.mode = mode;
  return c;
}

const LocatedMention* mention_for(const ExtractionResult& r, GeonameId id) {
  for (const auto& m : r.mentions)
    if (m.entry_id == id) return &m;
  return nullptr;
}

std::set<GeonameId> ids(const ExtractionResult& r) {
  std::set<GeonameId> out;
  for (const auto& m : r.mentions) out.insert(m.entry_id);
  return out;
}

constexpr GeonameId kTamilNadu = 1255053, kMumbai = 1275339, kGujranwala = 1270642, kSong = 1256095;

}  // namespace

TEST(Pipeline, TamilNaduTweet) {
  auto r = extract_locations(
      tweet("t01", "Will discuss on @TimesNow at 8.30 am today regarding Dengue Fever in Tamil Nadu."), config(),
      fixture::resources());
  EXPECT_EQ(r.tweet_id, "t01");
  ASSERT_NE(mention_for(r, kTamilNadu), nullptr);
  EXPECT_FALSE(r.untagged);
}

TEST(Pipeline, VinayakHospitalTweet) {
  auto r = extract_locations(tweet("t02", "Urgent B+ group platelets suffering from dengue,Ankit Arora  At Vinayak "
                                          "hospital, Gujranwala town,delhi"),
                             config(), fixture::resources());
  auto* g = mention_for(r, kGujranwala);
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(g->match_kind, MatchKind::SuffixDropped);
  EXPECT_EQ(g->candidate.phrase, "Gujranwala town");
  EXPECT_NE(mention_for(r, 1273294), nullptr);
}

TEST(Pipeline, MumbaiWithSuppliedParse) {
  Pipeline p(fixture::resources(), config());
  auto r = p.extract(tweet("t06", kMumbaiTweet));
  auto* m = mention_for(r, kMumbai);
  ASSERT_NE(m, nullptr);
  EXPECT_TRUE(m->candidate.sources.contains(CandidateSource::DepProximity));
  EXPECT_TRUE(m->candidate.parse_supported);
  for (const auto& x : r.mentions) EXPECT_NE(to_lower_ascii(x.candidate.phrase), "monsoon");

  auto no_guard = config();
  no_guard.guard_enabled = false;
  auto r2 = Pipeline(fixture::resources(), no_guard).extract(tweet("t06", kMumbaiTweet));
  EXPECT_TRUE(std::any_of(r2.mentions.begin(), r2.mentions.end(),
                          [](const auto& x) { return x.candidate.phrase == "monsoon"; }));
}

TEST(Pipeline, MumbaiWithWindowFallback) {
  auto c = config();
  c.dependency_source = GraphSource::TokenWindowFallback;
  auto r = Pipeline(fixture::resources(), c).extract(tweet("t06", kMumbaiTweet));
  auto* m = mention_for(r, kMumbai);
  ASSERT_NE(m, nullptr);
  EXPECT_FALSE(m->candidate.sources.contains(CandidateSource::DepProximity));
}

TEST(Pipeline, ParseFromAnnotationsWins) {
  std::ifstream in(fixture::mumbai_parse_path());
  TweetAnnotations ann;
  ann.parse = read_conllu(in).at(0);
  auto r = Pipeline(fixture::resources(), config()).extract(tweet("other-id", kMumbaiTweet), ann);
  auto* m = mention_for(r, kMumbai);
  ASSERT_NE(m, nullptr);
  EXPECT_TRUE(m->candidate.parse_supported);
}

TEST(Pipeline, MisalignedParseFallsBack) {
  std::ifstream in(fixture::mumbai_parse_path());
  TweetAnnotations ann;
  ann.parse = read_conllu(in).at(0);
  auto r = Pipeline(fixture::resources(), config()).extract(tweet("x", "floods in Kerala today"), ann);
  EXPECT_NE(mention_for(r, 1267254), nullptr);
}

TEST(Pipeline, UntaggedTweet) {
  auto r = extract_locations(tweet("u", "so tired of this weather honestly"), config(), fixture::resources());
  EXPECT_TRUE(r.untagged);
  EXPECT_TRUE(r.mentions.empty());
  EXPECT_GE(r.elapsed.count(), 0);
  auto empty = extract_locations(tweet("e", ""), config(), fixture::resources());
  EXPECT_TRUE(empty.untagged);
}

TEST(Pipeline, HashtagFindsPlace) {
  auto r = extract_locations(tweet("h", "#ChennaiFloods update"), config(), fixture::resources());
  EXPECT_NE(mention_for(r, 1264527), nullptr);
}

TEST(Pipeline, CommonWordGuard) {
  auto bare = extract_locations(tweet("s1", "my favourite song right now"), config(), fixture::resources());
  EXPECT_EQ(mention_for(bare, kSong), nullptr);
  auto cued = extract_locations(tweet("s2", "floods near Song"), config(), fixture::resources());
  ASSERT_NE(mention_for(cued, kSong), nullptr);
  EXPECT_EQ(mention_for(cued, kSong)->lat, 27.24641);
}

TEST(Pipeline, ExternalTagsUsed) {
  TweetAnnotations ann;
  ann.pos_tags = std::vector<PosTag>{PosTag::Other, PosTag::Other, PosTag::Other};
  auto c = config();
  c.enabled_sources = {CandidateSource::ProperChunk};
  auto r = Pipeline(fixture::resources(), c).extract(tweet("p", "rain in Kerala"), ann);
  EXPECT_TRUE(r.untagged);
  ann.pos_tags = std::vector<PosTag>{PosTag::Other};
  EXPECT_THROW(Pipeline(fixture::resources(), c).extract(tweet("p", "rain in Kerala"), ann), ContractError);
}

TEST(Baselines, BigramOnlyEntry) {
  auto t = tweet("b", "dengue in tamil nadu");
  auto uni = baseline_extract(t, config(Mode::UniLoc), fixture::resources());
  auto bi = baseline_extract(t, config(Mode::BiLoc), fixture::resources());
  EXPECT_EQ(mention_for(uni, kTamilNadu), nullptr);
  EXPECT_NE(mention_for(bi, kTamilNadu), nullptr);
  EXPECT_THROW(baseline_extract(t, config(Mode::GeoLoc), fixture::resources()), ConfigError);
  auto empty = tweet("e", "");
  EXPECT_TRUE(baseline_extract(empty, config(Mode::UniLoc), fixture::resources()).mentions.empty());
  EXPECT_TRUE(baseline_extract(empty, config(Mode::BiLoc), fixture::resources()).mentions.empty());
}

TEST(Baselines, NoGuardNoSuffixDropping) {
  auto uni = baseline_extract(tweet("s", "my favourite song"), config(Mode::UniLoc), fixture::resources());
  EXPECT_NE(mention_for(uni, kSong), nullptr);
  for (const auto& m : uni.mentions) EXPECT_TRUE(m.match_kind == MatchKind::ExactName || m.match_kind == MatchKind::AlternateName);
}

TEST(PipelineProperties, BaselineContainmentAndDeterminism) {
  std::mt19937 rng(41);
  Pipeline geo(fixture::resources(), config());
  Pipeline uni(fixture::resources(), config(Mode::UniLoc));
  Pipeline bi(fixture::resources(), config(Mode::BiLoc));
  for (const auto& t : synthetic::random_tweets(rng, 300, fixture::place_names())) {
    auto u = ids(uni.extract(t));
    auto b = ids(bi.extract(t));
    ASSERT_TRUE(std::includes(b.begin(), b.end(), u.begin(), u.end())) << t.text;
    auto r1 = geo.extract(t), r2 = geo.extract(t);
    r1.elapsed = r2.elapsed = {};
    ASSERT_EQ(r1, r2);
    ASSERT_EQ(r1.untagged, r1.mentions.empty());
  }
}

TEST(PipelineProperties, CandidateSetMonotoneInSources) {
  std::mt19937 rng(43);
  const std::vector<CandidateSource> all{CandidateSource::ProperChunk, CandidateSource::SuffixMatch,
                                         CandidateSource::DepProximity, CandidateSource::NounPhrase,
                                         CandidateSource::HashtagOriginal, CandidateSource::HashtagSegment};
  auto tweets = synthetic::random_tweets(rng, 100, fixture::place_names());
  for (std::size_t drop = 0; drop < all.size(); ++drop) {
    auto fewer = config();
    fewer.enabled_sources = {};
    for (std::size_t k = 0; k < all.size(); ++k)
      if (k != drop) fewer.enabled_sources.insert(all[k]);
    Pipeline full(fixture::resources(), config()), part(fixture::resources(), fewer);
    for (const auto& t : tweets) {
      std::set<std::string> a, b;
      for (const auto& c : full.candidates(t)) a.insert(dedup_key(c.phrase));
      for (const auto& c : part.candidates(t)) b.insert(dedup_key(c.phrase));
      ASSERT_TRUE(std::includes(a.begin(), a.end(), b.begin(), b.end())) << t.text;
    }
  }
}

TEST(PipelineConfig, Validation) {
  auto c = config();
  c.jw_threshold = 0.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = config();
  c.jw_threshold = 1.5;
  EXPECT_THROW(c.validate(), ConfigError);
  c = config();
  c.d_max = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = config();
  c.enabled_sources = {};
  EXPECT_THROW(Pipeline(fixture::resources(), c), ConfigError);
  c.mode = Mode::BiLoc;
  EXPECT_NO_THROW(c.validate());
  EXPECT_THROW(Pipeline(nullptr, config()), ConfigError);
}

TEST(PipelineConfig, ModeNames) {
  EXPECT_EQ(parse_mode("geoloc"), Mode::GeoLoc);
  EXPECT_EQ(parse_mode("BiLoc"), Mode::BiLoc);
  EXPECT_EQ(to_string(Mode::UniLoc), "UNILOC");
  EXPECT_FALSE(parse_mode("triloc"));
}

TEST(Resources, MissingFilesAreConfigErrors) {
  ResourcePaths paths;
  paths.gazetteer = fixture::data_dir() / "missing.tsv";
  paths.model = fixture::data_dir() / "unigrams.tsv";
  paths.lexicon_dir = fixture::lexicon_dir();
  EXPECT_THROW(Resources::load(paths), ConfigError);
  paths.gazetteer = fixture::gazetteer_path();
  paths.model = fixture::data_dir() / "nope.tsv";
  EXPECT_THROW(Resources::load(paths), ConfigError);
}

TEST(Resources, EmptyGazetteerRejected) {
  Resources r;
  EXPECT_THROW(r.validate(), ConfigError);
}
