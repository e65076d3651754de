#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>

#include "fixture.hpp"
#include "tweetloc/error.hpp"
#include "tweetloc/extract.hpp"

using namespace tweetloc;

namespace {

const Resources& res() { return *fixture::resources(); }

std::vector<TaggedToken> tag(std::string_view text) {
  auto view = tagging_view(normalize_tweet(text));
  return tag_tokens(view, res().tag_lexicons);
}

std::vector<TaggedToken> tagged_as(std::vector<std::pair<std::string, PosTag>> items) {
  std::vector<TaggedToken> out;
  std::size_t pos = 0;
  for (auto& [surface, t] : items) {
    TaggedToken tt;
    tt.token.surface = surface;
    tt.token.span = {pos, pos + surface.size()};
    tt.token.kind = t == PosTag::Delim ? TokenKind::Delim : TokenKind::Word;
    tt.tag = t;
    pos += surface.size() + 1;
    out.push_back(std::move(tt));
  }
  return out;
}

const CandidateMention* find(const std::vector<CandidateMention>& cands, std::string_view phrase) {
  for (const auto& c : cands)
    if (c.phrase == phrase) return &c;
  return nullptr;
}

std::vector<std::string> phrases(const std::vector<CandidateMention>& cands) {
  std::vector<std::string> out;
  for (const auto& c : cands) out.push_back(c.phrase);
  return out;
}

}  // namespace

TEST(Chunking, VinayakHospitalAndGujranwalaTown) {
  auto cands = chunk_proper_nouns(tag("At Vinayak hospital, Gujranwala town,delhi"), res().suffixes, res().tag_lexicons, 0.9);
  auto* vinayak = find(cands, "Vinayak hospital");
  ASSERT_NE(vinayak, nullptr);
  EXPECT_TRUE(vinayak->cues.contains(Cue::PrecedingPreposition));
  EXPECT_TRUE(vinayak->cues.contains(Cue::SuffixTerm));
  EXPECT_TRUE(vinayak->sources.contains(CandidateSource::ProperChunk));
  EXPECT_EQ(vinayak->token_span, (std::pair<std::size_t, std::size_t>{1, 2}));
  auto* gujranwala = find(cands, "Gujranwala town");
  ASSERT_NE(gujranwala, nullptr);
  EXPECT_TRUE(gujranwala->cues.contains(Cue::SuffixTerm));
  EXPECT_FALSE(gujranwala->cues.contains(Cue::PrecedingPreposition));
}

TEST(Chunking, SingleRunAndDelimiterSplit) {
  using enum PosTag;
  auto one = chunk_proper_nouns(tagged_as({{"Tamil", Propn}, {"Nadu", Propn}}), res().suffixes, res().tag_lexicons, 0.9);
  EXPECT_EQ(phrases(one), (std::vector<std::string>{"Tamil Nadu"}));
  auto two = chunk_proper_nouns(tagged_as({{"Delhi", Propn}, {",", Delim}, {"Kolkata", Propn}}), res().suffixes,
                                res().tag_lexicons, 0.9);
  EXPECT_EQ(phrases(two), (std::vector<std::string>{"Delhi", "Kolkata"}));
}

TEST(Chunking, RunsStopAtHashtags) {
  auto cands = chunk_proper_nouns(tag("Dengue in Tamil Nadu #ChennaiFloods"), res().suffixes, res().tag_lexicons, 0.9);
  EXPECT_NE(find(cands, "Tamil Nadu"), nullptr);
  EXPECT_NE(find(cands, "Chennai Floods"), nullptr);
  for (const auto& c : cands) EXPECT_EQ(c.phrase.find("Nadu Chennai"), std::string::npos) << c.phrase;
}

TEST(Chunking, FuzzySuffixAbsorbed) {
  using enum PosTag;
  auto cands = chunk_proper_nouns(tagged_as({{"May", Propn}, {"Hosp", Propn}}), res().suffixes, res().tag_lexicons, 0.9);
  auto* c = find(cands, "May Hosp");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->cues.contains(Cue::FuzzySuffix));
  ASSERT_TRUE(c->fuzzy_suffix_score);
  EXPECT_GE(*c->fuzzy_suffix_score, 0.9);
  EXPECT_NE(find(cands, "May"), nullptr);
  // With a stricter threshold "Hosp" no longer counts as a suffix.
  auto strict = chunk_proper_nouns(tagged_as({{"May", Propn}, {"Hosp", Propn}}), res().suffixes, res().tag_lexicons, 0.95);
  ASSERT_NE(find(strict, "May Hosp"), nullptr);
  EXPECT_FALSE(find(strict, "May Hosp")->cues.contains(Cue::FuzzySuffix));
}

TEST(Chunking, NoProperNounNoCandidate) {
  using enum PosTag;
  EXPECT_TRUE(chunk_proper_nouns(tagged_as({{"floods", Noun}, {"here", Other}}), res().suffixes, res().tag_lexicons, 0.9)
                  .empty());
  EXPECT_TRUE(chunk_proper_nouns({}, res().suffixes, res().tag_lexicons, 0.9).empty());
}

TEST(SuffixPatterns, LowercaseHospital) {
  auto cands = suffix_pattern_candidates(tag("urgent b+ platelets at vinayak hospital"), res().suffixes, res().emergencies);
  EXPECT_NE(find(cands, "vinayak hospital"), nullptr);
  for (const auto& c : cands) EXPECT_EQ(c.phrase.find("at "), std::string::npos) << c.phrase;
  for (const auto& c : cands) EXPECT_TRUE(c.sources.contains(CandidateSource::SuffixMatch));
}

TEST(SuffixPatterns, TownAndExcludedPredecessor) {
  auto town = suffix_pattern_candidates(tag("gujranwala town"), res().suffixes, res().emergencies);
  EXPECT_EQ(phrases(town), (std::vector<std::string>{"gujranwala town"}));
  EXPECT_TRUE(suffix_pattern_candidates(tag("the hospital"), res().suffixes, res().emergencies).empty());
  EXPECT_TRUE(suffix_pattern_candidates(tag("dengue hospital"), res().suffixes, res().emergencies).empty());
}

TEST(SuffixPatterns, TwoWordPrefix) {
  auto cands = suffix_pattern_candidates(tag("marina beach road"), res().suffixes, res().emergencies);
  EXPECT_NE(find(cands, "marina beach road"), nullptr);
}

TEST(DependencyCandidates, MumbaiParseFindsMumbai) {
  const char* text = "Mumbai lost its mudflats and wetlands, now floods with every monsoon.";
  auto tagged = tag(text);
  std::vector<Token> tokens;
  for (const auto& t : tagged) tokens.push_back(t.token);
  std::ifstream in(fixture::mumbai_parse_path());
  auto g = align_parse(read_conllu(in).at(0), tokens);
  auto cands = dependency_candidates(tagged, g, res().emergencies, 3);
  auto* mumbai = find(cands, "Mumbai");
  ASSERT_NE(mumbai, nullptr);
  EXPECT_TRUE(mumbai->sources.contains(CandidateSource::DepProximity));
  EXPECT_TRUE(mumbai->parse_supported);
  // In the token window Mumbai is 7 words from floods.
  auto window = dependency_candidates(tagged, token_window_graph(tokens), res().emergencies, 3);
  EXPECT_EQ(find(window, "Mumbai"), nullptr);
}

TEST(DependencyCandidates, WindowDengueInKerala) {
  auto tagged = tag("dengue in Kerala");
  std::vector<Token> tokens;
  for (const auto& t : tagged) tokens.push_back(t.token);
  auto cands = dependency_candidates(tagged, token_window_graph(tokens), res().emergencies, 3);
  auto* kerala = find(cands, "Kerala");
  ASSERT_NE(kerala, nullptr);
  EXPECT_FALSE(kerala->parse_supported);
  auto calm = tag("nice day in Kerala");
  std::vector<Token> calm_tokens;
  for (const auto& t : calm) calm_tokens.push_back(t.token);
  EXPECT_TRUE(dependency_candidates(calm, token_window_graph(calm_tokens), res().emergencies, 3).empty());
}

TEST(DependencyCandidates, ContractChecks) {
  auto tagged = tag("dengue in Kerala");
  EXPECT_THROW(dependency_candidates(tagged, DependencyGraph(tagged.size()), res().emergencies, 0), ContractError);
  EXPECT_THROW(dependency_candidates(tagged, DependencyGraph(2), res().emergencies, 3), ContractError);
}

TEST(NounPhrases, Examples) {
  using enum PosTag;
  EXPECT_EQ(phrases(noun_phrase_candidates(tagged_as({{"silicon", Adj}, {"city", Noun}}))),
            (std::vector<std::string>{"silicon city"}));
  EXPECT_EQ(phrases(noun_phrase_candidates(tagged_as({{"in", Adp}, {"Kerala", Propn}}))),
            (std::vector<std::string>{"Kerala"}));
  EXPECT_TRUE(noun_phrase_candidates({}).empty());
  auto split = noun_phrase_candidates(tag("dengue in Tamil Nadu #ChennaiFloods"));
  EXPECT_NE(find(split, "Tamil Nadu"), nullptr);
  EXPECT_NE(find(split, "Chennai Floods"), nullptr);
  EXPECT_TRUE(noun_phrase_candidates(tagged_as({{"northern", Adj}})).empty());
}

TEST(Lexicons, TableExamplesPresent) {
  for (std::string t : {"river", "street", "hospital", "city", "west"}) EXPECT_TRUE(res().suffixes.contains(t)) << t;
  for (std::string t : {"dengue", "flood", "floods", "earthquake", "tsunami", "Floods"})
    EXPECT_TRUE(res().emergencies.matches(t)) << t;
  EXPECT_FALSE(res().emergencies.matches("flo"));
}

TEST(Merge, UnionsSourcesAndCues) {
  CandidateMention a;
  a.phrase = "Kerala";
  a.token_span = {2, 2};
  a.sources = {CandidateSource::ProperChunk};
  a.cues = {Cue::PrecedingPreposition};
  CandidateMention b = a;
  b.phrase = "kerala";
  b.sources = {CandidateSource::NounPhrase};
  b.cues = {};
  b.parse_supported = true;
  CandidateMention c;
  c.phrase = "dengue in Kerala";
  c.token_span = {0, 2};
  c.sources = {CandidateSource::NounPhrase};
  auto merged = merge_candidates({a, b, c});
  ASSERT_EQ(merged.size(), 2u);
  EXPECT_EQ(merged[0].phrase, "dengue in Kerala");
  EXPECT_EQ(merged[1].phrase, "Kerala");
  EXPECT_TRUE(merged[1].sources.contains(CandidateSource::ProperChunk));
  EXPECT_TRUE(merged[1].sources.contains(CandidateSource::NounPhrase));
  EXPECT_TRUE(merged[1].cues.contains(Cue::PrecedingPreposition));
  EXPECT_TRUE(merged[1].parse_supported);
}

TEST(Names, RoundTrip) {
  for (auto s : {CandidateSource::ProperChunk, CandidateSource::SuffixMatch, CandidateSource::DepProximity,
                 CandidateSource::NounPhrase, CandidateSource::HashtagOriginal, CandidateSource::HashtagSegment})
    EXPECT_EQ(parse_candidate_source(to_string(s)), s);
  for (auto c : {Cue::PrecedingPreposition, Cue::SuffixTerm, Cue::FuzzySuffix}) EXPECT_EQ(parse_cue(to_string(c)), c);
  EXPECT_EQ(to_string(CandidateSource::DepProximity), "DEP_PROXIMITY");
  EXPECT_FALSE(parse_cue("nope"));
}
