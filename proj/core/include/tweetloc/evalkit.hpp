#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "tweetloc/gazetteer.hpp"
#include "tweetloc/normalize.hpp"
#include "tweetloc/pipeline.hpp"

namespace tweetloc {

struct GoldRecord {
  RawTweet tweet;
  std::vector<std::string> gold_locations;
};

// One JSON object per line: id, text, created_at, gold (array of names).
// Throws LoadError with the line number on a malformed record.
std::vector<GoldRecord> read_gold_corpus(std::istream& in);

using Extractor = std::function<ExtractionResult(const RawTweet&)>;

struct MatchRule {
  // Also accept the resolved entry's name and alternate names. Needs index.
  bool use_entry_names = true;
  const GazetteerIndex* index = nullptr;
};

struct TweetEvaluation {
  std::string id;
  std::vector<std::string> retrieved;
  std::vector<std::string> correct;
  std::vector<std::string> matched;  // gold names matched one-to-one
  bool failed = false;
};

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
  std::size_t matched_total = 0;
  std::size_t retrieved_total = 0;
  std::size_t correct_total = 0;
  std::vector<TweetEvaluation> per_tweet;
  std::chrono::nanoseconds total_elapsed{0};
  std::size_t tweets_evaluated = 0;
};

// Harmonic mean, 0 when p + r == 0.
double f_score(double precision, double recall);

// Micro-averaged precision and recall over pooled counts. Each gold name is
// matched to at most one retrieved mention. An extractor exception counts the
// tweet as retrieving nothing. Throws ContractError on an empty corpus.
EvalReport evaluate(std::span<const GoldRecord> corpus, const Extractor& extractor, const MatchRule& rule = {});

struct TimingResult {
  std::chrono::nanoseconds mean_per_tweet{0};
  std::chrono::nanoseconds total{0};
};

// Best total over `repeats` passes. Throws ContractError if repeats < 1.
TimingResult time_extractor(std::span<const RawTweet> corpus, const Extractor& extractor, int repeats = 1);

// Machine-readable summary with Precision, Recall, F-score and Timing columns.
std::string report_json(const std::string& method, const EvalReport& report);

}  // namespace tweetloc
