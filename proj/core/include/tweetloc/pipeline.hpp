#pragma once

#include <chrono>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tweetloc/dependency.hpp"
#include "tweetloc/extract.hpp"
#include "tweetloc/gazetteer.hpp"
#include "tweetloc/normalize.hpp"
#include "tweetloc/segment.hpp"
#include "tweetloc/tagger.hpp"

namespace tweetloc {

enum class Mode { GeoLoc, UniLoc, BiLoc };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

struct PipelineConfig {
  double jw_threshold = 0.90;
  int d_max = 3;
  bool guard_enabled = true;
  GraphSource dependency_source = GraphSource::Supplied;
  SourceSet enabled_sources = kAllSources;
  Mode mode = Mode::GeoLoc;

  // Throws ConfigError when a field is out of range.
  void validate() const;
};

// Optional per-tweet inputs from upstream tools.
struct TweetAnnotations {
  // Parallel to tagging_view(normalize_tweet(text)).
  std::optional<std::vector<PosTag>> pos_tags;
  std::optional<ConlluSentence> parse;
};

struct ResourcePaths {
  std::filesystem::path gazetteer;   // GeoNames dump or snapshot
  std::filesystem::path model;       // unigram counts
  std::filesystem::path lexicon_dir;
  std::optional<std::filesystem::path> parses;  // CoNLL-U, sentences keyed by sent_id
  GeonamesFilter filter;
};

struct Resources {
  GazetteerIndex gazetteer;
  UnigramModel model;
  TagLexicons tag_lexicons;
  SuffixLexicon suffixes;
  EmergencyLexicon emergencies;
  // Union of the stoplist, common nouns and adjectives.
  WordSet common_words;
  std::unordered_map<std::string, ConlluSentence> parses;

  // Throws ConfigError naming the missing file, LoadError on bad content.
  static Resources load(const ResourcePaths& paths);

  // Throws ConfigError if a required resource is empty.
  void validate() const;

  // Recomputes common_words from tag_lexicons.
  void refresh_common_words();
};

struct ExtractionResult {
  std::string tweet_id;
  std::vector<LocatedMention> mentions;
  bool untagged = true;
  std::chrono::nanoseconds elapsed{0};

  friend bool operator==(const ExtractionResult&, const ExtractionResult&) = default;
};

// Per-tweet location extraction over shared immutable resources. Safe to
// call from several threads at once.
class Pipeline {
 public:
  // Throws ConfigError on invalid config or missing resources.
  Pipeline(std::shared_ptr<const Resources> resources, PipelineConfig config);

  ExtractionResult extract(const RawTweet& tweet, const TweetAnnotations& annotations = {}) const;

  // Candidates before gazetteer verification, GEOLOC mode only.
  std::vector<CandidateMention> candidates(const RawTweet& tweet, const TweetAnnotations& annotations = {}) const;

  const PipelineConfig& config() const { return config_; }
  const Resources& resources() const { return *resources_; }

 private:
  ExtractionResult extract_geoloc(const RawTweet& tweet, const TweetAnnotations& annotations) const;
  ExtractionResult extract_baseline(const RawTweet& tweet) const;

  std::shared_ptr<const Resources> resources_;
  PipelineConfig config_;
  AmbiguityGuard guard_;
};

ExtractionResult extract_locations(const RawTweet& tweet, const PipelineConfig& config,
                                   std::shared_ptr<const Resources> resources);

// UNILOC looks up every word, BILOC every word and adjacent word pair, exact
// names only and without the ambiguity guard. Throws ConfigError for GEOLOC.
ExtractionResult baseline_extract(const RawTweet& tweet, const PipelineConfig& config,
                                  std::shared_ptr<const Resources> resources);

}  // namespace tweetloc
