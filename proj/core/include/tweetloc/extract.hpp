#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tweetloc/dependency.hpp"
#include "tweetloc/enum_set.hpp"
#include "tweetloc/tagger.hpp"
#include "tweetloc/text.hpp"

namespace tweetloc {

enum class CandidateSource { ProperChunk, SuffixMatch, DepProximity, NounPhrase, HashtagOriginal, HashtagSegment };
enum class Cue { PrecedingPreposition, SuffixTerm, FuzzySuffix };

using SourceSet = EnumSet<CandidateSource>;
using CueSet = EnumSet<Cue>;

inline constexpr SourceSet kAllSources{CandidateSource::ProperChunk, CandidateSource::SuffixMatch,
                                       CandidateSource::DepProximity, CandidateSource::NounPhrase,
                                       CandidateSource::HashtagOriginal, CandidateSource::HashtagSegment};

std::string_view to_string(CandidateSource source);
std::string_view to_string(Cue cue);
std::optional<CandidateSource> parse_candidate_source(std::string_view name);
std::optional<Cue> parse_cue(std::string_view name);

struct CandidateMention {
  std::string phrase;
  // Inclusive indices into the tagged token stream.
  std::pair<std::size_t, std::size_t> token_span{0, 0};
  SourceSet sources;
  CueSet cues;
  std::optional<double> fuzzy_suffix_score;
  // DepProximity evidence came from a supplied parse rather than the
  // token-window fallback.
  bool parse_supported = false;

  friend bool operator==(const CandidateMention&, const CandidateMention&) = default;
};

// Lowercase, whitespace-collapsed phrase.
std::string dedup_key(std::string_view phrase);

class SuffixLexicon {
 public:
  SuffixLexicon() = default;
  explicit SuffixLexicon(std::map<std::string, WordSet> categories);

  // Reads suffix_<category>.txt for landform, road, building, town, direction.
  static SuffixLexicon load(const std::filesystem::path& dir);

  bool contains(std::string_view lower_term) const { return terms_.contains(lower_term); }
  bool empty() const { return terms_.empty(); }
  const std::map<std::string, WordSet>& categories() const { return categories_; }

  // Number of tokens of the longest term starting at tokens[pos], 0 if none.
  // Multi-word terms only match consecutive WORD tokens.
  std::size_t match_at(std::span<const TaggedToken> tokens, std::size_t pos) const;

  // Number of trailing words of a normalized phrase forming a term, 0 if none.
  std::size_t trailing_match(const std::vector<std::string_view>& words) const;

  // Highest Jaro-Winkler similarity against single-word terms.
  double best_similarity(std::string_view lower_word) const;

 private:
  std::map<std::string, WordSet> categories_;
  WordSet terms_;
  std::vector<std::string> single_word_terms_;
  std::size_t max_words_ = 0;
};

class EmergencyLexicon {
 public:
  EmergencyLexicon() = default;
  explicit EmergencyLexicon(std::map<std::string, WordSet> categories);

  // Reads emergency_disease.txt and emergency_disaster.txt.
  static EmergencyLexicon load(const std::filesystem::path& dir);

  // Lowercase equality, or equality after stripping a plural 's'.
  bool matches(std::string_view word) const;
  bool empty() const { return terms_.empty(); }
  const std::map<std::string, WordSet>& categories() const { return categories_; }

 private:
  std::map<std::string, WordSet> categories_;
  WordSet terms_;
};

// Runs that start at a proper noun and continue through proper nouns,
// adjectives and delimiters, split at the delimiters. Each piece with a
// proper noun is a candidate. A following suffix term (exact, or fuzzy with
// Jaro-Winkler >= jw_threshold) is absorbed into a second, longer candidate.
// No phrase built by the candidate generators crosses a hashtag boundary.
std::vector<CandidateMention> chunk_proper_nouns(std::span<const TaggedToken> tagged, const SuffixLexicon& suffixes,
                                                 const TagLexicons& lexicons, double jw_threshold);

// For each suffix term, phrases made of the one and two preceding words
// followed by the term. Prepositions, delimiters, stop words and emergency
// terms cannot precede.
std::vector<CandidateMention> suffix_pattern_candidates(std::span<const TaggedToken> tagged,
                                                        const SuffixLexicon& suffixes,
                                                        const EmergencyLexicon& emergencies);

// Proper nouns, nouns and adjectives within max_distance hops of an
// emergency word; adjacent hits are merged into one phrase.
// Throws ContractError if max_distance < 1 or the graph size differs.
std::vector<CandidateMention> dependency_candidates(std::span<const TaggedToken> tagged, const DependencyGraph& graph,
                                                   const EmergencyLexicon& emergencies, int max_distance);

// Maximal runs of adjectives, nouns and proper nouns holding at least one
// noun or proper noun.
std::vector<CandidateMention> noun_phrase_candidates(std::span<const TaggedToken> tagged);

// Union by dedup_key: sources and cues are merged, the first span is kept.
// Output is ordered by span start, longer spans first.
std::vector<CandidateMention> merge_candidates(std::vector<CandidateMention> candidates);

}  // namespace tweetloc
