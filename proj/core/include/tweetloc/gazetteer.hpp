#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tweetloc/extract.hpp"
#include "tweetloc/text.hpp"

namespace tweetloc {

using GeonameId = std::uint64_t;

struct GazetteerEntry {
  GeonameId geoname_id = 0;
  std::string name;
  std::string ascii_name;
  std::vector<std::string> alternate_names;
  double lat = 0.0;
  double lon = 0.0;
  char feature_class = ' ';
  std::string feature_code;
  std::string country_code;
  std::string admin1;
  std::uint64_t population = 0;

  friend bool operator==(const GazetteerEntry&, const GazetteerEntry&) = default;
};

// In-memory name index. Immutable once loading finishes, safe for
// concurrent lookups.
class GazetteerIndex {
 public:
  // Throws ContractError on a duplicate id or out-of-range coordinates.
  void add(GazetteerEntry entry);

  std::size_t entry_count() const { return entries_.size(); }
  // Longest indexed name in words.
  std::size_t max_ngram() const { return max_ngram_; }
  std::size_t skipped_rows() const { return skipped_rows_; }
  void note_skipped_row() { ++skipped_rows_; }

  const GazetteerEntry* find_entry(GeonameId id) const;
  std::span<const GazetteerEntry> entries() const { return entries_; }

  // Entries indexed under a normalized name, population descending then id
  // ascending.
  std::vector<const GazetteerEntry*> find(std::string_view normalized_name) const;

  // Normalized names under which the entry is indexed.
  std::vector<std::string> indexed_names(const GazetteerEntry& entry) const;

 private:
  std::vector<GazetteerEntry> entries_;
  std::unordered_map<GeonameId, std::uint32_t> by_id_;
  std::unordered_map<std::string, std::vector<std::uint32_t>, StringHash, std::equal_to<>> names_;
  std::size_t max_ngram_ = 0;
  std::size_t skipped_rows_ = 0;
};

struct BoundingBox {
  double min_lat = -90.0;
  double max_lat = 90.0;
  double min_lon = -180.0;
  double max_lon = 180.0;

  bool contains(double lat, double lon) const {
    return lat >= min_lat && lat <= max_lat && lon >= min_lon && lon <= max_lon;
  }
};

struct GeonamesFilter {
  std::optional<std::string> country;  // two-letter code
  std::optional<BoundingBox> box;
};

// Reads the 19-column tab-separated GeoNames dump. Throws LoadError with the
// line number on a wrong column count; rows with unparseable coordinates
// are skipped and counted in skipped_rows().
GazetteerIndex load_geonames(std::istream& in, const GeonamesFilter& filter = {});

// Versioned snapshot of an index; reloads without re-filtering.
void save_snapshot(const GazetteerIndex& index, std::ostream& out);
GazetteerIndex load_snapshot(std::istream& in);

enum class MatchKind { ExactName, AlternateName, SuffixDropped, SubNgram };

std::string_view to_string(MatchKind kind);
std::optional<MatchKind> parse_match_kind(std::string_view name);

struct GazetteerMatch {
  const GazetteerEntry* entry = nullptr;
  MatchKind kind = MatchKind::ExactName;
  std::string matched_text;  // normalized
};

struct LookupOptions {
  // Enables the suffix-dropping stage.
  const SuffixLexicon* suffixes = nullptr;
  // Sub-n-grams for which this returns true are not tried. Arguments are the
  // phrase's original words and the [first, last) word range of the n-gram.
  std::function<bool(std::span<const std::string_view>, std::size_t, std::size_t)> skip_ngram;
};

// Stages, first non-empty wins:
//   full phrase                               -> ExactName / AlternateName
//   phrase minus a trailing suffix term       -> SuffixDropped
//   longest sub-n-gram, leftmost first        -> SubNgram
std::vector<GazetteerMatch> lookup(const GazetteerIndex& index, std::string_view phrase,
                                   const LookupOptions& options = {});

struct AmbiguityGuard {
  bool enabled = true;
  // Common English words that are also place names ("song", "monsoon").
  WordSet common_words;
};

struct LocatedMention {
  CandidateMention candidate;
  GeonameId entry_id = 0;
  std::string matched_text;
  double lat = 0.0;
  double lon = 0.0;
  MatchKind match_kind = MatchKind::ExactName;

  friend bool operator==(const LocatedMention&, const LocatedMention&) = default;
};

// True if the guard rejects the candidate outright: a single lowercase word
// that is a common word and has no cue or supplied-parse proximity.
bool guard_rejects(const AmbiguityGuard& guard, const CandidateMention& candidate);

// Resolves each candidate to its best match, drops guarded candidates and
// keeps the first mention per geoname id. With the guard on, single common
// lowercase words are also never used as sub-n-gram matches.
std::vector<LocatedMention> verify_candidates(const GazetteerIndex& index, std::span<const CandidateMention> candidates,
                                              const AmbiguityGuard& guard, const SuffixLexicon* suffixes = nullptr);

}  // namespace tweetloc
