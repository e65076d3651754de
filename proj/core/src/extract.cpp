#include "tweetloc/extract.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "tweetloc/error.hpp"
#include "tweetloc/similarity.hpp"

namespace tweetloc {

namespace {

constexpr std::array<std::pair<CandidateSource, std::string_view>, 6> kSourceNames{{
    {CandidateSource::ProperChunk, "PROPER_CHUNK"},
    {CandidateSource::SuffixMatch, "SUFFIX_MATCH"},
    {CandidateSource::DepProximity, "DEP_PROXIMITY"},
    {CandidateSource::NounPhrase, "NOUN_PHRASE"},
    {CandidateSource::HashtagOriginal, "HASHTAG_ORIGINAL"},
    {CandidateSource::HashtagSegment, "HASHTAG_SEGMENT"},
}};

constexpr std::array<std::pair<Cue, std::string_view>, 3> kCueNames{{
    {Cue::PrecedingPreposition, "PRECEDING_PREPOSITION"},
    {Cue::SuffixTerm, "SUFFIX_TERM"},
    {Cue::FuzzySuffix, "FUZZY_SUFFIX"},
}};

std::string phrase_of(std::span<const TaggedToken> tagged, std::size_t first, std::size_t last) {
  std::string out;
  for (std::size_t i = first; i <= last; ++i) {
    if (!tagged[i].token.is_word()) continue;
    if (!out.empty()) out.push_back(' ');
    out += tagged[i].token.surface;
  }
  return out;
}

CandidateMention make_candidate(std::span<const TaggedToken> tagged, std::size_t first, std::size_t last,
                                CandidateSource source, CueSet cues = {}) {
  CandidateMention c;
  c.phrase = phrase_of(tagged, first, last);
  c.token_span = {first, last};
  c.sources.insert(source);
  c.cues = cues;
  return c;
}

}  // namespace

std::string_view to_string(CandidateSource source) {
  for (auto [s, name] : kSourceNames)
    if (s == source) return name;
  return "";
}

std::string_view to_string(Cue cue) {
  for (auto [c, name] : kCueNames)
    if (c == cue) return name;
  return "";
}

std::optional<CandidateSource> parse_candidate_source(std::string_view name) {
  for (auto [s, n] : kSourceNames)
    if (n == name) return s;
  return std::nullopt;
}

std::optional<Cue> parse_cue(std::string_view name) {
  for (auto [c, n] : kCueNames)
    if (n == name) return c;
  return std::nullopt;
}

std::string dedup_key(std::string_view phrase) { return normalize_name(phrase); }

SuffixLexicon::SuffixLexicon(std::map<std::string, WordSet> categories) : categories_(std::move(categories)) {
  for (const auto& [name, words] : categories_) {
    for (const auto& w : words) {
      terms_.insert(w);
      std::size_t n = split_whitespace(w).size();
      max_words_ = std::max(max_words_, n);
      if (n == 1) single_word_terms_.push_back(w);
    }
  }
  std::sort(single_word_terms_.begin(), single_word_terms_.end());
  single_word_terms_.erase(std::unique(single_word_terms_.begin(), single_word_terms_.end()), single_word_terms_.end());
}

SuffixLexicon SuffixLexicon::load(const std::filesystem::path& dir) {
  std::map<std::string, WordSet> cats;
  for (const char* name : {"landform", "road", "building", "town", "direction"})
    cats[name] = read_word_list(dir / ("suffix_" + std::string(name) + ".txt"));
  SuffixLexicon lex(std::move(cats));
  if (lex.empty()) throw ConfigError("suffix lexicon in " + dir.string() + " is empty");
  return lex;
}

std::size_t SuffixLexicon::match_at(std::span<const TaggedToken> tokens, std::size_t pos) const {
  std::string key;
  std::size_t best = 0;
  for (std::size_t n = 1; n <= max_words_ && pos + n <= tokens.size(); ++n) {
    const Token& t = tokens[pos + n - 1].token;
    if (!t.is_word()) break;
    if (n > 1) key.push_back(' ');
    key += to_lower_ascii(t.surface);
    if (terms_.contains(key)) best = n;
  }
  return best;
}

std::size_t SuffixLexicon::trailing_match(const std::vector<std::string_view>& words) const {
  std::size_t limit = std::min(max_words_, words.size());
  for (std::size_t n = limit; n >= 1; --n) {
    std::string key;
    for (std::size_t i = words.size() - n; i < words.size(); ++i) {
      if (!key.empty()) key.push_back(' ');
      key += to_lower_ascii(words[i]);
    }
    if (terms_.contains(key)) return n;
  }
  return 0;
}

double SuffixLexicon::best_similarity(std::string_view lower_word) const {
  double best = 0.0;
  for (const auto& term : single_word_terms_) best = std::max(best, jaro_winkler(lower_word, term));
  return best;
}

EmergencyLexicon::EmergencyLexicon(std::map<std::string, WordSet> categories) : categories_(std::move(categories)) {
  for (const auto& [name, words] : categories_) terms_.insert(words.begin(), words.end());
}

EmergencyLexicon EmergencyLexicon::load(const std::filesystem::path& dir) {
  std::map<std::string, WordSet> cats;
  cats["disease"] = read_word_list(dir / "emergency_disease.txt");
  cats["disaster"] = read_word_list(dir / "emergency_disaster.txt");
  EmergencyLexicon lex(std::move(cats));
  if (lex.empty()) throw ConfigError("emergency lexicon in " + dir.string() + " is empty");
  return lex;
}

bool EmergencyLexicon::matches(std::string_view word) const {
  std::string lower = to_lower_ascii(word);
  if (terms_.contains(lower)) return true;
  if (lower.size() > 1 && lower.back() == 's') {
    lower.pop_back();
    return terms_.contains(lower);
  }
  return false;
}

namespace {

// A hashtag is its own unit; phrases do not cross into or out of one.
bool same_unit(std::span<const TaggedToken> tagged, std::size_t a, std::size_t b) {
  return tagged[a].token.hashtag_origin == tagged[b].token.hashtag_origin;
}

}  // namespace

std::vector<CandidateMention> chunk_proper_nouns(std::span<const TaggedToken> tagged, const SuffixLexicon& suffixes,
                                                 const TagLexicons& lexicons, double jw_threshold) {
  if (!(jw_threshold > 0.0 && jw_threshold <= 1.0)) throw ContractError("jaro-winkler threshold must be in (0, 1]");
  std::vector<CandidateMention> out;
  const std::size_t n = tagged.size();

  // Fuzzy suffix: a word that is not itself a term but resembles one.
  auto fuzzy_score = [&](const Token& t) -> std::optional<double> {
    if (!t.is_word()) return std::nullopt;
    std::string lower = to_lower_ascii(t.surface);
    if (suffixes.contains(lower)) return std::nullopt;
    double s = suffixes.best_similarity(lower);
    if (s >= jw_threshold) return s;
    return std::nullopt;
  };

  std::size_t i = 0;
  while (i < n) {
    if (tagged[i].tag != PosTag::Propn) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end + 1 < n) {
      PosTag t = tagged[run_end + 1].tag;
      if (t != PosTag::Propn && t != PosTag::Adj && t != PosTag::Delim) break;
      if (!same_unit(tagged, run_end, run_end + 1)) break;
      ++run_end;
    }

    CueSet run_cues;
    if (i > 0 && tagged[i - 1].tag == PosTag::Adp &&
        lexicons.location_prepositions.contains(to_lower_ascii(tagged[i - 1].token.surface)))
      run_cues.insert(Cue::PrecedingPreposition);

    std::size_t p = i;
    while (p <= run_end) {
      if (tagged[p].tag == PosTag::Delim) {
        ++p;
        continue;
      }
      std::size_t q = p;
      while (q + 1 <= run_end && tagged[q + 1].tag != PosTag::Delim) ++q;
      bool has_propn = false;
      for (std::size_t k = p; k <= q; ++k) has_propn |= tagged[k].tag == PosTag::Propn;
      if (has_propn) {
        out.push_back(make_candidate(tagged, p, q, CandidateSource::ProperChunk, run_cues));

        std::vector<std::string_view> words;
        for (std::size_t k = p; k <= q; ++k) words.push_back(tagged[k].token.surface);
        std::size_t inner = q > p ? suffixes.trailing_match(words) : 0;
        if (inner > 0 && inner < words.size()) {
          // The piece already ends in a suffix term: also offer it without.
          out.back().cues.insert(Cue::SuffixTerm);
          out.push_back(make_candidate(tagged, p, q - inner, CandidateSource::ProperChunk, run_cues));
        } else if (auto s = q > p ? fuzzy_score(tagged[q].token) : std::nullopt) {
          out.back().cues.insert(Cue::FuzzySuffix);
          out.back().fuzzy_suffix_score = *s;
          out.push_back(make_candidate(tagged, p, q - 1, CandidateSource::ProperChunk, run_cues));
        } else if (q + 1 < n && q == run_end) {
          if (std::size_t m = suffixes.match_at(tagged, q + 1); m > 0) {
            CueSet cues = run_cues;
            cues.insert(Cue::SuffixTerm);
            out.push_back(make_candidate(tagged, p, q + m, CandidateSource::ProperChunk, cues));
          } else if (tagged[q + 1].tag != PosTag::Adp) {
            if (auto fs = fuzzy_score(tagged[q + 1].token)) {
              CueSet cues = run_cues;
              cues.insert(Cue::FuzzySuffix);
              out.push_back(make_candidate(tagged, p, q + 1, CandidateSource::ProperChunk, cues));
              out.back().fuzzy_suffix_score = *fs;
            }
          }
        }
      }
      p = q + 1;
    }
    i = run_end + 1;
  }
  return out;
}

std::vector<CandidateMention> suffix_pattern_candidates(std::span<const TaggedToken> tagged,
                                                        const SuffixLexicon& suffixes,
                                                        const EmergencyLexicon& emergencies) {
  std::vector<CandidateMention> out;
  auto admissible = [&](std::size_t k) {
    const TaggedToken& t = tagged[k];
    if (!t.token.is_word()) return false;
    if (t.tag == PosTag::Adp || t.tag == PosTag::Delim || t.tag == PosTag::Other) return false;
    return !emergencies.matches(t.token.surface);
  };
  for (std::size_t pos = 1; pos < tagged.size(); ++pos) {
    std::size_t m = suffixes.match_at(tagged, pos);
    if (m == 0) continue;
    const std::size_t last = pos + m - 1;
    for (std::size_t k = 1; k <= 2 && k <= pos; ++k) {
      if (!admissible(pos - k)) break;
      out.push_back(make_candidate(tagged, pos - k, last, CandidateSource::SuffixMatch, {Cue::SuffixTerm}));
    }
  }
  return out;
}

std::vector<CandidateMention> dependency_candidates(std::span<const TaggedToken> tagged, const DependencyGraph& graph,
                                                   const EmergencyLexicon& emergencies, int max_distance) {
  if (max_distance < 1) throw ContractError("d_max must be at least 1");
  if (graph.size() != tagged.size())
    throw ContractError("dependency graph has " + std::to_string(graph.size()) + " nodes for " +
                        std::to_string(tagged.size()) + " tokens");
  const std::size_t n = tagged.size();
  std::vector<bool> emergency(n, false);
  for (std::size_t i = 0; i < n; ++i)
    emergency[i] = tagged[i].token.is_word() && emergencies.matches(tagged[i].token.surface);

  std::vector<bool> hit(n, false);
  for (std::size_t e = 0; e < n; ++e) {
    if (!emergency[e]) continue;
    auto dist = graph.distances_from(e);
    for (std::size_t i = 0; i < n; ++i) {
      if (emergency[i] || !dist[i] || *dist[i] > static_cast<std::size_t>(max_distance)) continue;
      PosTag t = tagged[i].tag;
      if (t == PosTag::Propn || t == PosTag::Noun || t == PosTag::Adj) hit[i] = true;
    }
  }

  std::vector<CandidateMention> out;
  for (std::size_t i = 0; i < n;) {
    if (!hit[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && hit[j + 1] && same_unit(tagged, j, j + 1)) ++j;
    out.push_back(make_candidate(tagged, i, j, CandidateSource::DepProximity));
    out.back().parse_supported = graph.source() == GraphSource::Supplied;
    i = j + 1;
  }
  return out;
}

std::vector<CandidateMention> noun_phrase_candidates(std::span<const TaggedToken> tagged) {
  std::vector<CandidateMention> out;
  auto in_phrase = [](PosTag t) { return t == PosTag::Adj || t == PosTag::Noun || t == PosTag::Propn; };
  for (std::size_t i = 0; i < tagged.size();) {
    if (!in_phrase(tagged[i].tag)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    bool has_head = false;
    while (j < tagged.size() && in_phrase(tagged[j].tag) && (j == i || same_unit(tagged, j - 1, j))) {
      has_head |= tagged[j].tag != PosTag::Adj;
      ++j;
    }
    if (has_head) out.push_back(make_candidate(tagged, i, j - 1, CandidateSource::NounPhrase));
    i = j;
  }
  return out;
}

std::vector<CandidateMention> merge_candidates(std::vector<CandidateMention> candidates) {
  std::vector<CandidateMention> merged;
  std::unordered_map<std::string, std::size_t> slot;
  for (auto& c : candidates) {
    std::string key = dedup_key(c.phrase);
    if (key.empty()) continue;
    auto [it, fresh] = slot.try_emplace(std::move(key), merged.size());
    if (fresh) {
      merged.push_back(std::move(c));
      continue;
    }
    CandidateMention& m = merged[it->second];
    m.sources |= c.sources;
    m.cues |= c.cues;
    m.parse_supported = m.parse_supported || c.parse_supported;
    if (c.fuzzy_suffix_score)
      m.fuzzy_suffix_score = std::max(m.fuzzy_suffix_score.value_or(0.0), *c.fuzzy_suffix_score);
  }
  std::stable_sort(merged.begin(), merged.end(), [](const CandidateMention& a, const CandidateMention& b) {
    if (a.token_span.first != b.token_span.first) return a.token_span.first < b.token_span.first;
    return a.token_span.second > b.token_span.second;
  });
  return merged;
}

}  // namespace tweetloc
