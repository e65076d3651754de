#include "tweetloc/gazetteer.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include "tweetloc/error.hpp"

namespace tweetloc {

namespace {

bool ranks_before(const GazetteerEntry& a, const GazetteerEntry& b) {
  if (a.population != b.population) return a.population > b.population;
  return a.geoname_id < b.geoname_id;
}

bool valid_coordinates(double lat, double lon) {
  return std::isfinite(lat) && std::isfinite(lon) && lat >= -90.0 && lat <= 90.0 && lon >= -180.0 && lon <= 180.0;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::size_t word_count(std::string_view normalized) {
  return normalized.empty() ? 0 : 1 + std::count(normalized.begin(), normalized.end(), ' ');
}

}  // namespace

void GazetteerIndex::add(GazetteerEntry entry) {
  if (entry.geoname_id == 0) throw ContractError("geoname id must be positive");
  if (!valid_coordinates(entry.lat, entry.lon))
    throw ContractError("entry " + std::to_string(entry.geoname_id) + " has out-of-range coordinates");
  if (by_id_.contains(entry.geoname_id))
    throw ContractError("duplicate geoname id " + std::to_string(entry.geoname_id));

  const auto slot = static_cast<std::uint32_t>(entries_.size());
  entries_.push_back(std::move(entry));
  by_id_.emplace(entries_.back().geoname_id, slot);

  for (const std::string& key : indexed_names(entries_.back())) {
    auto& ids = names_[key];
    auto pos = std::upper_bound(ids.begin(), ids.end(), slot, [this](std::uint32_t a, std::uint32_t b) {
      return ranks_before(entries_[a], entries_[b]);
    });
    ids.insert(pos, slot);
    max_ngram_ = std::max(max_ngram_, word_count(key));
  }
}

const GazetteerEntry* GazetteerIndex::find_entry(GeonameId id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &entries_[it->second];
}

std::vector<const GazetteerEntry*> GazetteerIndex::find(std::string_view normalized_name) const {
  std::vector<const GazetteerEntry*> out;
  auto it = names_.find(normalized_name);
  if (it == names_.end()) return out;
  out.reserve(it->second.size());
  for (std::uint32_t slot : it->second) out.push_back(&entries_[slot]);
  return out;
}

std::vector<std::string> GazetteerIndex::indexed_names(const GazetteerEntry& entry) const {
  std::vector<std::string> out;
  auto push = [&](std::string_view raw) {
    std::string key = normalize_name(raw);
    if (!key.empty() && std::find(out.begin(), out.end(), key) == out.end()) out.push_back(std::move(key));
  };
  push(entry.name);
  push(entry.ascii_name);
  for (const auto& alt : entry.alternate_names) push(alt);
  return out;
}

GazetteerIndex load_geonames(std::istream& in, const GeonamesFilter& filter) {
  GazetteerIndex index;
  std::optional<std::string> country;
  if (filter.country) country = to_lower_ascii(*filter.country);

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cols = split(line, '\t');
    if (cols.size() != 19) throw LoadError("expected 19 columns, got " + std::to_string(cols.size()), line_no);

    if (country && to_lower_ascii(cols[8]) != *country) continue;

    GazetteerEntry e;
    if (!parse_number(cols[0], e.geoname_id) || e.geoname_id == 0 || !parse_number(cols[4], e.lat) ||
        !parse_number(cols[5], e.lon) || !valid_coordinates(e.lat, e.lon) || index.find_entry(e.geoname_id)) {
      index.note_skipped_row();
      continue;
    }
    if (filter.box && !filter.box->contains(e.lat, e.lon)) continue;

    e.name = std::string(cols[1]);
    e.ascii_name = std::string(cols[2]);
    if (!cols[3].empty())
      for (auto alt : split(cols[3], ','))
        if (!alt.empty()) e.alternate_names.emplace_back(alt);
    e.feature_class = cols[6].empty() ? ' ' : cols[6].front();
    e.feature_code = std::string(cols[7]);
    e.country_code = std::string(cols[8]);
    e.admin1 = std::string(cols[10]);
    if (!cols[14].empty() && !parse_number(cols[14], e.population)) e.population = 0;
    index.add(std::move(e));
  }
  return index;
}

namespace {

constexpr std::string_view kSnapshotMagic = "tweetloc-gazetteer-snapshot";
constexpr int kSnapshotVersion = 1;
constexpr char kListSep = '\x1f';

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace

void save_snapshot(const GazetteerIndex& index, std::ostream& out) {
  out << kSnapshotMagic << ' ' << kSnapshotVersion << '\n';
  out << index.entry_count() << ' ' << index.skipped_rows() << '\n';
  for (const auto& e : index.entries()) {
    std::string alts;
    for (std::size_t i = 0; i < e.alternate_names.size(); ++i) {
      if (i) alts.push_back(kListSep);
      alts += e.alternate_names[i];
    }
    out << e.geoname_id << '\t' << e.name << '\t' << e.ascii_name << '\t' << alts << '\t' << format_double(e.lat)
        << '\t' << format_double(e.lon) << '\t' << e.feature_class << '\t' << e.feature_code << '\t'
        << e.country_code << '\t' << e.admin1 << '\t' << e.population << '\n';
  }
  if (!out) throw StoreError("failed to write gazetteer snapshot");
}

GazetteerIndex load_snapshot(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw LoadError("empty snapshot", 1);
  auto head = split(line, ' ');
  int version = 0;
  if (head.size() != 2 || head[0] != kSnapshotMagic || !parse_number(head[1], version))
    throw LoadError("not a gazetteer snapshot", 1);
  if (version != kSnapshotVersion) throw LoadError("unsupported snapshot version " + std::string(head[1]), 1);

  if (!std::getline(in, line)) throw LoadError("missing snapshot counts", 2);
  auto counts = split(line, ' ');
  std::size_t expected = 0, skipped = 0;
  if (counts.size() != 2 || !parse_number(counts[0], expected) || !parse_number(counts[1], skipped))
    throw LoadError("bad snapshot counts", 2);

  GazetteerIndex index;
  for (std::size_t i = 0; i < skipped; ++i) index.note_skipped_row();
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto cols = split(line, '\t');
    if (cols.size() != 11) throw LoadError("expected 11 snapshot columns", line_no);
    GazetteerEntry e;
    if (!parse_number(cols[0], e.geoname_id) || !parse_number(cols[4], e.lat) || !parse_number(cols[5], e.lon) ||
        !parse_number(cols[10], e.population) || cols[6].size() != 1)
      throw LoadError("bad snapshot row", line_no);
    e.name = std::string(cols[1]);
    e.ascii_name = std::string(cols[2]);
    if (!cols[3].empty())
      for (auto alt : split(cols[3], kListSep)) e.alternate_names.emplace_back(alt);
    e.feature_class = cols[6].front();
    e.feature_code = std::string(cols[7]);
    e.country_code = std::string(cols[8]);
    e.admin1 = std::string(cols[9]);
    try {
      index.add(std::move(e));
    } catch (const ContractError& err) {
      throw LoadError(err.what(), line_no);
    }
  }
  if (index.entry_count() != expected)
    throw LoadError("snapshot declares " + std::to_string(expected) + " entries, found " +
                    std::to_string(index.entry_count()));
  return index;
}

std::string_view to_string(MatchKind kind) {
  switch (kind) {
    case MatchKind::ExactName: return "EXACT_NAME";
    case MatchKind::AlternateName: return "ALTERNATE_NAME";
    case MatchKind::SuffixDropped: return "SUFFIX_DROPPED";
    case MatchKind::SubNgram: return "SUB_NGRAM";
  }
  return "";
}

std::optional<MatchKind> parse_match_kind(std::string_view name) {
  for (MatchKind k : {MatchKind::ExactName, MatchKind::AlternateName, MatchKind::SuffixDropped, MatchKind::SubNgram})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

namespace {

std::string join_words(std::span<const std::string_view> words, std::size_t first, std::size_t last) {
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (i > first) out.push_back(' ');
    out += words[i];
  }
  return normalize_name(out);
}

std::vector<GazetteerMatch> matches_for(const GazetteerIndex& index, const std::string& key, MatchKind kind) {
  std::vector<GazetteerMatch> out;
  for (const GazetteerEntry* e : index.find(key)) out.push_back({e, kind, key});
  return out;
}

}  // namespace

std::vector<GazetteerMatch> lookup(const GazetteerIndex& index, std::string_view phrase, const LookupOptions& options) {
  const std::string key = normalize_name(phrase);
  if (key.empty()) return {};

  std::vector<GazetteerMatch> out;
  for (const GazetteerEntry* e : index.find(key)) {
    bool primary = normalize_name(e->name) == key || normalize_name(e->ascii_name) == key;
    out.push_back({e, primary ? MatchKind::ExactName : MatchKind::AlternateName, key});
  }
  if (!out.empty()) return out;

  const std::vector<std::string_view> words = split_whitespace(phrase);
  if (words.size() < 2) return {};

  if (options.suffixes) {
    std::size_t m = options.suffixes->trailing_match(words);
    if (m > 0 && m < words.size()) {
      out = matches_for(index, join_words(words, 0, words.size() - m), MatchKind::SuffixDropped);
      if (!out.empty()) return out;
    }
  }

  for (std::size_t n = std::min(words.size() - 1, index.max_ngram()); n >= 1; --n) {
    for (std::size_t first = 0; first + n <= words.size(); ++first) {
      if (options.skip_ngram && options.skip_ngram(words, first, first + n)) continue;
      out = matches_for(index, join_words(words, first, first + n), MatchKind::SubNgram);
      if (!out.empty()) return out;
    }
  }
  return {};
}

bool guard_rejects(const AmbiguityGuard& guard, const CandidateMention& candidate) {
  if (!guard.enabled) return false;
  auto words = split_whitespace(candidate.phrase);
  if (words.size() != 1 || !is_lowercase_word(words[0])) return false;
  if (!guard.common_words.contains(words[0])) return false;
  if (!candidate.cues.empty()) return false;
  if (candidate.sources.contains(CandidateSource::DepProximity) && candidate.parse_supported) return false;
  return true;
}

std::vector<LocatedMention> verify_candidates(const GazetteerIndex& index, std::span<const CandidateMention> candidates,
                                              const AmbiguityGuard& guard, const SuffixLexicon* suffixes) {
  LookupOptions options;
  options.suffixes = suffixes;
  if (guard.enabled) {
    options.skip_ngram = [&guard](std::span<const std::string_view> words, std::size_t first, std::size_t last) {
      return last - first == 1 && is_lowercase_word(words[first]) && guard.common_words.contains(words[first]);
    };
  }

  std::vector<LocatedMention> out;
  std::vector<GeonameId> seen;
  for (const CandidateMention& c : candidates) {
    if (guard_rejects(guard, c)) continue;
    auto matches = lookup(index, c.phrase, options);
    if (matches.empty()) continue;
    const GazetteerMatch& best = matches.front();
    if (std::find(seen.begin(), seen.end(), best.entry->geoname_id) != seen.end()) continue;
    seen.push_back(best.entry->geoname_id);
    out.push_back({c, best.entry->geoname_id, best.matched_text, best.entry->lat, best.entry->lon, best.kind});
  }
  return out;
}

}  // namespace tweetloc
