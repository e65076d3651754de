#include "tweetloc/pipeline.hpp"

#include <fstream>

#include <spdlog/spdlog.h>

#include "tweetloc/error.hpp"

namespace tweetloc {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::GeoLoc: return "GEOLOC";
    case Mode::UniLoc: return "UNILOC";
    case Mode::BiLoc: return "BILOC";
  }
  return "";
}

std::optional<Mode> parse_mode(std::string_view name) {
  std::string lower = to_lower_ascii(name);
  for (Mode m : {Mode::GeoLoc, Mode::UniLoc, Mode::BiLoc})
    if (to_lower_ascii(to_string(m)) == lower) return m;
  return std::nullopt;
}

void PipelineConfig::validate() const {
  if (!(jw_threshold > 0.0 && jw_threshold <= 1.0)) throw ConfigError("jaro-winkler threshold must be in (0, 1]");
  if (d_max < 1) throw ConfigError("d_max must be at least 1");
  if (mode == Mode::GeoLoc && enabled_sources.empty()) throw ConfigError("GEOLOC mode needs at least one source");
}

namespace {

std::ifstream open_input(const std::filesystem::path& path, std::string_view what) {
  if (path.empty()) throw ConfigError(std::string(what) + " path is not set");
  std::ifstream in(path);
  if (!in) throw ConfigError(std::string(what) + " not found: " + path.string());
  return in;
}

GazetteerIndex load_gazetteer(const std::filesystem::path& path, const GeonamesFilter& filter) {
  auto in = open_input(path, "gazetteer");
  std::string first;
  std::getline(in, first);
  in.clear();
  in.seekg(0);
  if (first.starts_with("tweetloc-gazetteer-snapshot")) return load_snapshot(in);
  return load_geonames(in, filter);
}

}  // namespace

Resources Resources::load(const ResourcePaths& paths) {
  Resources r;
  r.gazetteer = load_gazetteer(paths.gazetteer, paths.filter);
  {
    auto in = open_input(paths.model, "unigram model");
    r.model = load_unigram_model(in);
  }
  if (paths.lexicon_dir.empty() || !std::filesystem::is_directory(paths.lexicon_dir))
    throw ConfigError("lexicon directory not found: " + paths.lexicon_dir.string());
  r.tag_lexicons = TagLexicons::load(paths.lexicon_dir);
  r.suffixes = SuffixLexicon::load(paths.lexicon_dir);
  r.emergencies = EmergencyLexicon::load(paths.lexicon_dir);
  if (paths.parses) {
    auto in = open_input(*paths.parses, "parse file");
    for (auto& s : read_conllu(in)) {
      if (s.sent_id.empty()) continue;
      std::string id = s.sent_id;
      r.parses.insert_or_assign(std::move(id), std::move(s));
    }
  }
  r.refresh_common_words();
  r.validate();
  if (r.gazetteer.skipped_rows() > 0)
    spdlog::warn("gazetteer: skipped {} rows with unusable id or coordinates", r.gazetteer.skipped_rows());
  return r;
}

void Resources::validate() const {
  if (gazetteer.entry_count() == 0) throw ConfigError("gazetteer is empty");
  if (model.empty()) throw ConfigError("unigram model is empty");
  if (suffixes.empty()) throw ConfigError("suffix lexicon is empty");
  if (emergencies.empty()) throw ConfigError("emergency lexicon is empty");
  if (tag_lexicons.prepositions.empty()) throw ConfigError("preposition list is empty");
  tag_lexicons.validate();
}

void Resources::refresh_common_words() {
  common_words.clear();
  for (const WordSet* s : {&tag_lexicons.stoplist, &tag_lexicons.common_nouns, &tag_lexicons.adjectives})
    common_words.insert(s->begin(), s->end());
}

Pipeline::Pipeline(std::shared_ptr<const Resources> resources, PipelineConfig config)
    : resources_(std::move(resources)), config_(config) {
  config_.validate();
  if (!resources_) throw ConfigError("pipeline resources are missing");
  resources_->validate();
  guard_.enabled = config_.guard_enabled;
  guard_.common_words = resources_->common_words;
}

ExtractionResult Pipeline::extract(const RawTweet& tweet, const TweetAnnotations& annotations) const {
  return config_.mode == Mode::GeoLoc ? extract_geoloc(tweet, annotations) : extract_baseline(tweet);
}

namespace {

void add_all(std::vector<CandidateMention>& into, std::vector<CandidateMention> more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace

std::vector<CandidateMention> Pipeline::candidates(const RawTweet& tweet, const TweetAnnotations& annotations) const {
  const Resources& res = *resources_;
  const SourceSet enabled = config_.enabled_sources;

  const std::vector<Token> view = tagging_view(normalize_tweet(tweet.text));
  std::optional<std::span<const PosTag>> external;
  if (annotations.pos_tags) external = std::span<const PosTag>(*annotations.pos_tags);
  const std::vector<TaggedToken> tagged = tag_tokens(view, res.tag_lexicons, external);

  std::vector<CandidateMention> all;
  if (enabled.contains(CandidateSource::ProperChunk))
    add_all(all, chunk_proper_nouns(tagged, res.suffixes, res.tag_lexicons, config_.jw_threshold));
  if (enabled.contains(CandidateSource::SuffixMatch))
    add_all(all, suffix_pattern_candidates(tagged, res.suffixes, res.emergencies));
  if (enabled.contains(CandidateSource::DepProximity)) {
    const ConlluSentence* parse = nullptr;
    if (config_.dependency_source == GraphSource::Supplied) {
      if (annotations.parse) {
        parse = &*annotations.parse;
      } else if (auto it = res.parses.find(tweet.id); it != res.parses.end()) {
        parse = &it->second;
      }
    }
    DependencyGraph graph;
    if (parse) {
      try {
        graph = align_parse(*parse, view);
      } catch (const ContractError& e) {
        spdlog::warn("tweet {}: {}; using token window", tweet.id, e.what());
        graph = token_window_graph(view);
      }
    } else {
      graph = token_window_graph(view);
    }
    add_all(all, dependency_candidates(tagged, graph, res.emergencies, config_.d_max));
  }
  if (enabled.contains(CandidateSource::NounPhrase)) add_all(all, noun_phrase_candidates(tagged));

  if (enabled.contains(CandidateSource::HashtagOriginal) || enabled.contains(CandidateSource::HashtagSegment)) {
    std::vector<std::string_view> seen;
    for (std::size_t i = 0; i < view.size(); ++i) {
      if (!view[i].hashtag_origin) continue;
      const std::string& body = *view[i].hashtag_origin;
      if (std::find(seen.begin(), seen.end(), body) != seen.end()) continue;
      seen.push_back(body);
      std::size_t last = i;
      while (last + 1 < view.size() && view[last + 1].hashtag_origin == body) ++last;

      auto expansions = hashtag_expansions(res.model, body);
      for (std::size_t k = 0; k < expansions.size(); ++k) {
        CandidateSource source = k == 0 ? CandidateSource::HashtagOriginal : CandidateSource::HashtagSegment;
        if (!enabled.contains(source)) continue;
        CandidateMention c;
        c.phrase = std::move(expansions[k]);
        c.token_span = {i, last};
        c.sources.insert(source);
        all.push_back(std::move(c));
      }
    }
  }
  return merge_candidates(std::move(all));
}

ExtractionResult Pipeline::extract_geoloc(const RawTweet& tweet, const TweetAnnotations& annotations) const {
  const auto start = std::chrono::steady_clock::now();
  ExtractionResult result;
  result.tweet_id = tweet.id;
  auto cands = candidates(tweet, annotations);
  result.mentions = verify_candidates(resources_->gazetteer, cands, guard_, &resources_->suffixes);
  result.untagged = result.mentions.empty();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

ExtractionResult Pipeline::extract_baseline(const RawTweet& tweet) const {
  const auto start = std::chrono::steady_clock::now();
  ExtractionResult result;
  result.tweet_id = tweet.id;

  const std::vector<Token> view = tagging_view(normalize_tweet(tweet.text));
  std::vector<GeonameId> seen;
  auto try_phrase = [&](std::size_t first, std::size_t last) {
    std::string phrase = view[first].surface;
    if (last > first) phrase += " " + view[last].surface;
    auto entries = resources_->gazetteer.find(normalize_name(phrase));
    if (entries.empty()) return;
    const GazetteerEntry* best = entries.front();
    if (std::find(seen.begin(), seen.end(), best->geoname_id) != seen.end()) return;
    seen.push_back(best->geoname_id);
    auto matches = lookup(resources_->gazetteer, phrase);
    LocatedMention m;
    m.candidate.phrase = phrase;
    m.candidate.token_span = {first, last};
    m.candidate.sources.insert(CandidateSource::NounPhrase);
    m.entry_id = best->geoname_id;
    m.matched_text = normalize_name(phrase);
    m.lat = best->lat;
    m.lon = best->lon;
    m.match_kind = matches.front().kind;
    result.mentions.push_back(std::move(m));
  };

  for (std::size_t i = 0; i < view.size(); ++i) {
    if (!view[i].is_word()) continue;
    try_phrase(i, i);
    if (config_.mode == Mode::BiLoc && i + 1 < view.size() && view[i + 1].is_word()) try_phrase(i, i + 1);
  }
  result.untagged = result.mentions.empty();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

ExtractionResult extract_locations(const RawTweet& tweet, const PipelineConfig& config,
                                   std::shared_ptr<const Resources> resources) {
  return Pipeline(std::move(resources), config).extract(tweet);
}

ExtractionResult baseline_extract(const RawTweet& tweet, const PipelineConfig& config,
                                  std::shared_ptr<const Resources> resources) {
  if (config.mode == Mode::GeoLoc) throw ConfigError("baseline_extract needs UNILOC or BILOC mode");
  return Pipeline(std::move(resources), config).extract(tweet);
}

}  // namespace tweetloc
