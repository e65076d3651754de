#include "tweetloc/service.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "tweetloc/error.hpp"

namespace tweetloc {

using nlohmann::json;
using namespace std::chrono;

StoreSnapshot::StoreSnapshot(std::vector<std::shared_ptr<const Batch>> batches,
                             std::map<sys_days, DayCounts> by_day, std::uint64_t generation)
    : batches_(std::move(batches)), by_day_(std::move(by_day)), generation_(generation) {
  for (const auto& b : batches_) record_count_ += b->size();
}

namespace {

json tweet_to_json(const RawTweet& t) {
  json j{{"id", t.id}, {"text", t.text}, {"created_at", format_rfc3339(t.created_at)}};
  if (t.geo) j["geo"] = {{"lat", t.geo->lat}, {"lon", t.geo->lon}};
  if (t.source_meta) j["source_meta"] = *t.source_meta;
  return j;
}

json mention_to_json(const LocatedMention& m) {
  const CandidateMention& c = m.candidate;
  json cand{{"phrase", c.phrase},
            {"span", {c.token_span.first, c.token_span.second}},
            {"sources", c.sources.bits()},
            {"cues", c.cues.bits()},
            {"parse_supported", c.parse_supported}};
  cand["fuzzy"] = c.fuzzy_suffix_score ? json(*c.fuzzy_suffix_score) : json(nullptr);
  return {{"candidate", std::move(cand)}, {"entry_id", m.entry_id},   {"matched_text", m.matched_text},
          {"lat", m.lat},                 {"lon", m.lon},             {"match_kind", to_string(m.match_kind)}};
}

template <typename E>
EnumSet<E> enum_set_from_bits(std::uint32_t bits) {
  EnumSet<E> s;
  for (unsigned i = 0; i < 32; ++i)
    if (bits & (std::uint32_t{1} << i)) s.insert(static_cast<E>(i));
  return s;
}

LocatedMention mention_from_json(const json& j) {
  LocatedMention m;
  const json& c = j.at("candidate");
  m.candidate.phrase = c.at("phrase").get<std::string>();
  m.candidate.token_span = {c.at("span").at(0).get<std::size_t>(), c.at("span").at(1).get<std::size_t>()};
  m.candidate.sources = enum_set_from_bits<CandidateSource>(c.at("sources").get<std::uint32_t>());
  m.candidate.cues = enum_set_from_bits<Cue>(c.at("cues").get<std::uint32_t>());
  m.candidate.parse_supported = c.at("parse_supported").get<bool>();
  if (!c.at("fuzzy").is_null()) m.candidate.fuzzy_suffix_score = c.at("fuzzy").get<double>();
  m.entry_id = j.at("entry_id").get<GeonameId>();
  m.matched_text = j.at("matched_text").get<std::string>();
  m.lat = j.at("lat").get<double>();
  m.lon = j.at("lon").get<double>();
  auto kind = parse_match_kind(j.at("match_kind").get<std::string>());
  if (!kind) throw LoadError("unknown match kind");
  m.match_kind = *kind;
  return m;
}

json record_to_json(const TweetRecord& r, std::uint64_t generation) {
  json mentions = json::array();
  for (const auto& m : r.result.mentions) mentions.push_back(mention_to_json(m));
  return {{"gen", generation},
          {"tweet", tweet_to_json(r.tweet)},
          {"mentions", std::move(mentions)},
          {"elapsed_ns", r.result.elapsed.count()},
          {"matched_terms", r.matched_terms}};
}

void fill_time_keys(TweetRecord& r) {
  r.day_key = floor<days>(r.tweet.created_at);
  r.hour = static_cast<int>(duration_cast<hours>(r.tweet.created_at - r.day_key).count());
}

TweetRecord record_from_json(const json& j) {
  TweetRecord r;
  r.tweet = parse_tweet_record(j.at("tweet").dump()).tweet;
  r.result.tweet_id = r.tweet.id;
  for (const auto& m : j.at("mentions")) r.result.mentions.push_back(mention_from_json(m));
  r.result.untagged = r.result.mentions.empty();
  r.result.elapsed = nanoseconds{j.at("elapsed_ns").get<std::int64_t>()};
  r.matched_terms = j.at("matched_terms").get<std::vector<std::string>>();
  fill_time_keys(r);
  return r;
}

void count_day(std::map<sys_days, DayCounts>& by_day, const TweetRecord& r) {
  DayCounts& c = by_day[r.day_key];
  if (r.result.untagged)
    ++c.untagged;
  else
    ++c.tagged;
}

std::string text_key(const RawTweet& t) { return normalized_text(normalize_tweet(t.text)); }

}  // namespace

TweetStore::TweetStore(std::shared_ptr<const Pipeline> pipeline, StoreOptions options)
    : pipeline_(std::move(pipeline)), options_(std::move(options)) {
  if (!pipeline_) throw ConfigError("tweet store needs a pipeline");
  for (const auto& [category, words] : pipeline_->resources().emergencies.categories())
    tracked_terms_.insert(words.begin(), words.end());

  std::vector<std::shared_ptr<const StoreSnapshot::Batch>> batches;
  std::map<sys_days, DayCounts> by_day;
  std::uint64_t generation = 0;

  if (!options_.log_path.empty() && std::filesystem::exists(options_.log_path)) {
    std::ifstream in(options_.log_path);
    if (!in) throw StoreError("cannot open store log " + options_.log_path.string());
    StoreSnapshot::Batch pending;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      json j;
      try {
        j = json::parse(line);
      } catch (const json::parse_error&) {
        spdlog::warn("store log {}: line {} is not valid JSON, ignoring the rest", options_.log_path.string(), line_no);
        break;
      }
      if (j.contains("commit")) {
        // Records are only visible once their batch's commit line is on disk.
        generation = j["commit"].get<std::uint64_t>();
        for (const auto& r : pending) {
          seen_ids_.insert(r.tweet.id);
          if (auto key = text_key(r.tweet); !key.empty()) seen_texts_.insert(std::move(key));
          count_day(by_day, r);
        }
        batches.push_back(std::make_shared<const StoreSnapshot::Batch>(std::move(pending)));
        pending = {};
        continue;
      }
      try {
        pending.push_back(record_from_json(j));
      } catch (const std::exception& e) {
        throw StoreError("store log line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (!pending.empty())
      spdlog::warn("store log {}: dropping {} records of an uncommitted batch", options_.log_path.string(),
                   pending.size());
  }
  snapshot_ = std::make_shared<const StoreSnapshot>(std::move(batches), std::move(by_day), generation);
}

std::shared_ptr<const StoreSnapshot> TweetStore::snapshot() const {
  std::lock_guard lock(snapshot_mutex_);
  return snapshot_;
}

void TweetStore::publish(std::shared_ptr<const StoreSnapshot> next) {
  std::lock_guard lock(snapshot_mutex_);
  snapshot_ = std::move(next);
}

TweetRecord TweetStore::make_record(const TweetInput& input) const {
  TweetRecord r;
  r.tweet = input.tweet;
  r.result = pipeline_->extract(input.tweet, input.annotations);
  fill_time_keys(r);
  std::set<std::string> terms;
  for (const Token& t : normalize_tweet(input.tweet.text)) {
    if (!t.is_word() || t.camel_split) continue;
    std::string lower = to_lower_ascii(t.surface);
    if (tracked_terms_.contains(lower)) {
      terms.insert(lower);
    } else if (lower.size() > 1 && lower.back() == 's' && tracked_terms_.contains(lower.substr(0, lower.size() - 1))) {
      terms.insert(lower.substr(0, lower.size() - 1));
    }
  }
  r.matched_terms.assign(terms.begin(), terms.end());
  return r;
}

bool TweetStore::looks_english(std::span<const Token> tokens) const {
  const Resources& res = pipeline_->resources();
  std::size_t words = 0, known = 0;
  for (const Token& t : tokens) {
    if (!t.is_word() || t.camel_split) continue;
    ++words;
    std::string lower = to_lower_ascii(t.surface);
    if (res.common_words.contains(lower) || res.tag_lexicons.prepositions.contains(lower) ||
        res.model.count(lower) > 0)
      ++known;
  }
  return words == 0 || static_cast<double>(known) >= options_.english_min_fraction * static_cast<double>(words);
}

IngestReport TweetStore::ingest(std::span<const TweetInput> batch) {
  std::lock_guard lock(write_mutex_);
  IngestReport report;
  StoreSnapshot::Batch accepted;
  WordSet new_ids, new_texts;

  for (const TweetInput& input : batch) {
    const RawTweet& t = input.tweet;
    try {
      validate(t);
    } catch (const ContractError& e) {
      spdlog::warn("ingest: rejected record: {}", e.what());
      ++report.errors;
      continue;
    }
    auto tokens = normalize_tweet(t.text);
    std::string key = normalized_text(tokens);
    if (seen_ids_.contains(t.id) || new_ids.contains(t.id) ||
        (!key.empty() && (seen_texts_.contains(key) || new_texts.contains(key)))) {
      ++report.duplicates;
      continue;
    }
    if (options_.english_min_fraction > 0.0 && !looks_english(tokens)) {
      spdlog::info("ingest: tweet {} filtered as non-English", t.id);
      ++report.errors;
      continue;
    }
    try {
      accepted.push_back(make_record(input));
    } catch (const std::exception& e) {
      spdlog::warn("ingest: tweet {}: {}", t.id, e.what());
      ++report.errors;
      continue;
    }
    new_ids.insert(t.id);
    if (!key.empty()) new_texts.insert(std::move(key));
  }
  report.accepted = accepted.size();
  if (accepted.empty()) return report;

  auto current = snapshot();
  const std::uint64_t generation = current->generation() + 1;

  if (!options_.log_path.empty()) {
    std::string chunk;
    for (const auto& r : accepted) chunk += record_to_json(r, generation).dump() + '\n';
    chunk += json{{"commit", generation}}.dump() + '\n';
    std::ofstream out(options_.log_path, std::ios::app | std::ios::binary);
    if (!out) throw StoreError("cannot open store log " + options_.log_path.string());
    out.write(chunk.data(), static_cast<std::streamsize>(chunk.size()));
    out.flush();
    if (!out) throw StoreError("failed to append to store log " + options_.log_path.string());
  }

  auto batches = current->batches();
  auto by_day = current->by_day();
  for (const auto& r : accepted) count_day(by_day, r);
  batches.push_back(std::make_shared<const StoreSnapshot::Batch>(std::move(accepted)));
  seen_ids_.merge(new_ids);
  seen_texts_.merge(new_texts);
  publish(std::make_shared<const StoreSnapshot>(std::move(batches), std::move(by_day), generation));
  return report;
}

IngestReport TweetStore::ingest_body(std::string_view body) {
  ParsedBatch parsed = parse_tweet_batch(body);
  for (const auto& e : parsed.errors) spdlog::warn("ingest: malformed record: {}", e);
  IngestReport report = ingest(parsed.records);
  report.errors += parsed.errors.size();
  return report;
}

QueryFilter QueryFilter::parse(std::optional<std::string_view> q, std::optional<std::string_view> from,
                               std::optional<std::string_view> to) {
  QueryFilter f;
  if (q) {
    std::string_view rest = *q;
    while (true) {
      std::size_t comma = rest.find(',');
      std::string term = normalize_name(rest.substr(0, comma));
      if (!term.empty() && std::find(f.terms.begin(), f.terms.end(), term) == f.terms.end())
        f.terms.push_back(std::move(term));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  if (from && !from->empty()) f.from = parse_date(*from);
  if (to && !to->empty()) f.to = parse_date(*to);
  if (f.from && f.to && *f.from > *f.to) throw RequestError("date range is inverted: from is after to");
  return f;
}

bool QueryFilter::matches(const TweetRecord& record) const {
  if (from && record.day_key < *from) return false;
  if (to && record.day_key > *to) return false;
  if (terms.empty()) return true;
  const std::string text = normalize_name(record.tweet.text);
  return std::any_of(terms.begin(), terms.end(),
                     [&](const std::string& term) { return text.find(term) != std::string::npos; });
}

std::string tweets_geojson(const StoreSnapshot& snapshot, const QueryFilter& filter) {
  json features = json::array();
  snapshot.for_each([&](const TweetRecord& r) {
    if (r.result.untagged || !filter.matches(r)) return;
    for (const auto& m : r.result.mentions) {
      features.push_back({{"type", "Feature"},
                          {"geometry", {{"type", "Point"}, {"coordinates", {m.lon, m.lat}}}},
                          {"properties",
                           {{"tweet_id", r.tweet.id},
                            {"text", r.tweet.text},
                            {"created_at", format_rfc3339(r.tweet.created_at)},
                            {"hour", r.hour},
                            {"phrase", m.candidate.phrase},
                            {"geoname_id", m.entry_id}}}});
    }
  });
  return json{{"type", "FeatureCollection"}, {"features", std::move(features)}}.dump();
}

std::string untagged_json(const StoreSnapshot& snapshot, const QueryFilter& filter, Page page) {
  if (page.number < 1) throw RequestError("page numbers start at 1");
  if (page.size < 1) throw RequestError("page size must be positive");
  json tweets = json::array();
  std::size_t total = 0;
  const std::size_t first = (page.number - 1) * page.size;
  snapshot.for_each([&](const TweetRecord& r) {
    if (!r.result.untagged || !filter.matches(r)) return;
    if (total >= first && total < first + page.size)
      tweets.push_back({{"tweet_id", r.tweet.id},
                        {"text", r.tweet.text},
                        {"created_at", format_rfc3339(r.tweet.created_at)},
                        {"hour", r.hour}});
    ++total;
  });
  return json{{"page", page.number}, {"page_size", page.size}, {"total", total}, {"tweets", std::move(tweets)}}
      .dump();
}

std::vector<std::pair<sys_days, std::size_t>> histogram(const StoreSnapshot& snapshot, const QueryFilter& filter) {
  std::map<sys_days, std::size_t> counts;
  if (filter.from && filter.to)
    for (sys_days d = *filter.from; d <= *filter.to; d += days{1}) counts[d] = 0;
  snapshot.for_each([&](const TweetRecord& r) {
    if (!r.result.untagged && filter.matches(r)) ++counts[r.day_key];
  });
  return {counts.begin(), counts.end()};
}

std::string histogram_json(const StoreSnapshot& snapshot, const QueryFilter& filter) {
  json days = json::array();
  for (const auto& [day, count] : histogram(snapshot, filter))
    days.push_back({{"day", format_date(day)}, {"count", count}});
  return days.dump();
}

namespace {

std::optional<std::string_view> param(const QueryParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return std::string_view(it->second);
}

std::size_t positive_param(const QueryParams& params, const std::string& key, std::size_t fallback) {
  auto v = param(params, key);
  if (!v || v->empty()) return fallback;
  std::size_t out = 0;
  for (char c : *v) {
    if (!is_ascii_digit(c) || out > 1'000'000) throw RequestError("bad value for " + key);
    out = out * 10 + static_cast<std::size_t>(c - '0');
  }
  if (out == 0) throw RequestError(key + " must be positive");
  return out;
}

ApiResponse error_response(int status, std::string_view message) {
  return {status, "application/json", json{{"error", message}}.dump()};
}

}  // namespace

ApiResponse Api::handle(std::string_view method, std::string_view path, const QueryParams& params,
                        std::string_view body) {
  try {
    if (path == "/ingest") {
      if (method != "POST") return error_response(405, "use POST");
      IngestReport r = store_.ingest_body(body);
      return {200, "application/json",
              json{{"accepted", r.accepted},
                   {"duplicates", r.duplicates},
                   {"errors", r.errors},
                   {"generation", store_.snapshot()->generation()}}
                  .dump()};
    }
    if (path != "/tweets" && path != "/untagged" && path != "/histogram" && path != "/health")
      return error_response(404, "not found");
    if (method != "GET") return error_response(405, "use GET");

    auto snap = store_.snapshot();
    if (path == "/health")
      return {200, "application/json",
              json{{"status", "ok"}, {"generation", snap->generation()}, {"record_count", snap->record_count()}}
                  .dump()};

    QueryFilter filter = QueryFilter::parse(param(params, "q"), param(params, "from"), param(params, "to"));
    if (path == "/tweets") return {200, "application/geo+json", tweets_geojson(*snap, filter)};
    if (path == "/histogram") return {200, "application/json", histogram_json(*snap, filter)};
    Page page{positive_param(params, "page", 1), positive_param(params, "page_size", 50)};
    return {200, "application/json", untagged_json(*snap, filter, page)};
  } catch (const RequestError& e) {
    return error_response(400, e.what());
  } catch (const StoreError& e) {
    spdlog::error("store: {}", e.what());
    return error_response(500, e.what());
  }
}

}  // namespace tweetloc
