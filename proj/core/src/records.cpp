#include "tweetloc/records.hpp"

#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tweetloc/error.hpp"

namespace tweetloc {

using nlohmann::json;
using namespace std::chrono;

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool digits(std::size_t n, int& out) {
    if (pos_ + n > s_.size()) return false;
    int v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      char c = s_[pos_ + i];
      if (!is_ascii_digit(c)) return false;
      v = v * 10 + (c - '0');
    }
    pos_ += n;
    out = v;
    return true;
  }
  bool literal(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool one_of(std::string_view chars, char& out) {
    if (pos_ < s_.size() && chars.find(s_[pos_]) != std::string_view::npos) {
      out = s_[pos_++];
      return true;
    }
    return false;
  }
  bool done() const { return pos_ == s_.size(); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::optional<sys_days> make_day(int y, int m, int d) {
  year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return sys_days{ymd};
}

}  // namespace

sys_seconds parse_rfc3339(std::string_view text) {
  auto fail = [&] { return LoadError("bad timestamp '" + std::string(text) + "'"); };
  Cursor c(text);
  int y, mo, d, h, mi, s;
  char sep;
  if (!c.digits(4, y) || !c.literal('-') || !c.digits(2, mo) || !c.literal('-') || !c.digits(2, d) ||
      !c.one_of("Tt ", sep) || !c.digits(2, h) || !c.literal(':') || !c.digits(2, mi) || !c.literal(':') ||
      !c.digits(2, s))
    throw fail();
  if (c.literal('.')) {
    int digit;
    if (!c.digits(1, digit)) throw fail();
    while (c.digits(1, digit)) {
    }
  }
  seconds offset{0};
  char zone;
  if (!c.one_of("Zz+-", zone)) throw fail();
  if (zone == '+' || zone == '-') {
    int oh, om;
    if (!c.digits(2, oh) || !c.literal(':') || !c.digits(2, om) || oh > 23 || om > 59) throw fail();
    offset = hours{oh} + minutes{om};
    if (zone == '-') offset = -offset;
  }
  if (!c.done() || h > 23 || mi > 59 || s > 60) throw fail();
  auto day = make_day(y, mo, d);
  if (!day) throw fail();
  return sys_seconds{*day} + hours{h} + minutes{mi} + seconds{std::min(s, 59)} - offset;
}

std::string format_rfc3339(sys_seconds t) {
  const sys_days day = floor<days>(t);
  const year_month_day ymd{day};
  const hh_mm_ss hms{t - day};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02ldZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<long>(hms.hours().count()), static_cast<long>(hms.minutes().count()),
                static_cast<long>(hms.seconds().count()));
  return buf;
}

sys_days parse_date(std::string_view text) {
  Cursor c(text);
  int y, m, d;
  if (!c.digits(4, y) || !c.literal('-') || !c.digits(2, m) || !c.literal('-') || !c.digits(2, d) || !c.done())
    throw RequestError("bad date '" + std::string(text) + "', expected YYYY-MM-DD");
  auto day = make_day(y, m, d);
  if (!day) throw RequestError("bad date '" + std::string(text) + "'");
  return *day;
}

std::string format_date(sys_days day) {
  const year_month_day ymd{day};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

namespace {

TweetInput tweet_from_json(const json& j) {
  if (!j.is_object()) throw LoadError("tweet record must be a JSON object");
  TweetInput input;
  RawTweet& t = input.tweet;

  const auto id = j.find("id");
  if (id == j.end()) throw LoadError("tweet record has no id");
  if (id->is_string()) {
    t.id = id->get<std::string>();
  } else if (id->is_number_integer()) {
    t.id = id->dump();
  } else {
    throw LoadError("tweet id must be a string");
  }

  const auto text = j.find("text");
  if (text == j.end() || !text->is_string()) throw LoadError("tweet " + t.id + ": text must be a string");
  t.text = text->get<std::string>();

  const auto created = j.find("created_at");
  if (created == j.end() || !created->is_string()) throw LoadError("tweet " + t.id + ": created_at must be a string");
  t.created_at = parse_rfc3339(created->get<std::string>());

  if (auto geo = j.find("geo"); geo != j.end() && !geo->is_null()) {
    if (!geo->is_object() || !geo->contains("lat") || !geo->contains("lon") || !(*geo)["lat"].is_number() ||
        !(*geo)["lon"].is_number())
      throw LoadError("tweet " + t.id + ": geo must be {\"lat\": number, \"lon\": number}");
    t.geo = GeoPoint{(*geo)["lat"].get<double>(), (*geo)["lon"].get<double>()};
  }
  if (auto meta = j.find("source_meta"); meta != j.end() && !meta->is_null())
    t.source_meta = meta->is_string() ? meta->get<std::string>() : meta->dump();

  try {
    validate(t);
  } catch (const ContractError& e) {
    throw LoadError(e.what());
  }

  if (auto pos = j.find("pos"); pos != j.end() && !pos->is_null()) {
    if (!pos->is_array()) throw LoadError("tweet " + t.id + ": pos must be an array");
    std::vector<PosTag> tags;
    for (const auto& name : *pos) {
      std::optional<PosTag> tag = name.is_string() ? parse_pos_tag(name.get<std::string>()) : std::nullopt;
      if (!tag) throw LoadError("tweet " + t.id + ": unknown POS tag " + name.dump());
      tags.push_back(*tag);
    }
    const auto words = tagging_view(normalize_tweet(t.text)).size();
    if (tags.size() != words)
      throw LoadError("tweet " + t.id + ": " + std::to_string(tags.size()) + " POS tags for " +
                      std::to_string(words) + " tokens");
    input.annotations.pos_tags = std::move(tags);
  }

  if (auto conllu = j.find("conllu"); conllu != j.end() && !conllu->is_null()) {
    if (!conllu->is_string()) throw LoadError("tweet " + t.id + ": conllu must be a string");
    std::istringstream in(conllu->get<std::string>());
    auto sentences = read_conllu(in);
    if (sentences.size() != 1) throw LoadError("tweet " + t.id + ": conllu must hold exactly one sentence");
    if (sentences.front().sent_id.empty()) sentences.front().sent_id = t.id;
    input.annotations.parse = std::move(sentences.front());
  }
  return input;
}

}  // namespace

TweetInput parse_tweet_record(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw LoadError(std::string("invalid JSON: ") + e.what());
  }
  return tweet_from_json(j);
}

ParsedBatch parse_tweet_batch(std::string_view body) {
  ParsedBatch batch;
  std::size_t first = body.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return batch;

  if (body[first] == '[') {
    json arr;
    try {
      arr = json::parse(body);
    } catch (const json::parse_error& e) {
      batch.errors.push_back(std::string("invalid JSON array: ") + e.what());
      return batch;
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
      try {
        batch.records.push_back(tweet_from_json(arr[i]));
      } catch (const LoadError& e) {
        batch.errors.push_back("record " + std::to_string(i + 1) + ": " + e.what());
      }
    }
    return batch;
  }

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t nl = body.find('\n', start);
    std::string_view line = body.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        batch.records.push_back(parse_tweet_record(line));
      } catch (const LoadError& e) {
        batch.errors.push_back("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return batch;
}

std::string extraction_to_json(const ExtractionResult& result) {
  json mentions = json::array();
  for (const auto& m : result.mentions) {
    json sources = json::array();
    for (CandidateSource s : {CandidateSource::ProperChunk, CandidateSource::SuffixMatch, CandidateSource::DepProximity,
                              CandidateSource::NounPhrase, CandidateSource::HashtagOriginal,
                              CandidateSource::HashtagSegment})
      if (m.candidate.sources.contains(s)) sources.push_back(to_string(s));
    json cues = json::array();
    for (Cue c : {Cue::PrecedingPreposition, Cue::SuffixTerm, Cue::FuzzySuffix})
      if (m.candidate.cues.contains(c)) cues.push_back(to_string(c));
    mentions.push_back({{"phrase", m.candidate.phrase},
                        {"geoname_id", m.entry_id},
                        {"matched_text", m.matched_text},
                        {"lat", m.lat},
                        {"lon", m.lon},
                        {"match_kind", to_string(m.match_kind)},
                        {"sources", std::move(sources)},
                        {"cues", std::move(cues)}});
  }
  json out{{"id", result.tweet_id}, {"untagged", result.untagged}, {"mentions", std::move(mentions)}};
  return out.dump();
}

}  // namespace tweetloc
