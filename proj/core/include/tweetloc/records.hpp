#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tweetloc/normalize.hpp"
#include "tweetloc/pipeline.hpp"

namespace tweetloc {

// RFC 3339 timestamps: "2017-09-12T10:15:00Z", fractional seconds and
// numeric offsets accepted. Throws LoadError on bad input.
std::chrono::sys_seconds parse_rfc3339(std::string_view text);
std::string format_rfc3339(std::chrono::sys_seconds t);

// "YYYY-MM-DD". Throws RequestError on bad input.
std::chrono::sys_days parse_date(std::string_view text);
std::string format_date(std::chrono::sys_days day);

struct TweetInput {
  RawTweet tweet;
  TweetAnnotations annotations;
};

// One tweet record as JSON: id, text, created_at, optional geo {lat, lon},
// source_meta, pos (array of tag names) and conllu (one parsed sentence).
// Throws LoadError on a malformed record.
TweetInput parse_tweet_record(std::string_view json_text);

struct ParsedBatch {
  std::vector<TweetInput> records;
  std::vector<std::string> errors;
};

// Either a JSON array of records or one record per line. Malformed records
// are reported in `errors` and skipped.
ParsedBatch parse_tweet_batch(std::string_view body);

// One-line JSON: id, untagged, mentions with phrase, geoname id, lat/lon,
// match kind, sources and cues.
std::string extraction_to_json(const ExtractionResult& result);

}  // namespace tweetloc
