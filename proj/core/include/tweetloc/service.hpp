#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tweetloc/pipeline.hpp"
#include "tweetloc/records.hpp"
#include "tweetloc/text.hpp"

namespace tweetloc {

struct TweetRecord {
  RawTweet tweet;
  ExtractionResult result;
  std::chrono::sys_days day_key{};
  int hour = 0;
  std::vector<std::string> matched_terms;

  friend bool operator==(const TweetRecord&, const TweetRecord&) = default;
};

struct DayCounts {
  std::size_t tagged = 0;
  std::size_t untagged = 0;

  friend bool operator==(const DayCounts&, const DayCounts&) = default;
};

// Immutable view of the store at one generation.
class StoreSnapshot {
 public:
  using Batch = std::vector<TweetRecord>;

  StoreSnapshot() = default;
  StoreSnapshot(std::vector<std::shared_ptr<const Batch>> batches, std::map<std::chrono::sys_days, DayCounts> by_day,
                std::uint64_t generation);

  std::uint64_t generation() const { return generation_; }
  std::size_t record_count() const { return record_count_; }
  const std::map<std::chrono::sys_days, DayCounts>& by_day() const { return by_day_; }
  const std::vector<std::shared_ptr<const Batch>>& batches() const { return batches_; }

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& batch : batches_)
      for (const TweetRecord& r : *batch) f(r);
  }

 private:
  std::vector<std::shared_ptr<const Batch>> batches_;
  std::map<std::chrono::sys_days, DayCounts> by_day_;
  std::uint64_t generation_ = 0;
  std::size_t record_count_ = 0;
};

struct IngestReport {
  std::size_t accepted = 0;
  std::size_t duplicates = 0;
  std::size_t errors = 0;

  friend bool operator==(const IngestReport&, const IngestReport&) = default;
};

struct StoreOptions {
  // Empty path keeps the store in memory only.
  std::filesystem::path log_path;
  // Reject tweets whose share of known English words is below this; 0 disables.
  double english_min_fraction = 0.0;
};

// Append-only tweet store: one writer, any number of snapshot readers.
class TweetStore {
 public:
  // Replays an existing log. Throws StoreError if the log cannot be opened.
  TweetStore(std::shared_ptr<const Pipeline> pipeline, StoreOptions options);

  // Runs extraction on new tweets and commits them as one generation.
  // Duplicates by id or normalized text are skipped. Throws StoreError if the
  // batch cannot be persisted; nothing is committed in that case.
  IngestReport ingest(std::span<const TweetInput> batch);
  IngestReport ingest_body(std::string_view body);

  std::shared_ptr<const StoreSnapshot> snapshot() const;
  const Pipeline& pipeline() const { return *pipeline_; }

 private:
  TweetRecord make_record(const TweetInput& input) const;
  bool looks_english(std::span<const Token> tokens) const;
  void publish(std::shared_ptr<const StoreSnapshot> next);

  std::shared_ptr<const Pipeline> pipeline_;
  StoreOptions options_;
  WordSet tracked_terms_;

  std::mutex write_mutex_;
  WordSet seen_ids_;
  WordSet seen_texts_;

  mutable std::mutex snapshot_mutex_;
  std::shared_ptr<const StoreSnapshot> snapshot_;
};

struct QueryFilter {
  std::vector<std::string> terms;  // lowercase, OR-ed, substring of the text
  std::optional<std::chrono::sys_days> from;
  std::optional<std::chrono::sys_days> to;

  // From query parameters q, from, to. Throws RequestError on a bad date or
  // an inverted range.
  static QueryFilter parse(std::optional<std::string_view> q, std::optional<std::string_view> from,
                           std::optional<std::string_view> to);

  bool matches(const TweetRecord& record) const;
};

// GeoJSON FeatureCollection, one Point feature per mention of a matching
// tagged record.
std::string tweets_geojson(const StoreSnapshot& snapshot, const QueryFilter& filter);

struct Page {
  std::size_t number = 1;  // 1-based
  std::size_t size = 50;
};

// JSON object {page, page_size, total, tweets: [...]} of untagged records.
std::string untagged_json(const StoreSnapshot& snapshot, const QueryFilter& filter, Page page);

// Tagged record counts per day. With both bounds set, every day in the range
// is listed, zeros included.
std::vector<std::pair<std::chrono::sys_days, std::size_t>> histogram(const StoreSnapshot& snapshot,
                                                                    const QueryFilter& filter);
std::string histogram_json(const StoreSnapshot& snapshot, const QueryFilter& filter);

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

using QueryParams = std::multimap<std::string, std::string>;

// Routes the HTTP API independently of the transport.
class Api {
 public:
  explicit Api(TweetStore& store) : store_(store) {}

  ApiResponse handle(std::string_view method, std::string_view path, const QueryParams& params,
                     std::string_view body);

 private:
  TweetStore& store_;
};

// Blocking HTTP server on host:port. port 0 picks a free port, reported via
// on_listening before serving.
class HttpServer {
 public:
  explicit HttpServer(Api& api);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Returns the bound port, or -1 on failure.
  int bind(const std::string& host, int port);
  void listen_after_bind();
  void stop();
  bool is_running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tweetloc
