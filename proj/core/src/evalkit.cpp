#include "tweetloc/evalkit.hpp"

#include <algorithm>
#include <cstdio>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "tweetloc/error.hpp"
#include "tweetloc/records.hpp"

namespace tweetloc {

using nlohmann::json;

std::vector<GoldRecord> read_gold_corpus(std::istream& in) {
  std::vector<GoldRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json j = json::parse(line);
      GoldRecord rec;
      rec.tweet = parse_tweet_record(line).tweet;
      if (!j.contains("gold") || !j["gold"].is_array()) throw LoadError("gold must be an array of names");
      std::vector<std::string> keys;
      for (const auto& g : j["gold"]) {
        if (!g.is_string()) throw LoadError("gold names must be strings");
        std::string name = g.get<std::string>();
        std::string key = normalize_name(name);
        if (key.empty()) throw LoadError("empty gold name");
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
        keys.push_back(std::move(key));
        rec.gold_locations.push_back(std::move(name));
      }
      out.push_back(std::move(rec));
    } catch (const json::exception& e) {
      throw LoadError(e.what(), line_no);
    } catch (const LoadError& e) {
      throw LoadError(e.what(), line_no);
    }
  }
  return out;
}

double f_score(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

namespace {

std::vector<std::string> accepted_names(const LocatedMention& m, const MatchRule& rule) {
  std::vector<std::string> names{normalize_name(m.candidate.phrase), normalize_name(m.matched_text)};
  if (rule.use_entry_names && rule.index) {
    if (const GazetteerEntry* e = rule.index->find_entry(m.entry_id)) {
      for (auto& n : rule.index->indexed_names(*e)) names.push_back(std::move(n));
    }
  }
  return names;
}

// Maximum bipartite matching (Kuhn); adjacency from gold to retrieved.
std::vector<int> match_gold(const std::vector<std::vector<std::size_t>>& adj, std::size_t retrieved) {
  std::vector<int> owner(retrieved, -1);
  std::vector<int> gold_to(adj.size(), -1);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t g) {
    for (std::size_t r : adj[g]) {
      if (visited[r]) continue;
      visited[r] = 1;
      if (owner[r] < 0 || augment(static_cast<std::size_t>(owner[r]))) {
        owner[r] = static_cast<int>(g);
        gold_to[g] = static_cast<int>(r);
        return true;
      }
    }
    return false;
  };
  for (std::size_t g = 0; g < adj.size(); ++g) {
    visited.assign(retrieved, 0);
    augment(g);
  }
  return gold_to;
}

}  // namespace

EvalReport evaluate(std::span<const GoldRecord> corpus, const Extractor& extractor, const MatchRule& rule) {
  if (corpus.empty()) throw ContractError("evaluation corpus is empty");
  EvalReport report;
  for (const GoldRecord& rec : corpus) {
    TweetEvaluation te;
    te.id = rec.tweet.id;
    te.correct = rec.gold_locations;

    std::vector<LocatedMention> mentions;
    const auto start = std::chrono::steady_clock::now();
    try {
      mentions = extractor(rec.tweet).mentions;
    } catch (const std::exception& e) {
      spdlog::error("tweet {}: extraction failed: {}", rec.tweet.id, e.what());
      te.failed = true;
    }
    report.total_elapsed += std::chrono::steady_clock::now() - start;

    std::vector<std::vector<std::string>> names;
    for (const auto& m : mentions) {
      te.retrieved.push_back(m.candidate.phrase);
      names.push_back(accepted_names(m, rule));
    }
    std::vector<std::vector<std::size_t>> adj(te.correct.size());
    for (std::size_t g = 0; g < te.correct.size(); ++g) {
      const std::string key = normalize_name(te.correct[g]);
      for (std::size_t r = 0; r < names.size(); ++r)
        if (std::find(names[r].begin(), names[r].end(), key) != names[r].end()) adj[g].push_back(r);
    }
    auto gold_to = match_gold(adj, names.size());
    for (std::size_t g = 0; g < gold_to.size(); ++g)
      if (gold_to[g] >= 0) te.matched.push_back(te.correct[g]);

    report.matched_total += te.matched.size();
    report.retrieved_total += te.retrieved.size();
    report.correct_total += te.correct.size();
    report.per_tweet.push_back(std::move(te));
  }
  report.tweets_evaluated = corpus.size();
  if (report.retrieved_total > 0)
    report.precision = static_cast<double>(report.matched_total) / static_cast<double>(report.retrieved_total);
  if (report.correct_total > 0)
    report.recall = static_cast<double>(report.matched_total) / static_cast<double>(report.correct_total);
  report.f_score = f_score(report.precision, report.recall);
  return report;
}

TimingResult time_extractor(std::span<const RawTweet> corpus, const Extractor& extractor, int repeats) {
  if (repeats < 1) throw ContractError("repeats must be at least 1");
  TimingResult result;
  if (corpus.empty()) return result;
  std::optional<std::chrono::nanoseconds> best;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    for (const RawTweet& t : corpus) (void)extractor(t);
    std::chrono::nanoseconds total = std::chrono::steady_clock::now() - start;
    if (!best || total < *best) best = total;
  }
  result.total = *best;
  result.mean_per_tweet = *best / static_cast<std::int64_t>(corpus.size());
  return result;
}

std::string report_json(const std::string& method, const EvalReport& report) {
  json per_tweet = json::array();
  for (const auto& t : report.per_tweet)
    per_tweet.push_back({{"id", t.id},
                         {"retrieved", t.retrieved},
                         {"correct", t.correct},
                         {"matched", t.matched},
                         {"failed", t.failed}});
  json j{{"method", method},
         {"Precision", report.precision},
         {"Recall", report.recall},
         {"F-score", report.f_score},
         {"Timing", std::chrono::duration<double>(report.total_elapsed).count()},
         {"tweets", report.tweets_evaluated},
         {"matched", report.matched_total},
         {"retrieved", report.retrieved_total},
         {"correct", report.correct_total},
         {"per_tweet", std::move(per_tweet)}};
  return j.dump(2);
}

}  // namespace tweetloc
