#include "tweetloc/segment.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "tweetloc/error.hpp"
#include "tweetloc/normalize.hpp"

namespace tweetloc {

UnigramModel::UnigramModel(const std::vector<std::pair<std::string, std::uint64_t>>& counts,
                           std::size_t max_word_len)
    : max_word_len_(max_word_len) {
  if (max_word_len_ == 0) throw ContractError("max_word_len must be positive");
  for (const auto& [word, count] : counts) {
    if (count == 0) throw ContractError("unigram count must be positive: " + word);
    if (word.empty()) throw ContractError("unigram word must not be empty");
    counts_[to_lower_ascii(word)] += count;
    total_ += count;
  }
  log10_total_ = total_ ? std::log10(static_cast<double>(total_)) : 0.0;
}

std::uint64_t UnigramModel::count(std::string_view word) const {
  auto it = counts_.find(word);
  return it == counts_.end() ? 0 : it->second;
}

double UnigramModel::log10_prob(std::string_view word) const {
  if (std::uint64_t c = count(word)) return std::log10(static_cast<double>(c)) - log10_total_;
  return 1.0 - log10_total_ - static_cast<double>(utf8_length(word));
}

LogScoreUnits UnigramModel::score_units(std::string_view word) const {
  return std::llround(log10_prob(word) * kLogScoreScale);
}

UnigramModel load_unigram_model(std::istream& in, std::size_t max_word_len) {
  std::vector<std::pair<std::string, std::uint64_t>> counts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) throw LoadError("expected word<TAB>count", line_no);
    std::string_view count_text = std::string_view(line).substr(tab + 1);
    if (count_text.empty() || count_text.size() > 19) throw LoadError("bad count", line_no);
    std::uint64_t count = 0;
    for (char c : count_text) {
      if (!is_ascii_digit(c)) throw LoadError("count is not a positive integer", line_no);
      count = count * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (count == 0) throw LoadError("count is not a positive integer", line_no);
    counts.emplace_back(line.substr(0, tab), count);
  }
  if (counts.empty()) throw LoadError("unigram model is empty");
  return UnigramModel(counts, max_word_len);
}

namespace {

struct Cell {
  LogScoreUnits score = std::numeric_limits<LogScoreUnits>::min();
  std::size_t words = 0;
  std::size_t prev = 0;  // boundary index where the last word starts
  bool reachable = false;
};

std::vector<std::string> backtrack(const std::vector<Cell>& cells, const std::vector<std::size_t>& bounds,
                                   std::string_view s, std::size_t end) {
  std::vector<std::string> words;
  while (end > 0) {
    std::size_t start = cells[end].prev;
    words.emplace_back(s.substr(bounds[start], bounds[end] - bounds[start]));
    end = start;
  }
  return {words.rbegin(), words.rend()};
}

}  // namespace

Segmentation segment_word(const UnigramModel& model, std::string_view input) {
  std::string s = to_lower_ascii(input);
  if (s.empty()) return {};

  std::vector<std::size_t> bounds;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!is_utf8_continuation(s[i])) bounds.push_back(i);
  bounds.push_back(s.size());
  const std::size_t n = bounds.size() - 1;

  std::vector<Cell> cells(n + 1);
  cells[0].score = 0;
  cells[0].reachable = true;
  for (std::size_t end = 1; end <= n; ++end) {
    std::size_t first = end > model.max_word_len() ? end - model.max_word_len() : 0;
    for (std::size_t start = first; start < end; ++start) {
      const Cell& from = cells[start];
      if (!from.reachable) continue;
      std::string_view word(s.data() + bounds[start], bounds[end] - bounds[start]);
      LogScoreUnits score = from.score + model.score_units(word);
      std::size_t words = from.words + 1;
      Cell& cell = cells[end];
      bool better = !cell.reachable || score > cell.score || (score == cell.score && words < cell.words);
      if (!better && score == cell.score && words == cell.words) {
        // Equal score and length: keep the lexicographically smaller list.
        auto candidate = backtrack(cells, bounds, s, start);
        candidate.emplace_back(word);
        better = candidate < backtrack(cells, bounds, s, end);
      }
      if (better) cell = Cell{score, words, start, true};
    }
  }

  Segmentation out;
  out.words = backtrack(cells, bounds, s, n);
  out.score_units = cells[n].score;
  out.log_score = static_cast<double>(out.score_units) / kLogScoreScale;
  return out;
}

std::vector<std::string> hashtag_expansions(const UnigramModel& model, std::string_view body) {
  std::vector<std::string> out;
  std::vector<std::string> keys;
  auto add = [&](std::string phrase) {
    std::string key = normalize_name(phrase);
    if (key.empty()) return;
    for (const auto& k : keys)
      if (k == key) return;
    keys.push_back(std::move(key));
    out.push_back(std::move(phrase));
  };
  add(std::string(body));

  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == '_') {
      if (i > start) parts.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }

  std::vector<std::string> camel;
  std::vector<std::string> segmented;
  for (std::string_view part : parts) {
    for (auto& piece : split_camel_case(part)) camel.push_back(std::move(piece));
    for (auto& word : segment_word(model, part).words) segmented.push_back(std::move(word));
  }
  add(join(camel, " "));
  add(join(segmented, " "));
  return out;
}

}  // namespace tweetloc
