#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tweetloc/text.hpp"

namespace tweetloc {

// Log-probabilities are carried as fixed-point integers (1e-9 of a log10
// unit) so that sums are exact and equal-scoring segmentations tie exactly.
using LogScoreUnits = std::int64_t;
inline constexpr double kLogScoreScale = 1e9;

class UnigramModel {
 public:
  static constexpr std::size_t kDefaultMaxWordLen = 20;

  UnigramModel() = default;
  // Words are lowercased; duplicate keys are summed. Counts must be positive.
  explicit UnigramModel(const std::vector<std::pair<std::string, std::uint64_t>>& counts,
                        std::size_t max_word_len = kDefaultMaxWordLen);

  std::uint64_t count(std::string_view word) const;
  std::uint64_t total() const { return total_; }
  std::size_t size() const { return counts_.size(); }
  std::size_t max_word_len() const { return max_word_len_; }
  bool empty() const { return counts_.empty(); }

  // log10 P(w): count/total in vocabulary, 10 / (total * 10^len) otherwise,
  // len in code points.
  double log10_prob(std::string_view word) const;
  LogScoreUnits score_units(std::string_view word) const;

 private:
  std::unordered_map<std::string, std::uint64_t, StringHash, std::equal_to<>> counts_;
  std::uint64_t total_ = 0;
  std::size_t max_word_len_ = kDefaultMaxWordLen;
  double log10_total_ = 0.0;
};

// Reads "word<TAB>count" lines. Throws LoadError naming the line on a
// malformed entry, or on a stream without any entry.
UnigramModel load_unigram_model(std::istream& in,
                                std::size_t max_word_len = UnigramModel::kDefaultMaxWordLen);

struct Segmentation {
  std::vector<std::string> words;
  double log_score = 0.0;
  LogScoreUnits score_units = 0;
};

// Highest-scoring split of the lowercased input into words of at most
// max_word_len code points. Ties go to fewer words, then to the
// lexicographically smallest word list.
Segmentation segment_word(const UnigramModel& model, std::string_view s);

// Original body first, then the CamelCase split and the best segmentation,
// space-joined, dropping case-insensitive duplicates. Underscores separate
// words and each part is segmented separately.
std::vector<std::string> hashtag_expansions(const UnigramModel& model, std::string_view hashtag_body);

}  // namespace tweetloc
