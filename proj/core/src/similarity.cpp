#include "tweetloc/similarity.hpp"

#include <algorithm>
#include <vector>

namespace tweetloc {

namespace {

double jaro_ordered(std::string_view a, std::string_view b) {
  const std::size_t window = std::max(a.size(), b.size()) / 2 == 0 ? 0 : std::max(a.size(), b.size()) / 2 - 1;
  std::vector<bool> a_matched(a.size(), false);
  std::vector<bool> b_matched(b.size(), false);
  std::size_t matches = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t lo = i > window ? i - window : 0;
    std::size_t hi = std::min(b.size(), i + window + 1);
    for (std::size_t j = lo; j < hi; ++j) {
      if (b_matched[j] || a[i] != b[j]) continue;
      a_matched[i] = b_matched[j] = true;
      ++matches;
      break;
    }
  }
  if (matches == 0) return 0.0;

  std::size_t half_transpositions = 0;
  for (std::size_t i = 0, j = 0; i < a.size(); ++i) {
    if (!a_matched[i]) continue;
    while (!b_matched[j]) ++j;
    if (a[i] != b[j]) ++half_transpositions;
    ++j;
  }
  const double m = static_cast<double>(matches);
  const double t = static_cast<double>(half_transpositions / 2);
  return (m / static_cast<double>(a.size()) + m / static_cast<double>(b.size()) + (m - t) / m) / 3.0;
}

// Greedy matching is order dependent; a canonical argument order keeps the
// result symmetric.
bool ordered(std::string_view a, std::string_view b) { return a.size() < b.size() || (a.size() == b.size() && a <= b); }

}  // namespace

double jaro(std::string_view a, std::string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  if (a == b) return 1.0;
  return ordered(a, b) ? jaro_ordered(a, b) : jaro_ordered(b, a);
}

double jaro_winkler(std::string_view a, std::string_view b) {
  double sim = jaro(a, b);
  if (sim <= 0.0 || sim >= 1.0) return sim;
  std::size_t prefix = 0;
  const std::size_t limit = std::min<std::size_t>({4, a.size(), b.size()});
  while (prefix < limit && a[prefix] == b[prefix]) ++prefix;
  return sim + static_cast<double>(prefix) * 0.1 * (1.0 - sim);
}

}  // namespace tweetloc
