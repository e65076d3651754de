#include "oracles.hpp"

#include <algorithm>
#include <cmath>

#include "tweetloc/text.hpp"

namespace oracle {

BruteSegmentation brute_force_segment(const tweetloc::UnigramModel& model, std::string_view s) {
  const std::string lower = tweetloc::to_lower_ascii(s);
  std::vector<std::size_t> cuts;  // byte offsets of code point starts after the first
  for (std::size_t i = 1; i < lower.size(); ++i)
    if (!tweetloc::is_utf8_continuation(lower[i])) cuts.push_back(i);

  BruteSegmentation best;
  bool have = false;
  const std::uint64_t patterns = std::uint64_t{1} << cuts.size();
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    std::vector<std::string> words;
    std::size_t start = 0;
    bool too_long = false;
    for (std::size_t k = 0; k <= cuts.size(); ++k) {
      std::size_t end = k == cuts.size() ? lower.size() : cuts[k];
      if (k < cuts.size() && !(mask & (std::uint64_t{1} << k))) continue;
      words.push_back(lower.substr(start, end - start));
      if (tweetloc::utf8_length(words.back()) > model.max_word_len()) too_long = true;
      start = end;
    }
    ++best.candidates_examined;
    if (too_long) continue;
    tweetloc::LogScoreUnits score = 0;
    for (const auto& w : words) score += model.score_units(w);
    bool better = !have || score > best.score ||
                  (score == best.score &&
                   (words.size() < best.words.size() || (words.size() == best.words.size() && words < best.words)));
    if (better) {
      best.words = std::move(words);
      best.score = score;
      have = true;
    }
  }
  return best;
}

long double reference_log10_prob(const tweetloc::UnigramModel& model, std::string_view word) {
  const long double total = static_cast<long double>(model.total());
  const std::uint64_t c = model.count(tweetloc::to_lower_ascii(word));
  if (c > 0) return std::log10(static_cast<long double>(c) / total);
  return std::log10(10.0L / total) - static_cast<long double>(tweetloc::utf8_length(word));
}

double reference_jaro_winkler(std::string_view a, std::string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  if (a.size() > b.size() || (a.size() == b.size() && a > b)) std::swap(a, b);

  const int la = static_cast<int>(a.size()), lb = static_cast<int>(b.size());
  const int range = std::max(0, std::max(la, lb) / 2 - 1);
  std::vector<int> b_taken(lb, 0);
  std::string a_common, b_common;
  std::vector<int> a_pos;
  for (int i = 0; i < la; ++i) {
    for (int j = std::max(0, i - range); j <= std::min(lb - 1, i + range); ++j) {
      if (!b_taken[j] && a[i] == b[j]) {
        b_taken[j] = 1;
        a_common.push_back(a[i]);
        break;
      }
    }
  }
  for (int j = 0; j < lb; ++j)
    if (b_taken[j]) b_common.push_back(b[j]);
  const double m = static_cast<double>(a_common.size());
  if (m == 0) return 0.0;
  int mismatched = 0;
  for (std::size_t k = 0; k < a_common.size(); ++k) mismatched += a_common[k] != b_common[k];
  const double t = mismatched / 2;
  const double jaro = (m / la + m / lb + (m - t) / m) / 3.0;
  int l = 0;
  while (l < 4 && l < la && a[l] == b[l]) ++l;
  return jaro + l * 0.1 * (1.0 - jaro);
}

std::vector<std::vector<std::optional<std::size_t>>> floyd_warshall(const tweetloc::DependencyGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::optional<std::size_t>>> d(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[k][j]) continue;
        std::size_t via = *d[i][k] + *d[k][j];
        if (!d[i][j] || via < *d[i][j]) d[i][j] = via;
      }
    }
  return d;
}

tweetloc::DependencyGraph random_graph(std::mt19937& rng, std::size_t n, double edge_probability) {
  tweetloc::DependencyGraph g(n);
  std::bernoulli_distribution coin(edge_probability);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

}  // namespace oracle
