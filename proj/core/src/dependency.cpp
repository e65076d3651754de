#include "tweetloc/dependency.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <string_view>

#include "tweetloc/error.hpp"
#include "tweetloc/text.hpp"

namespace tweetloc {

DependencyGraph::DependencyGraph(std::size_t n, GraphSource source) : adjacency_(n), source_(source) {}

void DependencyGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size())
    throw ContractError("edge (" + std::to_string(a) + ", " + std::to_string(b) + ") outside graph of size " +
                        std::to_string(size()));
  if (a == b) return;
  auto& na = adjacency_[a];
  if (std::find(na.begin(), na.end(), b) != na.end()) return;
  na.push_back(b);
  adjacency_[b].push_back(a);
}

std::vector<std::pair<std::size_t, std::size_t>> DependencyGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b : adjacency_[a])
      if (a < b) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::optional<std::size_t>> DependencyGraph::distances_from(std::size_t from) const {
  if (from >= size()) throw ContractError("node " + std::to_string(from) + " outside graph");
  std::vector<std::optional<std::size_t>> dist(size());
  std::deque<std::size_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adjacency_[u]) {
      if (dist[v]) continue;
      dist[v] = *dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

std::optional<std::size_t> graph_distance(const DependencyGraph& g, std::size_t i, std::size_t j) {
  if (i >= g.size() || j >= g.size())
    throw ContractError("distance query (" + std::to_string(i) + ", " + std::to_string(j) + ") outside graph of size " +
                        std::to_string(g.size()));
  if (i == j) return 0;
  return g.distances_from(i)[j];
}

DependencyGraph token_window_graph(std::span<const Token> tokens) {
  DependencyGraph g(tokens.size(), GraphSource::TokenWindowFallback);
  std::optional<std::size_t> previous;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_word()) continue;
    if (previous) g.add_edge(*previous, i);
    previous = i;
  }
  return g;
}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

bool parse_index(std::string_view s, std::size_t& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string_view comment_value(std::string_view line, std::string_view key) {
  // "# key = value"
  std::string_view rest = line.substr(1);
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  if (!rest.starts_with(key)) return {};
  rest.remove_prefix(key.size());
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  if (rest.empty() || rest.front() != '=') return {};
  rest.remove_prefix(1);
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  return rest;
}

}  // namespace

std::vector<ConlluSentence> read_conllu(std::istream& in) {
  std::vector<ConlluSentence> out;
  ConlluSentence current;
  bool open = false;
  auto flush = [&] {
    if (open && !current.tokens.empty()) out.push_back(std::move(current));
    current = {};
    open = false;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      if (auto id = comment_value(line, "sent_id"); !id.empty()) {
        if (!current.tokens.empty()) flush();
        current.sent_id = std::string(id);
      } else if (auto text = comment_value(line, "text"); !text.empty()) {
        current.text = std::string(text);
      }
      open = true;
      continue;
    }
    auto cols = split_tabs(line);
    if (cols.size() != 10)
      throw LoadError("expected 10 CoNLL-U columns, got " + std::to_string(cols.size()), line_no);
    if (cols[0].find_first_of("-.") != std::string_view::npos) continue;
    ConlluToken tok;
    if (!parse_index(cols[0], tok.id) || tok.id == 0) throw LoadError("bad token id '" + std::string(cols[0]) + "'", line_no);
    if (!parse_index(cols[6], tok.head)) throw LoadError("bad head '" + std::string(cols[6]) + "'", line_no);
    if (tok.id != current.tokens.size() + 1) throw LoadError("token ids must be consecutive", line_no);
    tok.form = std::string(cols[1]);
    tok.upos = std::string(cols[3]);
    tok.deprel = std::string(cols[7]);
    current.tokens.push_back(std::move(tok));
    open = true;
  }
  flush();

  for (const auto& s : out)
    for (const auto& t : s.tokens)
      if (t.head > s.tokens.size())
        throw LoadError("sentence '" + s.sent_id + "': head " + std::to_string(t.head) + " out of range");
  return out;
}

namespace {

bool is_punctuation_row(const ConlluToken& row) {
  if (row.upos == "PUNCT" || row.upos == "SYM") return true;
  return std::none_of(row.form.begin(), row.form.end(),
                      [](char c) { return is_ascii_lower(c) || is_ascii_upper(c) || is_ascii_digit(c) || is_non_ascii(c); });
}

// Rows for text the normalizer removes.
bool is_removed_row(const ConlluToken& row) {
  std::string_view f = row.form;
  return is_punctuation_row(row) || f.starts_with('@') || f.starts_with("http://") || f.starts_with("https://") ||
         f.starts_with("t.co/") || f == "RT" || f == "'s" || f == "’s";
}

std::string_view strip_hash(std::string_view f) {
  while (f.starts_with('#')) f.remove_prefix(1);
  return f;
}

}  // namespace

DependencyGraph align_parse(const ConlluSentence& parse, std::span<const Token> tokens) {
  const std::size_t rows = parse.tokens.size();
  // Tokens covered by each row; a row may span several tokens ("8.30", a
  // hashtag split into CamelCase segments).
  std::vector<std::vector<std::size_t>> groups(rows);
  std::vector<bool> aligned_token(tokens.size(), false);

  std::size_t pos = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const ConlluToken& row = parse.tokens[r];
    std::string_view form = strip_hash(row.form);

    auto try_match = [&](std::size_t at) -> std::size_t {
      std::string acc;
      std::size_t j = at;
      while (j < tokens.size() && acc.size() < form.size()) {
        acc += tokens[j].surface;
        if (!form.starts_with(acc)) return 0;
        ++j;
      }
      return acc == form ? j - at : 0;
    };

    std::size_t start = pos;
    std::size_t len = form.empty() ? 0 : try_match(start);
    // Delimiter tokens the parse does not mention are skipped.
    while (len == 0 && start < tokens.size() && tokens[start].is_delim()) {
      ++start;
      len = try_match(start);
    }
    if (len == 0) {
      if (is_removed_row(row)) continue;
      throw ContractError("parse '" + parse.sent_id + "': row " + std::to_string(row.id) + " '" + row.form +
                          "' does not align with the token stream");
    }
    for (std::size_t k = start; k < start + len; ++k) {
      groups[r].push_back(k);
      aligned_token[k] = true;
    }
    pos = start + len;
  }

  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (tokens[i].is_word() && !aligned_token[i])
      throw ContractError("parse '" + parse.sent_id + "': token '" + tokens[i].surface + "' has no parse row");

  DependencyGraph g(tokens.size(), GraphSource::Supplied);
  for (const auto& group : groups)
    for (std::size_t k = 1; k < group.size(); ++k) g.add_edge(group[k - 1], group[k]);

  // A dropped row passes its dependents up to the nearest aligned ancestor.
  auto aligned_ancestor = [&](std::size_t head) -> std::optional<std::size_t> {
    for (std::size_t steps = 0; head != 0 && steps <= rows; ++steps) {
      if (!groups[head - 1].empty()) return head - 1;
      head = parse.tokens[head - 1].head;
    }
    return std::nullopt;
  };
  for (std::size_t r = 0; r < rows; ++r) {
    if (groups[r].empty()) continue;
    if (auto h = aligned_ancestor(parse.tokens[r].head)) g.add_edge(groups[r].front(), groups[*h].front());
  }
  return g;
}

}  // namespace tweetloc
