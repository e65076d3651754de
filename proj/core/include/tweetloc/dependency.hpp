#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tweetloc/normalize.hpp"

namespace tweetloc {

enum class GraphSource { Supplied, TokenWindowFallback };

// Undirected dependency graph over the tokens of one tweet.
class DependencyGraph {
 public:
  explicit DependencyGraph(std::size_t n = 0, GraphSource source = GraphSource::Supplied);

  std::size_t size() const { return adjacency_.size(); }
  GraphSource source() const { return source_; }

  // Self-loops and duplicates are ignored. Throws ContractError on a bad index.
  void add_edge(std::size_t a, std::size_t b);
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_.at(i); }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Hop counts from `from` to every node, nullopt where unreachable.
  std::vector<std::optional<std::size_t>> distances_from(std::size_t from) const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  GraphSource source_;
};

// Shortest undirected path length by BFS, nullopt when unreachable.
// Throws ContractError if i or j is out of range.
std::optional<std::size_t> graph_distance(const DependencyGraph& g, std::size_t i, std::size_t j);

// Links consecutive WORD tokens; DELIM tokens stay isolated, so the distance
// between two words equals their offset in the word sequence.
DependencyGraph token_window_graph(std::span<const Token> tokens);

struct ConlluToken {
  std::size_t id = 0;  // 1-based
  std::string form;
  std::string upos;
  std::size_t head = 0;  // 0 = root
  std::string deprel;
};

struct ConlluSentence {
  std::string sent_id;
  std::string text;
  std::vector<ConlluToken> tokens;
};

// Multiword ranges (1-2) and empty nodes (1.1) are skipped.
// Throws LoadError with the line number on malformed rows.
std::vector<ConlluSentence> read_conllu(std::istream& in);

// Maps parse rows onto tokens in order by surface. A punctuation row that
// has no counterpart is dropped; a DELIM token without a row stays isolated.
// Throws ContractError when a word cannot be aligned.
DependencyGraph align_parse(const ConlluSentence& parse, std::span<const Token> tokens);

}  // namespace tweetloc
