#include "tweetloc/tagger.hpp"

#include <array>

#include "tweetloc/error.hpp"

namespace tweetloc {

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::Propn: return "PROPN";
    case PosTag::Noun: return "NOUN";
    case PosTag::Adj: return "ADJ";
    case PosTag::Adp: return "ADP";
    case PosTag::Delim: return "DELIM";
    case PosTag::Other: return "OTHER";
  }
  return "OTHER";
}

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  for (PosTag t : {PosTag::Propn, PosTag::Noun, PosTag::Adj, PosTag::Adp, PosTag::Delim, PosTag::Other})
    if (to_string(t) == name) return t;
  return std::nullopt;
}

TagLexicons TagLexicons::load(const std::filesystem::path& dir) {
  TagLexicons lex;
  lex.prepositions = read_word_list(dir / "prepositions.txt");
  lex.location_prepositions = read_word_list(dir / "location_prepositions.txt");
  lex.adjectives = read_word_list(dir / "adjectives.txt");
  lex.common_nouns = read_word_list(dir / "common_nouns.txt");
  lex.stoplist = read_word_list(dir / "stoplist.txt");
  lex.validate();
  return lex;
}

void TagLexicons::validate() const {
  for (const auto& w : location_prepositions)
    if (!prepositions.contains(w)) throw ConfigError("location preposition '" + w + "' is not a preposition");
}

bool TagLexicons::is_common_word(std::string_view lower) const {
  return stoplist.contains(lower) || common_nouns.contains(lower) || adjectives.contains(lower);
}

namespace {

bool is_alpha_word(std::string_view s) {
  for (char c : s)
    if (!is_ascii_lower(c) && !is_ascii_upper(c) && !is_non_ascii(c)) return false;
  return !s.empty();
}

bool has_adjective_ending(std::string_view lower) {
  static constexpr std::array<std::string_view, 5> kEndings{"ern", "ful", "ous", "ish", "al"};
  if (!is_alpha_word(lower)) return false;
  for (std::string_view e : kEndings)
    if (lower.size() > e.size() + 1 && lower.ends_with(e)) return true;
  return false;
}

PosTag tag_one(const Token& token, const TagLexicons& lex) {
  if (token.is_delim()) return PosTag::Delim;
  std::string lower = to_lower_ascii(token.surface);
  if (lex.prepositions.contains(lower)) return PosTag::Adp;
  if (is_ascii_upper(token.surface.front())) {
    bool common = lex.common_nouns.contains(lower) || lex.stoplist.contains(lower);
    if (!token.sentence_initial || !common) return PosTag::Propn;
  }
  if (lex.adjectives.contains(lower) || (has_adjective_ending(lower) && !lex.common_nouns.contains(lower)))
    return PosTag::Adj;
  if (lex.common_nouns.contains(lower)) return PosTag::Noun;
  if (is_lowercase_word(token.surface) && is_alpha_word(token.surface) && !lex.stoplist.contains(lower))
    return PosTag::Noun;
  return PosTag::Other;
}

}  // namespace

std::vector<TaggedToken> tag_tokens(std::span<const Token> tokens, const TagLexicons& lexicons,
                                    std::optional<std::span<const PosTag>> external_tags) {
  if (external_tags && external_tags->size() != tokens.size())
    throw ContractError("external tags: expected " + std::to_string(tokens.size()) + " tags, got " +
                        std::to_string(external_tags->size()));
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    PosTag tag = external_tags ? (*external_tags)[i] : tag_one(tokens[i], lexicons);
    out.push_back({tokens[i], tag});
  }
  return out;
}

}  // namespace tweetloc
