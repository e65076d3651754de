#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tweetloc/normalize.hpp"
#include "tweetloc/text.hpp"

namespace tweetloc {

enum class PosTag { Propn, Noun, Adj, Adp, Delim, Other };

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view name);

struct TagLexicons {
  WordSet prepositions;
  WordSet location_prepositions;
  WordSet adjectives;
  WordSet common_nouns;
  WordSet stoplist;

  // Reads prepositions.txt, location_prepositions.txt, adjectives.txt,
  // common_nouns.txt and stoplist.txt from dir.
  static TagLexicons load(const std::filesystem::path& dir);

  // Throws ConfigError unless location_prepositions is a subset of prepositions.
  void validate() const;

  bool is_common_word(std::string_view lower) const;
};

struct TaggedToken {
  Token token;
  PosTag tag = PosTag::Other;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

// With external_tags the tags are used as given. Otherwise the first
// matching rule wins:
//   DELIM token                                          -> Delim
//   lowercase form is a preposition                      -> Adp
//   capitalized, and not sentence-initial or not a
//   common noun / stop word                              -> Propn
//   known adjective, or -ern/-ful/-ous/-ish/-al ending
//   on a word that is not a common noun                  -> Adj
//   common noun                                          -> Noun
//   lowercase alphabetic word outside the stoplist       -> Noun
//   anything else                                        -> Other
// Throws ContractError if external_tags has a different length than tokens.
std::vector<TaggedToken> tag_tokens(std::span<const Token> tokens, const TagLexicons& lexicons,
                                    std::optional<std::span<const PosTag>> external_tags = std::nullopt);

}  // namespace tweetloc
