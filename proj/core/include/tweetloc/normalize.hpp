#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tweetloc {

struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

struct RawTweet {
  std::string id;
  std::string text;
  std::chrono::sys_seconds created_at{};
  std::optional<GeoPoint> geo;
  std::optional<std::string> source_meta;

  friend bool operator==(const RawTweet&, const RawTweet&) = default;
};

// Throws ContractError on an empty id or out-of-range coordinates.
void validate(const RawTweet& tweet);

enum class TokenKind { Word, Delim };

// Byte offsets into the original UTF-8 text, half open.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::string surface;
  Span span;
  TokenKind kind = TokenKind::Word;
  // Hashtag body without '#', set on every token produced from a hashtag.
  std::optional<std::string> hashtag_origin;
  // CamelCase segment of the preceding intact word; shares that word's span.
  bool camel_split = false;
  // First word of the tweet or first word after '.', '!' or '?'.
  bool sentence_initial = false;

  bool is_word() const { return kind == TokenKind::Word; }
  bool is_delim() const { return kind == TokenKind::Delim; }

  friend bool operator==(const Token&, const Token&) = default;
};

inline constexpr std::string_view kDelimiters = ",;:|/-.";

inline bool is_delimiter(char c) { return kDelimiters.find(c) != std::string_view::npos; }

// Cleans tweet text into WORD and DELIM tokens:
//  - URLs (http://, https://, t.co/ up to whitespace) and @mentions are dropped
//  - a leading "RT" is dropped
//  - brackets and ellipses ("..", "…") are dropped; other non-delimiter
//    punctuation ends the current word and is discarded
//  - '#' is stripped and the hashtag body kept, with '_' separating words
//  - a CamelCase word is emitted intact followed by its segments
// No case folding or stemming is applied.
std::vector<Token> normalize_tweet(std::string_view raw_text);

// Splits at every lowercase-to-uppercase boundary.
std::vector<std::string> split_camel_case(std::string_view word);

// Token stream for tagging: an intact CamelCase word is replaced by its
// segments so that each piece of text is tagged once.
std::vector<Token> tagging_view(std::span<const Token> tokens);

// Space-joined surfaces of the WORD tokens that are not CamelCase segments.
std::string normalized_text(std::span<const Token> tokens);

}  // namespace tweetloc
