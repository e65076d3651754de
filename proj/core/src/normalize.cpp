#include "tweetloc/normalize.hpp"

#include <cstdint>

#include "tweetloc/error.hpp"
#include "tweetloc/text.hpp"

namespace tweetloc {

void validate(const RawTweet& tweet) {
  if (tweet.id.empty()) throw ContractError("tweet id must not be empty");
  if (tweet.geo) {
    if (!(tweet.geo->lat >= -90.0 && tweet.geo->lat <= 90.0))
      throw ContractError("latitude out of range in tweet " + tweet.id);
    if (!(tweet.geo->lon >= -180.0 && tweet.geo->lon <= 180.0))
      throw ContractError("longitude out of range in tweet " + tweet.id);
  }
}

std::vector<std::string> split_camel_case(std::string_view word) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (is_ascii_lower(word[i - 1]) && is_ascii_upper(word[i])) {
      parts.emplace_back(word.substr(start, i - start));
      start = i;
    }
  }
  parts.emplace_back(word.substr(start));
  return parts;
}

namespace {

enum class CharClass { Space, Word, Delim, Hash, Apostrophe, Sentence, Other };

struct CodePoint {
  std::uint32_t value = 0;
  std::size_t length = 1;
};

CodePoint decode(std::string_view s, std::size_t i) {
  auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char b0 = byte(i);
  std::size_t len = b0 < 0x80 ? 1 : (b0 >> 5) == 0x6 ? 2 : (b0 >> 4) == 0xE ? 3 : (b0 >> 3) == 0x1E ? 4 : 1;
  if (i + len > s.size()) return {b0, 1};
  std::uint32_t cp = len == 1 ? b0 : len == 2 ? (b0 & 0x1F) : len == 3 ? (b0 & 0x0F) : (b0 & 0x07);
  for (std::size_t k = 1; k < len; ++k) {
    if (!is_utf8_continuation(s[i + k])) return {b0, 1};
    cp = (cp << 6) | (byte(i + k) & 0x3F);
  }
  return {cp, len};
}

// Non-ASCII code points that are punctuation, symbols or emoji rather than letters.
bool is_symbol(std::uint32_t cp) {
  return (cp >= 0x00A0 && cp <= 0x00BF) || cp == 0x00D7 || cp == 0x00F7 || (cp >= 0x2000 && cp <= 0x2BFF) ||
         (cp >= 0x3000 && cp <= 0x303F) || (cp >= 0xFE00 && cp <= 0xFE0F) || cp == 0xFEFF ||
         (cp >= 0x1F000 && cp <= 0x1FAFF) || (cp >= 0xE0000 && cp <= 0xE007F);
}

CharClass classify(std::uint32_t cp) {
  if (cp < 0x80) {
    char c = static_cast<char>(cp);
    if (is_ascii_space(c)) return CharClass::Space;
    if (is_ascii_upper(c) || is_ascii_lower(c) || is_ascii_digit(c)) return CharClass::Word;
    if (c == '#') return CharClass::Hash;
    if (c == '\'') return CharClass::Apostrophe;
    if (c == '!' || c == '?') return CharClass::Sentence;
    if (is_delimiter(c)) return CharClass::Delim;
    return CharClass::Other;
  }
  if (cp == 0x2019) return CharClass::Apostrophe;
  if (cp == 0x00A0 || cp == 0x2028 || cp == 0x2029 || (cp >= 0x2000 && cp <= 0x200B)) return CharClass::Space;
  return is_symbol(cp) ? CharClass::Other : CharClass::Word;
}

bool starts_with_ci(std::string_view text, std::size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > text.size()) return false;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    char c = text[pos + k];
    if (is_ascii_upper(c)) c = static_cast<char>(c - 'A' + 'a');
    if (c != prefix[k]) return false;
  }
  return true;
}

bool is_handle_char(char c) { return is_ascii_upper(c) || is_ascii_lower(c) || is_ascii_digit(c) || c == '_'; }

enum Removal : std::uint8_t { kKept = 0, kRemoved = 1, kEllipsis = 2 };

// Marks bytes removed before tokenization: URLs, mentions, ellipses.
std::vector<std::uint8_t> removal_mask(std::string_view text) {
  std::vector<std::uint8_t> removed(text.size(), kKept);
  auto mark = [&](std::size_t from, std::size_t to, Removal why = kRemoved) {
    for (std::size_t k = from; k < to && k < removed.size(); ++k) removed[k] = why;
  };
  auto to_space = [&](std::size_t from) {
    while (from < text.size() && !is_ascii_space(text[from])) ++from;
    return from;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    bool boundary = i == 0 || !is_handle_char(text[i - 1]);
    if (starts_with_ci(text, i, "http://") || starts_with_ci(text, i, "https://") ||
        (boundary && starts_with_ci(text, i, "t.co/"))) {
      std::size_t end = to_space(i);
      mark(i, end);
      i = end;
    } else if (text[i] == '@' && boundary && i + 1 < text.size() && is_handle_char(text[i + 1])) {
      std::size_t end = i + 1;
      while (end < text.size() && is_handle_char(text[end])) ++end;
      mark(i, end);
      i = end - 1;
    } else if (text[i] == '.' && i + 1 < text.size() && text[i + 1] == '.') {
      std::size_t end = i;
      while (end < text.size() && text[end] == '.') ++end;
      mark(i, end, kEllipsis);
      i = end - 1;
    } else if (text.compare(i, 3, "\xE2\x80\xA6") == 0) {
      mark(i, i + 3, kEllipsis);
      i += 2;
    }
  }

  return removed;
}

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text), removed_(removal_mask(text)) {}

  std::vector<Token> run() {
    std::size_t i = 0;
    while (i < text_.size()) {
      if (removed_[i] != kKept) {
        flush_word(i);
        // A removed ellipsis still ends the sentence.
        if (removed_[i] == kEllipsis) sentence_start_ = true;
        ++i;
        continue;
      }
      CodePoint cp = decode(text_, i);
      switch (classify(cp.value)) {
        case CharClass::Word:
          if (!word_start_) word_start_ = i;
          break;
        case CharClass::Space:
        case CharClass::Other:
          flush_word(i);
          break;
        case CharClass::Sentence:
          flush_word(i);
          sentence_start_ = true;
          break;
        case CharClass::Delim:
          flush_word(i);
          if (i == retweet_colon_) break;
          emit_delim(i);
          if (text_[i] == '.') sentence_start_ = true;
          break;
        case CharClass::Apostrophe: {
          flush_word(i);
          std::size_t next = i + cp.length;
          // Possessive 's is dropped together with the apostrophe.
          if (next < text_.size() && (text_[next] == 's' || text_[next] == 'S') &&
              (next + 1 == text_.size() || classify(decode(text_, next + 1).value) != CharClass::Word)) {
            i = next + 1;
            continue;
          }
          break;
        }
        case CharClass::Hash:
          flush_word(i);
          i = read_hashtag(i);
          continue;
      }
      i += cp.length;
    }
    flush_word(text_.size());
    return std::move(tokens_);
  }

 private:
  void flush_word(std::size_t end) {
    if (!word_start_) return;
    std::size_t start = *word_start_;
    word_start_.reset();
    emit_word(start, end, std::nullopt);
  }

  void emit_word(std::size_t start, std::size_t end, const std::optional<std::string>& hashtag) {
    std::string_view surface = text_.substr(start, end - start);
    // Retweet markers before the first kept word are dropped, with a trailing ':'.
    if (surface == "RT" && !has_word_) {
      if (end < text_.size() && text_[end] == ':') retweet_colon_ = end;
      return;
    }
    has_word_ = true;
    Token token;
    token.surface = std::string(surface);
    token.span = {start, end};
    token.kind = TokenKind::Word;
    token.hashtag_origin = hashtag;
    token.sentence_initial = sentence_start_;
    sentence_start_ = false;
    std::vector<std::string> parts = split_camel_case(surface);
    bool initial = token.sentence_initial;
    tokens_.push_back(std::move(token));
    if (parts.size() < 2) return;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      Token part;
      part.surface = std::move(parts[k]);
      part.span = {start, end};
      part.kind = TokenKind::Word;
      part.hashtag_origin = hashtag;
      part.camel_split = true;
      part.sentence_initial = k == 0 && initial;
      tokens_.push_back(std::move(part));
    }
  }

  void emit_delim(std::size_t pos) {
    Token token;
    token.surface = std::string(1, text_[pos]);
    token.span = {pos, pos + 1};
    token.kind = TokenKind::Delim;
    tokens_.push_back(std::move(token));
  }

  // Reads "#body" starting at the '#'; returns the index after the body.
  std::size_t read_hashtag(std::size_t hash_pos) {
    std::size_t i = hash_pos + 1;
    while (i < text_.size() && removed_[i] == kKept) {
      CodePoint cp = decode(text_, i);
      if (classify(cp.value) != CharClass::Word && text_[i] != '_') break;
      i += cp.length;
    }
    std::string body(text_.substr(hash_pos + 1, i - hash_pos - 1));
    std::size_t piece_start = hash_pos + 1;
    for (std::size_t k = hash_pos + 1; k <= i; ++k) {
      if (k == i || text_[k] == '_') {
        if (k > piece_start) emit_word(piece_start, k, body);
        piece_start = k + 1;
      }
    }
    return i == hash_pos + 1 ? hash_pos + 1 : i;
  }

  std::string_view text_;
  std::vector<std::uint8_t> removed_;
  std::vector<Token> tokens_;
  std::optional<std::size_t> word_start_;
  bool sentence_start_ = true;
  bool has_word_ = false;
  std::size_t retweet_colon_ = std::string_view::npos;
};

}  // namespace

std::vector<Token> normalize_tweet(std::string_view raw_text) { return Tokenizer(raw_text).run(); }

std::vector<Token> tagging_view(std::span<const Token> tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    bool has_parts = t.is_word() && !t.camel_split && i + 1 < tokens.size() && tokens[i + 1].camel_split;
    if (!has_parts) out.push_back(t);
  }
  return out;
}

std::string normalized_text(std::span<const Token> tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!t.is_word() || t.camel_split) continue;
    if (!out.empty()) out.push_back(' ');
    out += t.surface;
  }
  return out;
}

}  // namespace tweetloc
