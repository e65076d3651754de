#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace tweetloc {

// Text is UTF-8. Case rules are ASCII-only; non-ASCII bytes count as letters.

inline bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
inline bool is_non_ascii(char c) { return static_cast<unsigned char>(c) >= 0x80; }
inline bool is_utf8_continuation(char c) { return (static_cast<unsigned char>(c) & 0xC0) == 0x80; }

std::string to_lower_ascii(std::string_view s);

// True if every byte is an ASCII lowercase letter or non-ASCII.
bool is_lowercase_word(std::string_view s);

// Number of code points.
std::size_t utf8_length(std::string_view s);

// Lowercase, trim, collapse internal whitespace runs to one space.
std::string normalize_name(std::string_view s);

std::vector<std::string_view> split_whitespace(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

using WordSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;

// One entry per line, '#' starts a comment line, blank lines ignored.
// Entries are lowercased and internal whitespace collapsed.
WordSet read_word_list(std::istream& in);
WordSet read_word_list(const std::filesystem::path& path);

}  // namespace tweetloc
