#pragma once

#include <string_view>

namespace tweetloc {

// Jaro similarity with match window floor(max(|a|,|b|)/2) - 1.
double jaro(std::string_view a, std::string_view b);

// Jaro-Winkler with prefix scale 0.1 over at most 4 leading characters.
// Symmetric, in [0, 1]; 1 iff a == b for non-empty strings; 0 when exactly
// one side is empty.
double jaro_winkler(std::string_view a, std::string_view b);

}  // namespace tweetloc
