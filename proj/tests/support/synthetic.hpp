#pragma once

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "tweetloc/normalize.hpp"

namespace synthetic {

// GeoNames-layout rows with made-up names inside the India bounding box,
// ids from 20,000,000 upward so they never collide with real ones.
void write_geonames_rows(std::ostream& out, std::size_t rows, std::uint32_t seed);

// Copies `fixture` and appends synthetic rows up to `total_rows`.
void write_india_scale_gazetteer(const std::filesystem::path& fixture, const std::filesystem::path& out,
                                 std::size_t total_rows, std::uint32_t seed);

// Tweets built from templates over the given place names and a fixed
// vocabulary of emergency words, fillers and common-word places.
// Created-at days fall in [first_day, first_day + days).
std::vector<tweetloc::RawTweet> random_tweets(std::mt19937& rng, std::size_t count,
                                              const std::vector<std::string>& places, std::size_t days = 10,
                                              const std::string& id_prefix = "s");

}  // namespace synthetic
