#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "tweetloc/evalkit.hpp"
#include "tweetloc/pipeline.hpp"
#include "tweetloc/segment.hpp"

namespace fixture {

std::filesystem::path data_dir();
std::filesystem::path lexicon_dir();
std::filesystem::path gazetteer_path();
std::filesystem::path mumbai_parse_path();
std::filesystem::path gold_corpus_path();

// Bundled resources with the IN country filter, loaded once per process.
std::shared_ptr<const tweetloc::Resources> resources();

std::vector<tweetloc::GoldRecord> gold_corpus();

// {nepal:100, quake:50, ne:1, pal:1}
tweetloc::UnigramModel small_model();

// Fresh scratch directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& tag);

// Names of every fixture entry, primary names only.
std::vector<std::string> place_names();

}  // namespace fixture
