#include "fixture.hpp"

#include <fstream>
#include <mutex>
#include <random>

namespace fixture {

std::filesystem::path data_dir() { return TWEETLOC_TEST_DATA_DIR; }
std::filesystem::path lexicon_dir() { return data_dir() / "lexicons"; }
std::filesystem::path gazetteer_path() { return data_dir() / "fixtures" / "geonames_in_slice.tsv"; }
std::filesystem::path mumbai_parse_path() { return data_dir() / "fixtures" / "mumbai_parse.conllu"; }
std::filesystem::path gold_corpus_path() { return data_dir() / "fixtures" / "gold_corpus.jsonl"; }

std::shared_ptr<const tweetloc::Resources> resources() {
  static std::once_flag once;
  static std::shared_ptr<const tweetloc::Resources> res;
  std::call_once(once, [] {
    tweetloc::ResourcePaths paths;
    paths.gazetteer = gazetteer_path();
    paths.model = data_dir() / "unigrams.tsv";
    paths.lexicon_dir = lexicon_dir();
    paths.parses = mumbai_parse_path();
    paths.filter.country = "IN";
    res = std::make_shared<const tweetloc::Resources>(tweetloc::Resources::load(paths));
  });
  return res;
}

std::vector<tweetloc::GoldRecord> gold_corpus() {
  std::ifstream in(gold_corpus_path());
  return tweetloc::read_gold_corpus(in);
}

tweetloc::UnigramModel small_model() { return tweetloc::UnigramModel({{"nepal", 100}, {"quake", 50}, {"ne", 1}, {"pal", 1}}); }

std::filesystem::path scratch_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() / ("tweetloc-" + tag + "-" + std::to_string(rng()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::vector<std::string> place_names() {
  std::vector<std::string> out;
  for (const auto& e : resources()->gazetteer.entries()) out.push_back(e.name);
  return out;
}

}  // namespace fixture
