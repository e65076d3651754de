#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "tweetloc/error.hpp"
#include "tweetloc/evalkit.hpp"
#include "tweetloc/pipeline.hpp"
#include "tweetloc/records.hpp"
#include "tweetloc/service.hpp"

using namespace tweetloc;

namespace {

const std::string kDataDir = TWEETLOC_DEFAULT_DATA_DIR;

struct CommonOptions {
  std::string gazetteer = kDataDir + "/fixtures/geonames_in_slice.tsv";
  std::string model = kDataDir + "/unigrams.tsv";
  std::string lexicons = kDataDir + "/lexicons";
  std::string parses;
  std::string country = "IN";
  double jw = 0.90;
  int d_max = 3;
  std::string guard = "on";
  std::string dep_source = "supplied";
  std::vector<std::string> sources;
  std::string mode = "GEOLOC";
};

void add_resource_options(CLI::App* app, CommonOptions& o) {
  app->add_option("--gazetteer", o.gazetteer, "GeoNames dump or index snapshot")
      ->envname("TWEETLOC_GAZETTEER")
      ->capture_default_str();
  app->add_option("--model", o.model, "Unigram counts (word<TAB>count)")->envname("TWEETLOC_MODEL")->capture_default_str();
  app->add_option("--lexicons", o.lexicons, "Lexicon directory")->envname("TWEETLOC_LEXICON_DIR")->capture_default_str();
  app->add_option("--parses", o.parses, "CoNLL-U parses keyed by sent_id = tweet id")->envname("TWEETLOC_PARSES");
  app->add_option("--country", o.country, "Country filter for GeoNames rows, empty for none")->capture_default_str();
}

void add_pipeline_options(CLI::App* app, CommonOptions& o, bool with_mode) {
  add_resource_options(app, o);
  app->add_option("--jw", o.jw, "Jaro-Winkler threshold for fuzzy suffixes")->capture_default_str();
  app->add_option("--dmax", o.d_max, "Maximum dependency distance to an emergency word")->capture_default_str();
  app->add_option("--guard", o.guard, "Common-word ambiguity guard")->check(CLI::IsMember({"on", "off"}))->capture_default_str();
  app->add_option("--dep-source", o.dep_source, "Dependency graphs: supplied parses or token window")
      ->check(CLI::IsMember({"supplied", "window"}))
      ->capture_default_str();
  app->add_option("--sources", o.sources, "Candidate sources to enable (default all)")->delimiter(',');
  if (with_mode)
    app->add_option("--mode", o.mode, "GEOLOC, UNILOC or BILOC")
        ->check(CLI::IsMember({"GEOLOC", "UNILOC", "BILOC"}, CLI::ignore_case))
        ->capture_default_str();
}

std::shared_ptr<const Resources> load_resources(const CommonOptions& o) {
  ResourcePaths paths;
  paths.gazetteer = o.gazetteer;
  paths.model = o.model;
  paths.lexicon_dir = o.lexicons;
  if (!o.parses.empty()) paths.parses = o.parses;
  if (!o.country.empty()) paths.filter.country = o.country;
  const auto start = std::chrono::steady_clock::now();
  auto res = std::make_shared<const Resources>(Resources::load(paths));
  spdlog::info("loaded {} gazetteer entries in {:.2f} s", res->gazetteer.entry_count(),
               std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return res;
}

PipelineConfig make_config(const CommonOptions& o, const std::string& mode) {
  PipelineConfig cfg;
  cfg.jw_threshold = o.jw;
  cfg.d_max = o.d_max;
  cfg.guard_enabled = o.guard == "on";
  cfg.dependency_source = o.dep_source == "window" ? GraphSource::TokenWindowFallback : GraphSource::Supplied;
  if (!o.sources.empty()) {
    cfg.enabled_sources = {};
    for (const auto& name : o.sources) {
      auto s = parse_candidate_source(name);
      if (!s) throw ConfigError("unknown candidate source '" + name + "'");
      cfg.enabled_sources.insert(*s);
    }
  }
  auto m = parse_mode(mode);
  if (!m) throw ConfigError("unknown mode '" + mode + "'");
  cfg.mode = *m;
  cfg.validate();
  return cfg;
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_extract(const CommonOptions& o, const std::string& input, const std::string& output) {
  auto pipeline = Pipeline(load_resources(o), make_config(o, o.mode));
  ParsedBatch batch = parse_tweet_batch(read_all(input));
  for (const auto& e : batch.errors) spdlog::warn("skipping record: {}", e);

  std::ofstream file;
  if (output != "-") {
    file.open(output);
    if (!file) throw ConfigError("cannot write " + output);
  }
  std::ostream& out = output == "-" ? std::cout : file;
  for (const auto& rec : batch.records) out << extraction_to_json(pipeline.extract(rec.tweet, rec.annotations)) << '\n';
  return batch.errors.empty() ? 0 : 2;
}

int run_eval(const CommonOptions& o, const std::string& corpus_path, const std::vector<std::string>& modes,
             const std::string& match_rule, const std::string& report_path, int repeats) {
  auto resources = load_resources(o);
  std::ifstream in(corpus_path);
  if (!in) throw ConfigError("cannot open corpus " + corpus_path);
  auto corpus = read_gold_corpus(in);
  std::vector<RawTweet> tweets;
  for (const auto& g : corpus) tweets.push_back(g.tweet);

  MatchRule rule;
  rule.use_entry_names = match_rule == "entry";
  rule.index = &resources->gazetteer;

  std::printf("%-8s %10s %10s %10s %12s\n", "Method", "Precision", "Recall", "F-score", "Timing (s)");
  std::string reports = "[";
  for (std::size_t i = 0; i < modes.size(); ++i) {
    Pipeline pipeline(resources, make_config(o, modes[i]));
    Extractor extractor = [&](const RawTweet& t) { return pipeline.extract(t); };
    EvalReport report = evaluate(corpus, extractor, rule);
    TimingResult timing = time_extractor(tweets, extractor, repeats);
    report.total_elapsed = timing.total;
    std::string name(to_string(pipeline.config().mode));
    std::printf("%-8s %10.4f %10.4f %10.4f %12.4f\n", name.c_str(), report.precision, report.recall, report.f_score,
                std::chrono::duration<double>(timing.total).count());
    if (i) reports += ",";
    reports += report_json(name, report);
  }
  reports += "]";
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw ConfigError("cannot write " + report_path);
    out << reports << '\n';
  }
  return 0;
}

HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int run_serve(const CommonOptions& o, const std::string& store_path, const std::string& host, int port) {
  auto pipeline = std::make_shared<const Pipeline>(load_resources(o), make_config(o, "GEOLOC"));
  TweetStore store(pipeline, StoreOptions{store_path, 0.0});
  spdlog::info("store holds {} records at generation {}", store.snapshot()->record_count(),
               store.snapshot()->generation());
  Api api(store);
  HttpServer server(api);
  int bound = server.bind(host, port);
  if (bound < 0) {
    spdlog::error("cannot bind {}:{}", host, port);
    return 1;
  }
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  spdlog::info("listening on http://{}:{}", host, bound);
  server.listen_after_bind();
  g_server = nullptr;
  return 0;
}

int run_ingest(const CommonOptions& o, const std::string& store_path, const std::string& input) {
  auto pipeline = std::make_shared<const Pipeline>(load_resources(o), make_config(o, "GEOLOC"));
  TweetStore store(pipeline, StoreOptions{store_path, 0.0});
  IngestReport r = store.ingest_body(read_all(input));
  std::printf("accepted %zu, duplicates %zu, errors %zu, generation %llu\n", r.accepted, r.duplicates, r.errors,
              static_cast<unsigned long long>(store.snapshot()->generation()));
  return r.errors == 0 ? 0 : 2;
}

int run_index(const CommonOptions& o, const std::string& output) {
  std::ifstream in(o.gazetteer);
  if (!in) throw ConfigError("cannot open " + o.gazetteer);
  GeonamesFilter filter;
  if (!o.country.empty()) filter.country = o.country;
  GazetteerIndex index = load_geonames(in, filter);
  std::ofstream out(output, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + output);
  save_snapshot(index, out);
  std::printf("%zu entries, %zu skipped rows, longest name %zu words\n", index.entry_count(), index.skipped_rows(),
              index.max_ngram());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_mt("tweetloc"));

  CLI::App app{"Toponym extraction for short noisy microblog posts"};
  app.require_subcommand(1);
  std::string log_level = "info";
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off")->capture_default_str();

  CommonOptions opts;
  std::string input = "-", output = "-", corpus = kDataDir + "/fixtures/gold_corpus.jsonl", report_path,
              match_rule = "entry", store_path, host = "127.0.0.1";
  std::vector<std::string> modes{"GEOLOC"};
  int repeats = 1, port = 8080;

  auto* extract = app.add_subcommand("extract", "Extract locations from tweet records (JSON lines or array)");
  add_pipeline_options(extract, opts, true);
  extract->add_option("input,-i,--input", input, "Tweet records, '-' for stdin")->capture_default_str();
  extract->add_option("-o,--output", output, "Result lines, '-' for stdout")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Score extractors against a gold corpus");
  add_pipeline_options(eval, opts, false);
  eval->add_option("corpus,--corpus", corpus, "Gold corpus (JSON lines with a gold array)")->capture_default_str();
  eval->add_option("--mode", modes, "Modes to evaluate")
      ->check(CLI::IsMember({"GEOLOC", "UNILOC", "BILOC"}, CLI::ignore_case))
      ->delimiter(',')
      ->capture_default_str();
  eval->add_option("--match-rule", match_rule, "entry: accept entry names and alternates; strict: phrase only")
      ->check(CLI::IsMember({"entry", "strict"}))
      ->capture_default_str();
  eval->add_option("--report", report_path, "Write the JSON report here");
  eval->add_option("--repeats", repeats, "Timing passes, best is reported")->check(CLI::PositiveNumber)->capture_default_str();

  auto* serve = app.add_subcommand("serve", "Serve the query API over a tweet store");
  add_pipeline_options(serve, opts, false);
  serve->add_option("--store", store_path, "Append-only store log")->envname("TWEETLOC_STORE")->required();
  serve->add_option("--host", host)->capture_default_str();
  serve->add_option("--port", port, "0 picks a free port")->capture_default_str();

  auto* ingest = app.add_subcommand("ingest", "Append tweet records to a store");
  add_pipeline_options(ingest, opts, false);
  ingest->add_option("--store", store_path, "Append-only store log")->envname("TWEETLOC_STORE")->required();
  ingest->add_option("input,-i,--input", input, "Tweet records, '-' for stdin")->capture_default_str();

  auto* index = app.add_subcommand("index", "Build a gazetteer snapshot from a GeoNames dump");
  add_resource_options(index, opts);
  index->add_option("-o,--output", output, "Snapshot path")->required();

  CLI11_PARSE(app, argc, argv);
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    if (*extract) return run_extract(opts, input, output);
    if (*eval) return run_eval(opts, corpus, modes, match_rule, report_path, repeats);
    if (*serve) return run_serve(opts, store_path, host, port);
    if (*ingest) return run_ingest(opts, store_path, input);
    if (*index) return run_index(opts, output);
  } catch (const ConfigError& e) {
    spdlog::error("configuration: {}", e.what());
    return 3;
  } catch (const LoadError& e) {
    spdlog::error("input: {}", e.what());
    return 4;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
