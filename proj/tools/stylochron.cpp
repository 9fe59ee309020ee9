#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stylochron/report.hpp"
#include "stylochron/text.hpp"
#include "stylochron/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartialFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMissingArtifact = 3;

struct CliOptions {
  std::string config = "data/whitman.toml";
  std::string cache;
  std::string output = "out";
  unsigned jobs = 1;
  std::size_t top_k = 400;
  long long msttr_segment = 50;
  double rolling = 0.10;
  std::string unit = "line";
  std::string exclude;
  std::string pair_mode = "consecutive";
  bool no_timestamp = false;
};

stylochron::RunConfig to_run_config(const CliOptions& opt) {
  stylochron::RunConfig config;
  config.manifest_path = opt.config;
  config.output_dir = opt.output;
  if (const char* env = std::getenv("STYLOCHRON_CACHE"); env != nullptr && *env != '\0') {
    config.cache_dir = env;
  } else if (!opt.cache.empty()) {
    config.cache_dir = opt.cache;
  } else {
    config.cache_dir = config.manifest_path.parent_path() / "cache";
  }
  config.jobs = opt.jobs == 0 ? 1 : opt.jobs;
  config.top_k = opt.top_k;
  config.msttr_segment = opt.msttr_segment;
  config.rolling_fraction = opt.rolling;
  if (opt.unit == "line") {
    config.unit_mode = stylochron::UnitMode::Line;
  } else if (opt.unit == "sentence") {
    config.unit_mode = stylochron::UnitMode::Sentence;
  } else {
    throw stylochron::ManifestError("--unit must be 'line' or 'sentence'");
  }
  if (opt.pair_mode == "consecutive") {
    config.pair_mode = stylochron::PairMode::Consecutive;
  } else if (opt.pair_mode == "include-first-as-zero") {
    config.pair_mode = stylochron::PairMode::IncludeFirstAsZero;
  } else {
    throw stylochron::ManifestError(
        "--pair-mode must be 'consecutive' or 'include-first-as-zero'");
  }
  if (!opt.exclude.empty()) {
    for (const std::string& label : stylochron::split(opt.exclude, ',')) {
      std::string trimmed = stylochron::trim(label);
      if (!trimmed.empty()) config.excluded_editions.push_back(trimmed);
    }
  }
  if (!(config.rolling_fraction > 0.0) || config.rolling_fraction > 1.0) {
    throw stylochron::ManifestError("--rolling must lie in (0, 1]");
  }
  if (config.msttr_segment < 1) {
    throw stylochron::ManifestError("--msttr-segment must be >= 1");
  }
  return config;
}

int do_fetch(const stylochron::RunConfig& config) {
  stylochron::FetchOutcome outcome = stylochron::run_fetch(config);
  for (const std::string& label : outcome.fetched) {
    std::cout << "cached " << label << "\n";
  }
  for (const auto& [label, message] : outcome.failures) {
    std::cerr << "failed " << label << ": " << message << "\n";
  }
  if (!outcome.failures.empty()) {
    std::cerr << outcome.failures.size() << " of "
              << outcome.failures.size() + outcome.fetched.size()
              << " editions failed\n";
    return kExitPartialFailure;
  }
  return kExitOk;
}

int do_analyze(const stylochron::RunConfig& config) {
  stylochron::AnalysisReport report = stylochron::run_analyze(config);
  for (const auto& [name, path] : report.tables) {
    std::cout << name << " -> " << path.string() << "\n";
  }
  for (const std::string& warning : report.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  return kExitOk;
}

int do_report(const stylochron::RunConfig& config) {
  for (const auto& path : stylochron::run_report(config)) {
    std::cout << path.string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diachronic stylometry toolkit for multi-edition poetry corpora"};
  app.set_version_flag("--version", std::string("stylochron ") + stylochron::kVersion);
  app.require_subcommand(1);

  CliOptions opt;
  app.add_option("--config", opt.config, "Corpus manifest (TOML)");
  app.add_option("--cache", opt.cache, "Cache directory (STYLOCHRON_CACHE overrides)");
  app.add_option("--output", opt.output, "Output directory for tables and figures");
  app.add_option("--jobs", opt.jobs, "Parallel editions");
  app.add_option("--top-k", opt.top_k, "Feature count for the stylistic map");
  app.add_option("--msttr-segment", opt.msttr_segment, "MSTTR segment length");
  app.add_option("--rolling", opt.rolling, "Rolling-mean window fraction");
  app.add_option("--unit", opt.unit, "Sentiment unit: line or sentence");
  app.add_option("--exclude-editions", opt.exclude,
                 "Comma-separated labels excluded from the correlation");
  app.add_option("--pair-mode", opt.pair_mode,
                 "Correlation pairing: consecutive or include-first-as-zero");
  app.add_flag("--no-timestamp", opt.no_timestamp, "Omit timestamp comments in SVG");

  CLI::App* fetch = app.add_subcommand("fetch", "Download and cache the corpus");
  CLI::App* analyze = app.add_subcommand("analyze", "Run analyses, write tables");
  CLI::App* report = app.add_subcommand("report", "Render figures from tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    stylochron::RunConfig config = to_run_config(opt);
    config.no_timestamp = opt.no_timestamp;
    if (fetch->parsed()) return do_fetch(config);
    if (analyze->parsed()) return do_analyze(config);
    if (report->parsed()) return do_report(config);
    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const stylochron::MissingArtifactError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMissingArtifact;
  } catch (const stylochron::ManifestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const stylochron::LexiconError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const stylochron::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPartialFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPartialFailure;
  }
}
