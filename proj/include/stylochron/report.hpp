#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <ctime>
#include <exception>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "stylochron/complexity.hpp"
#include "stylochron/corpus.hpp"
#include "stylochron/csv.hpp"
#include "stylochron/errors.hpp"
#include "stylochron/etymology.hpp"
#include "stylochron/fetch.hpp"
#include "stylochron/lexicon.hpp"
#include "stylochron/manifest.hpp"
#include "stylochron/metrics.hpp"
#include "stylochron/model.hpp"
#include "stylochron/pca.hpp"
#include "stylochron/sentiment.hpp"
#include "stylochron/stats.hpp"
#include "stylochron/svg.hpp"
#include "stylochron/tfidf.hpp"
#include "stylochron/units.hpp"
#include "stylochron/version.hpp"

namespace stylochron {

enum class Analysis {
  Stanzas,
  Frequencies,
  Etymology,
  Complexity,
  Vectors,
  Sentiment,
};

inline std::string_view analysis_name(Analysis a) {
  switch (a) {
    case Analysis::Stanzas: return "stanzas";
    case Analysis::Frequencies: return "frequencies";
    case Analysis::Etymology: return "etymology";
    case Analysis::Complexity: return "complexity";
    case Analysis::Vectors: return "vectors";
    case Analysis::Sentiment: return "sentiment";
  }
  return "";
}

enum class PairMode { Consecutive, IncludeFirstAsZero };

struct RunConfig {
  std::filesystem::path manifest_path;
  std::filesystem::path cache_dir;
  std::filesystem::path output_dir;
  std::set<Analysis> enabled = {Analysis::Stanzas,    Analysis::Frequencies,
                                Analysis::Etymology,  Analysis::Complexity,
                                Analysis::Vectors,    Analysis::Sentiment};
  std::size_t top_k = 400;
  std::int64_t msttr_segment = 50;
  double rolling_fraction = 0.10;
  UnitMode unit_mode = UnitMode::Line;
  std::vector<std::string> excluded_editions;
  PairMode pair_mode = PairMode::Consecutive;
  unsigned jobs = 1;
  bool no_timestamp = false;
};

struct AnalysisReport {
  std::map<std::string, std::filesystem::path> tables;  // analysis -> file
  std::vector<std::string> warnings;
  std::string config_hash;
};

namespace report_detail {

inline std::string canonical_config(const RunConfig& config) {
  std::string out;
  out += "manifest=" + config.manifest_path.lexically_normal().string() + "\n";
  out += "cache=" + config.cache_dir.lexically_normal().string() + "\n";
  out += "output=" + config.output_dir.lexically_normal().string() + "\n";
  out += "enabled=";
  bool first = true;
  for (Analysis a : config.enabled) {
    if (!first) out += ",";
    out += analysis_name(a);
    first = false;
  }
  out += "\n";
  out += "top_k=" + std::to_string(config.top_k) + "\n";
  out += "msttr_segment=" + std::to_string(config.msttr_segment) + "\n";
  out += "rolling_fraction=" + format_real(config.rolling_fraction) + "\n";
  out += "unit=" + std::string(config.unit_mode == UnitMode::Line ? "line" : "sentence") + "\n";
  out += "excluded=";
  for (std::size_t i = 0; i < config.excluded_editions.size(); ++i) {
    if (i > 0) out += ",";
    out += config.excluded_editions[i];
  }
  out += "\n";
  out += "pair_mode=";
  out += (config.pair_mode == PairMode::Consecutive ? "consecutive" : "include-first-as-zero");
  out += "\n";
  return out;
}

inline void write_output(const std::filesystem::path& path, std::string_view bytes) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  fetch_detail::write_file_atomic(path, bytes);
}

inline std::string timestamp_comment(const RunConfig& config) {
  if (config.no_timestamp) return std::string();
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return std::string(buf);
}

struct EditionAnalysis {
  std::string label;
  int ordinal = 0;
  std::optional<StanzaStats> stanzas;
  std::optional<FrequencyReport> frequencies;
  std::optional<EtymologyDistribution> etym;
  std::optional<ComplexityReport> complexity;
  std::vector<double> sentiment_scores;
  std::vector<double> rolling;
  std::vector<Token> tokens;
  std::vector<std::string> warnings;
};

struct LoadedData {
  CorpusManifest manifest;
  LexiconBundle lexicons;
  EtymologyLexicon etym;
  SentimentLexicon sentiment;
};

inline LoadedData load_data(const RunConfig& config, bool need_etym,
                            bool need_sentiment) {
  LoadedData data;
  data.manifest = load_manifest(config.manifest_path);
  data.lexicons = load_lexicons(data.manifest.data.lexicon_dir);
  if (need_etym) data.etym = load_etymology(data.manifest.data.etymology_file);
  if (need_sentiment) data.sentiment = load_sentiment(data.manifest.data.sentiment_dir);
  return data;
}

template <typename Fn>
inline void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= n) return;
          fn(i);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace report_detail

struct FetchOutcome {
  std::vector<std::string> fetched;                       // labels now cached
  std::vector<std::pair<std::string, std::string>> failures;  // label, message
};

// Fetch-and-cache every manifest source; failures are collected, not fatal,
// so one bad edition leaves the other six cached.
inline FetchOutcome run_fetch(const RunConfig& config) {
  CorpusManifest manifest = load_manifest(config.manifest_path);
  FetchOutcome outcome;
  std::vector<std::optional<std::string>> errors(manifest.entries.size());
  report_detail::parallel_for(
      manifest.entries.size(), config.jobs, [&](std::size_t i) {
        try {
          fetch_source(manifest.entries[i], config.cache_dir);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      });
  for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
    if (errors[i]) {
      outcome.failures.emplace_back(manifest.entries[i].label, *errors[i]);
    } else {
      outcome.fetched.push_back(manifest.entries[i].label);
    }
  }
  return outcome;
}

inline AnalysisReport run_analyze(const RunConfig& config) {
  namespace rd = report_detail;
  if (config.enabled.empty()) {
    throw ManifestError("no analyses enabled");
  }
  auto on = [&](Analysis a) { return config.enabled.count(a) != 0; };

  rd::LoadedData data = rd::load_data(config, on(Analysis::Etymology),
                                      on(Analysis::Sentiment));
  std::vector<Edition> editions =
      load_corpus(data.manifest, config.cache_dir, config.jobs);

  const bool need_tokens = on(Analysis::Frequencies) || on(Analysis::Etymology) ||
                           on(Analysis::Complexity) || on(Analysis::Vectors);

  std::vector<rd::EditionAnalysis> per(editions.size());
  rd::parallel_for(editions.size(), config.jobs, [&](std::size_t i) {
    const Edition& edition = editions[i];
    rd::EditionAnalysis& out = per[i];
    out.label = edition.label;
    out.ordinal = edition.ordinal;
    if (on(Analysis::Stanzas)) out.stanzas = stanza_stats(edition);
    if (need_tokens) out.tokens = edition_tokens(edition, data.lexicons);
    if (on(Analysis::Frequencies)) {
      FrequencyReport freq;
      freq.edition_label = edition.label;
      std::unordered_set<std::string> identity(
          data.manifest.metrics.identity_words.begin(),
          data.manifest.metrics.identity_words.end());
      std::unordered_set<std::string> group(
          data.manifest.metrics.identity_group.begin(),
          data.manifest.metrics.identity_group.end());
      freq.entries["identity_words"] = word_frequency(out.tokens, identity);
      freq.entries["identity_group"] = word_frequency(out.tokens, group);
      freq.entries["parentheses"] = parenthesis_frequency(out.tokens, &out.warnings);
      out.frequencies = std::move(freq);
    }
    if (on(Analysis::Etymology)) {
      out.etym = distribution(out.tokens, data.etym, edition.label);
    }
    if (on(Analysis::Complexity)) {
      out.complexity = compute_complexity(out.tokens, data.lexicons,
                                          config.msttr_segment);
    }
    if (on(Analysis::Sentiment)) {
      std::vector<SentimentUnit> units =
          segment_units(edition, data.lexicons, config.unit_mode);
      out.sentiment_scores = score_units(units, data.sentiment);
      out.rolling = rolling_mean(out.sentiment_scores, config.rolling_fraction);
    }
  });

  AnalysisReport report;
  report.config_hash = sha256_hex(rd::canonical_config(config));
  const std::filesystem::path& dir = config.output_dir;

  if (on(Analysis::Stanzas)) {
    CsvWriter csv;
    csv.row({"label", "stanzas", "mean_lines", "std_lines"});
    for (const auto& e : per) {
      csv.row({e.label, std::to_string(e.stanzas->count),
               format_real(e.stanzas->mean_lines), format_real(e.stanzas->std_lines)});
    }
    rd::write_output(dir / "stanzas.csv", csv.str());
    report.tables["stanzas"] = dir / "stanzas.csv";
  }

  if (on(Analysis::Frequencies)) {
    CsvWriter csv;
    csv.row({"label", "query", "numerator", "denominator", "scale", "value"});
    for (const auto& e : per) {
      for (const auto& [name, entry] : e.frequencies->entries) {
        std::string scale = entry.scale == Scale::Percent ? "percent"
                            : entry.scale == Scale::Permille ? "permille"
                                                             : "fraction";
        csv.row({e.label, name, std::to_string(entry.numerator),
                 std::to_string(entry.denominator), scale, format_real(entry.value)});
      }
    }
    rd::write_output(dir / "frequencies.csv", csv.str());
    report.tables["frequencies"] = dir / "frequencies.csv";
  }

  if (on(Analysis::Etymology)) {
    CsvWriter csv;
    csv.row({"label", "origin", "percent", "classified_tokens", "total_tokens"});
    for (const auto& e : per) {
      for (Origin origin : kAllOrigins) {
        csv.row({e.label, std::string(origin_name(origin)),
                 format_real(e.etym->percentages.at(origin)),
                 std::to_string(e.etym->classified_tokens),
                 std::to_string(e.etym->total_tokens)});
      }
    }
    rd::write_output(dir / "etymology.csv", csv.str());
    report.tables["etymology"] = dir / "etymology.csv";
  }

  if (on(Analysis::Complexity)) {
    CsvWriter csv;
    csv.row({"label", "ld", "ls", "ttr", "d_measure", "msttr", "n_tokens", "n_types"});
    for (const auto& e : per) {
      csv.row({e.label, format_real(e.complexity->ld), format_real(e.complexity->ls),
               format_real(e.complexity->ttr), format_real(e.complexity->d_measure),
               format_real(e.complexity->msttr), std::to_string(e.complexity->n_tokens),
               std::to_string(e.complexity->n_types)});
    }
    rd::write_output(dir / "complexity.csv", csv.str());
    report.tables["complexity"] = dir / "complexity.csv";
  }

  if (on(Analysis::Vectors)) {
    std::vector<std::vector<Token>> streams;
    streams.reserve(per.size());
    for (auto& e : per) streams.push_back(std::move(e.tokens));
    DocTermCounts counts = build_counts(streams, data.lexicons.stopwords);
    FeatureMatrix full = tfidf(counts);
    FeatureMatrix features = select_features(full, config.top_k, &report.warnings);
    Projection2D proj = pca_2d(features);
    std::vector<double> dists = consecutive_distances(proj);

    CsvWriter fcsv;
    std::vector<std::string> header{"term"};
    for (const auto& e : per) header.push_back(e.label);
    fcsv.row(header);
    for (std::size_t j = 0; j < features.terms.size(); ++j) {
      std::vector<std::string> row{features.terms[j]};
      for (std::size_t i = 0; i < features.rows.size(); ++i) {
        row.push_back(format_real(features.rows[i][j]));
      }
      fcsv.row(row);
    }
    rd::write_output(dir / "features.csv", fcsv.str());

    CsvWriter pcsv;
    pcsv.row({"label", "x", "y"});
    for (std::size_t i = 0; i < per.size(); ++i) {
      pcsv.row({per[i].label, format_real(proj.points[i][0]),
                format_real(proj.points[i][1])});
    }
    rd::write_output(dir / "pca.csv", pcsv.str());

    CsvWriter dcsv;
    dcsv.row({"from_label", "to_label", "distance"});
    for (std::size_t i = 0; i + 1 < per.size(); ++i) {
      dcsv.row({per[i].label, per[i + 1].label, format_real(dists[i])});
    }
    rd::write_output(dir / "distances.csv", dcsv.str());
    report.tables["vectors"] = dir / "pca.csv";

    // Stylistic change vs contemporary review counts, when counts are bundled.
    if (std::filesystem::exists(data.manifest.data.reviews_file)) {
      ReviewCounts reviews =
          parse_reviews_csv(read_file(data.manifest.data.reviews_file));
      std::vector<double> xs, ys;
      std::vector<std::string> used_labels, excluded;
      std::unordered_set<std::string> excluded_set(config.excluded_editions.begin(),
                                                   config.excluded_editions.end());
      for (const auto& e : per) {
        if (excluded_set.count(e.label) != 0) excluded.push_back(e.label);
      }
      for (std::size_t i = 0; i < per.size(); ++i) {
        double distance;
        if (i == 0) {
          if (config.pair_mode != PairMode::IncludeFirstAsZero) continue;
          distance = 0.0;
        } else {
          distance = dists[i - 1];
        }
        if (excluded_set.count(per[i].label) != 0) continue;
        const std::int64_t* count = reviews.find(per[i].label);
        if (count == nullptr) {
          report.warnings.push_back("no review count for edition '" + per[i].label +
                                    "'; skipped in correlation");
          continue;
        }
        xs.push_back(distance);
        ys.push_back(static_cast<double>(*count));
        used_labels.push_back(per[i].label);
      }
      if (xs.size() >= 3) {
        CorrelationResult corr = pearson(xs, ys);
        nlohmann::json j;
        j["r"] = corr.r;
        j["n"] = corr.n;
        j["p_one_tailed"] = corr.p_one_tailed;
        j["excluded_labels"] = excluded;
        rd::write_output(dir / "correlation.json", j.dump(2) + "\n");

        CsvWriter ccsv;
        ccsv.row({"label", "distance", "reviews"});
        for (std::size_t i = 0; i < xs.size(); ++i) {
          ccsv.row({used_labels[i], format_real(xs[i]), format_real(ys[i])});
        }
        rd::write_output(dir / "correlation_points.csv", ccsv.str());
      } else {
        report.warnings.push_back(
            "fewer than 3 correlation pairs after exclusions; correlation skipped");
      }
    }
  }

  if (on(Analysis::Sentiment)) {
    CsvWriter csv;
    csv.row({"label", "mean", "n_units"});
    for (const auto& e : per) {
      csv.row({e.label, format_real(edition_average(e.sentiment_scores)),
               std::to_string(e.sentiment_scores.size())});
    }
    rd::write_output(dir / "sentiment.csv", csv.str());
    for (const auto& e : per) {
      CsvWriter ncsv;
      ncsv.row({"index", "rolling_mean"});
      for (std::size_t i = 0; i < e.rolling.size(); ++i) {
        ncsv.row({std::to_string(i), format_real(e.rolling[i])});
      }
      rd::write_output(dir / ("narrative_" + e.label + ".csv"), ncsv.str());
    }
    report.tables["sentiment"] = dir / "sentiment.csv";
  }

  for (const auto& e : per) {
    for (const auto& w : e.warnings) {
      report.warnings.push_back("edition '" + e.label + "': " + w);
    }
  }

  // Provenance: tool version, config hash, checksums of every data file.
  nlohmann::json prov;
  prov["version"] = kVersion;
  prov["config_hash"] = report.config_hash;
  nlohmann::json lexsums;
  auto checksum_if_present = [&](const std::filesystem::path& p) {
    if (std::filesystem::exists(p)) lexsums[p.filename().string()] = sha256_hex(read_file(p));
  };
  for (const char* name :
       {"stopwords.tsv", "tags.tsv", "lemma_exceptions.tsv", "top2000.tsv"}) {
    checksum_if_present(data.manifest.data.lexicon_dir / name);
  }
  checksum_if_present(data.manifest.data.etymology_file);
  for (const char* name : {"sentiment_lexicon.tsv", "boosters.tsv", "negations.tsv",
                           "constants.toml"}) {
    checksum_if_present(data.manifest.data.sentiment_dir / name);
  }
  checksum_if_present(data.manifest.data.reviews_file);
  prov["lexicons"] = lexsums;
  nlohmann::json tables;
  for (const auto& [name, path] : report.tables) {
    tables[name] = path.filename().string();
  }
  prov["tables"] = tables;
  prov["editions"] = nlohmann::json::array();
  for (const auto& e : per) {
    prov["editions"].push_back({{"label", e.label}, {"ordinal", e.ordinal}});
  }
  prov["warnings"] = report.warnings;
  rd::write_output(dir / "report.json", prov.dump(2) + "\n");
  return report;
}

namespace report_detail {

// Minimal reader for our own RFC-4180 output (no embedded newlines).
inline std::vector<std::vector<std::string>> read_csv(
    const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw MissingArtifactError("missing table: " + path.string());
  }
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (in_quotes) {
        if (c == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            cur.push_back('"');
            ++i;
          } else {
            in_quotes = false;
          }
        } else {
          cur.push_back(c);
        }
      } else if (c == '"') {
        in_quotes = true;
      } else if (c == ',') {
        fields.push_back(std::move(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    fields.push_back(std::move(cur));
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) throw MissingArtifactError("empty table: " + path.string());
  return rows;
}

}  // namespace report_detail

// Renders SVG figures from the tables analyze wrote.
inline std::vector<std::filesystem::path> run_report(const RunConfig& config) {
  namespace rd = report_detail;
  const std::filesystem::path& dir = config.output_dir;
  std::vector<std::filesystem::path> written;
  const std::string stamp = rd::timestamp_comment(config);

  auto pca_rows = rd::read_csv(dir / "pca.csv");
  std::vector<LabeledPoint> pca_points;
  for (std::size_t i = 1; i < pca_rows.size(); ++i) {
    if (pca_rows[i].size() != 3) {
      throw MissingArtifactError("malformed row in pca.csv");
    }
    pca_points.push_back(
        {pca_rows[i][0], std::stod(pca_rows[i][1]), std::stod(pca_rows[i][2])});
  }
  if (pca_points.empty()) throw MissingArtifactError("pca.csv has no data rows");
  rd::write_output(dir / "pca.svg",
                   svg_scatter(pca_points, "Stylistic map of editions",
                               "first principal component",
                               "second principal component", stamp));
  written.push_back(dir / "pca.svg");

  if (std::filesystem::exists(dir / "correlation_points.csv")) {
    auto rows = rd::read_csv(dir / "correlation_points.csv");
    std::vector<LabeledPoint> points;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].size() != 3) {
        throw MissingArtifactError("malformed row in correlation_points.csv");
      }
      points.push_back({rows[i][0], std::stod(rows[i][1]), std::stod(rows[i][2])});
    }
    if (points.size() >= 2) {
      rd::write_output(dir / "correlation.svg",
                       svg_scatter_with_fit(points, "Stylistic change vs reviews",
                                            "distance from previous edition",
                                            "review count", stamp));
      written.push_back(dir / "correlation.svg");
    }
  }

  auto sentiment_rows = rd::read_csv(dir / "sentiment.csv");
  for (std::size_t i = 1; i < sentiment_rows.size(); ++i) {
    const std::string& label = sentiment_rows[i][0];
    const std::size_t n_units = static_cast<std::size_t>(
        std::stoll(sentiment_rows[i][2]));
    auto rows = rd::read_csv(dir / ("narrative_" + label + ".csv"));
    std::vector<double> values;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r].size() != 2) {
        throw MissingArtifactError("malformed row in narrative_" + label + ".csv");
      }
      values.push_back(std::stod(rows[r][1]));
    }
    if (values.empty()) {
      throw MissingArtifactError("narrative_" + label + ".csv has no data rows");
    }
    rd::write_output(dir / ("narrative_" + label + ".svg"),
                     svg_polyline(values, n_units, "Narrative sentiment, " + label,
                                  "narrative time", "rolling mean polarity", stamp));
    written.push_back(dir / ("narrative_" + label + ".svg"));
  }
  return written;
}

}  // namespace stylochron
