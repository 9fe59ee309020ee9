#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/toml.hpp"

namespace stylochron {

struct ManifestEntry {
  std::string label;
  int ordinal = 0;
  std::string source;                 // URL (http/https) or local path
  std::optional<std::string> sha256;  // lowercase hex digest
};

struct MetricsConfig {
  std::vector<std::string> identity_words{"i"};
  std::vector<std::string> identity_group{"me", "my", "mine", "myself", "self"};
};

// Where the bundled data files live, resolved against the manifest's
// directory. Overridable through an optional [data] table.
struct DataPaths {
  std::filesystem::path lexicon_dir = "lexicons";
  std::filesystem::path sentiment_dir = "sentiment";
  std::filesystem::path etymology_file = "lexicons/etymology.tsv";
  std::filesystem::path reviews_file = "reviews.csv";

  void resolve_against(const std::filesystem::path& base) {
    auto fix = [&](std::filesystem::path& p) {
      if (p.is_relative()) p = base / p;
    };
    fix(lexicon_dir);
    fix(sentiment_dir);
    fix(etymology_file);
    fix(reviews_file);
  }
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;
  MetricsConfig metrics;
  DataPaths data;

  void validate() const {
    if (entries.empty()) throw ManifestError("manifest has no [[edition]] entries");
    std::set<std::string> labels;
    int prev_ordinal = -1;
    bool first = true;
    for (const auto& e : entries) {
      if (e.label.empty()) throw ManifestError("edition label must be nonempty");
      if (!labels.insert(e.label).second)
        throw ManifestError("duplicate edition label '" + e.label + "'");
      if (!first && e.ordinal <= prev_ordinal)
        throw ManifestError("edition ordinals must be strictly increasing (label '" +
                            e.label + "')");
      if (e.ordinal < 0)
        throw ManifestError("edition ordinal must be >= 0 (label '" + e.label + "')");
      prev_ordinal = e.ordinal;
      first = false;
      if (e.source.empty())
        throw ManifestError("edition source must be nonempty (label '" + e.label + "')");
    }
  }
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FetchError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CorpusManifest parse_manifest(std::string_view text) {
  toml::Document doc = toml::parse(text);
  CorpusManifest manifest;

  auto it = doc.table_arrays.find("edition");
  if (it != doc.table_arrays.end()) {
    for (const auto& table : it->second) {
      ManifestEntry entry;
      if (const auto* v = doc.find(table, "label")) entry.label = v->str;
      if (const auto* v = doc.find(table, "ordinal"))
        entry.ordinal = static_cast<int>(v->integer);
      if (const auto* v = doc.find(table, "source")) entry.source = v->str;
      if (const auto* v = doc.find(table, "sha256")) entry.sha256 = v->str;
      manifest.entries.push_back(std::move(entry));
    }
  }

  auto mt = doc.tables.find("metrics");
  if (mt != doc.tables.end()) {
    auto read_list = [&](const char* key, std::vector<std::string>& out) {
      if (const auto* v = doc.find(mt->second, key)) {
        out.clear();
        for (const auto& item : v->array) out.push_back(item.str);
      }
    };
    read_list("identity_words", manifest.metrics.identity_words);
    read_list("identity_group", manifest.metrics.identity_group);
  }

  auto dt = doc.tables.find("data");
  if (dt != doc.tables.end()) {
    auto read_path = [&](const char* key, std::filesystem::path& out) {
      if (const auto* v = doc.find(dt->second, key)) out = v->str;
    };
    read_path("lexicon_dir", manifest.data.lexicon_dir);
    read_path("sentiment_dir", manifest.data.sentiment_dir);
    read_path("etymology_file", manifest.data.etymology_file);
    read_path("reviews_file", manifest.data.reviews_file);
  }

  manifest.validate();
  return manifest;
}

inline CorpusManifest load_manifest(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path))
    throw ManifestError("manifest not found: " + path.string());
  try {
    CorpusManifest manifest = parse_manifest(read_file(path));
    manifest.data.resolve_against(path.parent_path());
    for (ManifestEntry& e : manifest.entries) {
      bool is_url = e.source.rfind("http://", 0) == 0 ||
                    e.source.rfind("https://", 0) == 0;
      std::filesystem::path p(e.source);
      if (!is_url && p.is_relative()) e.source = (path.parent_path() / p).string();
    }
    return manifest;
  } catch (const ParseError& e) {
    throw ManifestError("manifest " + path.string() + ": " + e.what());
  }
}

}  // namespace stylochron
