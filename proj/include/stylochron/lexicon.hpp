#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/text.hpp"
#include "stylochron/token.hpp"

namespace stylochron {

struct LexiconBundle {
  std::unordered_set<std::string> stopwords;
  std::unordered_map<std::string, Pos> tag_lexicon;
  // key: folded word + '\t' + pos name
  std::unordered_map<std::string, std::string> lemma_exceptions;
  std::unordered_set<std::string> top2000;

  static std::string exception_key(std::string_view word, Pos pos) {
    std::string key(word);
    key.push_back('\t');
    key.append(pos_name(pos));
    return key;
  }

  const std::string* lemma_exception(std::string_view word, Pos pos) const {
    auto it = lemma_exceptions.find(exception_key(word, pos));
    return it == lemma_exceptions.end() ? nullptr : &it->second;
  }

  bool known_word(const std::string& folded) const {
    return tag_lexicon.find(folded) != tag_lexicon.end();
  }

  bool is_stopword(const std::string& folded) const {
    return stopwords.find(folded) != stopwords.end();
  }
};

namespace lexicon_detail {

inline std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError("cannot open lexicon file " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

inline std::vector<std::string> tsv_fields(const std::string& line,
                                           std::size_t expected,
                                           const std::filesystem::path& path) {
  std::vector<std::string> fields = split(line, '\t');
  if (fields.size() != expected) {
    throw LexiconError(path.string() + ": expected " + std::to_string(expected) +
                       " tab-separated fields, got " +
                       std::to_string(fields.size()) + " in row '" + line + "'");
  }
  return fields;
}

}  // namespace lexicon_detail

inline std::unordered_set<std::string> load_stopwords(
    const std::filesystem::path& path) {
  std::unordered_set<std::string> out;
  for (const auto& line : lexicon_detail::read_lines(path)) {
    out.insert(fold(trim(line)));
  }
  if (out.empty()) throw LexiconError(path.string() + ": stopword list is empty");
  return out;
}

inline std::unordered_map<std::string, Pos> load_tags(
    const std::filesystem::path& path) {
  std::unordered_map<std::string, Pos> out;
  for (const auto& line : lexicon_detail::read_lines(path)) {
    auto fields = lexicon_detail::tsv_fields(line, 2, path);
    auto pos = pos_from_name(fields[1]);
    if (!pos) {
      throw LexiconError(path.string() + ": unknown tag '" + fields[1] +
                         "' for word '" + fields[0] + "'");
    }
    out[fold(fields[0])] = *pos;
  }
  if (out.empty()) throw LexiconError(path.string() + ": tag lexicon is empty");
  return out;
}

inline std::unordered_map<std::string, std::string> load_lemma_exceptions(
    const std::filesystem::path& path) {
  std::unordered_map<std::string, std::string> out;
  for (const auto& line : lexicon_detail::read_lines(path)) {
    auto fields = lexicon_detail::tsv_fields(line, 3, path);
    auto pos = pos_from_name(fields[1]);
    if (!pos) {
      throw LexiconError(path.string() + ": unknown tag '" + fields[1] +
                         "' for word '" + fields[0] + "'");
    }
    out[LexiconBundle::exception_key(fold(fields[0]), *pos)] = fold(fields[2]);
  }
  return out;
}

inline std::unordered_set<std::string> load_top2000(
    const std::filesystem::path& path) {
  std::unordered_set<std::string> out;
  for (const auto& line : lexicon_detail::read_lines(path)) {
    auto fields = lexicon_detail::tsv_fields(line, 2, path);
    out.insert(fold(fields[1]));
  }
  if (out.size() != 2000) {
    throw LexiconError(path.string() + ": reference list must hold exactly 2000 distinct words, got " +
                       std::to_string(out.size()));
  }
  return out;
}

inline LexiconBundle load_lexicons(const std::filesystem::path& dir) {
  LexiconBundle bundle;
  bundle.stopwords = load_stopwords(dir / "stopwords.tsv");
  bundle.tag_lexicon = load_tags(dir / "tags.tsv");
  bundle.lemma_exceptions = load_lemma_exceptions(dir / "lemma_exceptions.tsv");
  bundle.top2000 = load_top2000(dir / "top2000.tsv");
  return bundle;
}

}  // namespace stylochron
