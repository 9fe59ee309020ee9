#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/lexicon.hpp"
#include "stylochron/token.hpp"

namespace stylochron {

enum class Origin {
  OldEnglish,
  OldFrench,
  Latin,
  French,
  AngloNorman,
  Other,
};

inline constexpr std::array<Origin, 6> kAllOrigins = {
    Origin::OldEnglish, Origin::OldFrench, Origin::Latin,
    Origin::French,     Origin::AngloNorman, Origin::Other,
};

inline std::string_view origin_name(Origin origin) {
  switch (origin) {
    case Origin::OldEnglish: return "OldEnglish";
    case Origin::OldFrench: return "OldFrench";
    case Origin::Latin: return "Latin";
    case Origin::French: return "French";
    case Origin::AngloNorman: return "AngloNorman";
    case Origin::Other: return "Other";
  }
  return "Other";
}

using EtymologyLexicon = std::unordered_map<std::string, Origin>;

struct EtymologyDistribution {
  std::string edition_label;
  std::map<Origin, double> percentages;
  std::int64_t classified_tokens = 0;
  std::int64_t total_tokens = 0;
};

namespace etym_detail {

inline std::optional<Origin> code_origin(std::string_view code) {
  if (code == "ang") return Origin::OldEnglish;
  if (code == "fro") return Origin::OldFrench;
  if (code == "la") return Origin::Latin;
  if (code == "fr") return Origin::French;
  if (code == "xno") return Origin::AngloNorman;
  return std::nullopt;
}

// Ancestry chains list language codes newest-first, ultimate origin last.
// The oldest code matching a named tag wins; chains without one are Other.
inline Origin resolve_chain(const std::vector<std::string>& codes) {
  for (auto it = codes.rbegin(); it != codes.rend(); ++it) {
    if (auto origin = code_origin(trim(*it))) return *origin;
  }
  return Origin::Other;
}

}  // namespace etym_detail

inline EtymologyLexicon load_etymology(const std::filesystem::path& path) {
  EtymologyLexicon out;
  for (const auto& line : lexicon_detail::read_lines(path)) {
    auto fields = lexicon_detail::tsv_fields(line, 2, path);
    std::vector<std::string> codes = split(fields[1], ',');
    if (codes.empty() || fields[1].empty()) {
      throw LexiconError(path.string() + ": empty origin chain for '" + fields[0] + "'");
    }
    out[fold(fields[0])] = etym_detail::resolve_chain(codes);
  }
  if (out.empty()) throw LexiconError(path.string() + ": etymology table is empty");
  return out;
}

inline std::optional<Origin> classify(const std::string& lemma,
                                      const EtymologyLexicon& lexicon) {
  auto it = lexicon.find(lemma);
  if (it == lexicon.end()) return std::nullopt;
  return it->second;
}

// Token-weighted origin shares over classifiable words only; unknown lemmas
// stay out of the denominator but count toward coverage reporting.
inline EtymologyDistribution distribution(const std::vector<Token>& tokens,
                                          const EtymologyLexicon& lexicon,
                                          const std::string& edition_label) {
  EtymologyDistribution dist;
  dist.edition_label = edition_label;
  std::map<Origin, std::int64_t> counts;
  for (Origin origin : kAllOrigins) counts[origin] = 0;
  for (const Token& t : tokens) {
    if (!t.is_word()) continue;
    ++dist.total_tokens;
    if (auto origin = classify(t.lemma, lexicon)) {
      ++counts[*origin];
      ++dist.classified_tokens;
    }
  }
  if (dist.classified_tokens == 0) {
    throw NoCoverageError("edition '" + edition_label +
                          "': no tokens covered by the etymology table");
  }
  for (Origin origin : kAllOrigins) {
    dist.percentages[origin] = 100.0 * static_cast<double>(counts[origin]) /
                               static_cast<double>(dist.classified_tokens);
  }
  return dist;
}

}  // namespace stylochron
