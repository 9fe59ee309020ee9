#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/lexicon.hpp"
#include "stylochron/manifest.hpp"
#include "stylochron/text.hpp"
#include "stylochron/token.hpp"
#include "stylochron/toml.hpp"
#include "stylochron/units.hpp"

namespace stylochron {

struct SentimentConstants {
  double alpha = 15.0;            // compound normalization
  double caps_boost = 0.733;      // all-caps emphasis
  double excl_boost = 0.292;      // per exclamation mark, max 4
  double but_before = 0.5;        // hit weight before the first "but"
  double but_after = 1.5;         // hit weight after it
  double negation_factor = -0.74; // flip for a negator within 3 words
  double booster_damp_2 = 0.95;   // booster two words away
  double booster_damp_3 = 0.90;   // booster three words away
};

struct SentimentLexicon {
  std::unordered_map<std::string, double> valences;
  std::unordered_map<std::string, double> boosters;
  std::unordered_set<std::string> negations;
  SentimentConstants constants;
};

enum class PolarityLabel { Positive, Neutral, Negative };

struct PolarityScore {
  double value = 0.0;
  PolarityLabel label = PolarityLabel::Neutral;
};

struct PolaritySeries {
  std::string edition_label;
  std::vector<double> scores;
  std::vector<double> rolling;
};

inline PolarityLabel classify_polarity(double value) {
  if (value >= 0.05) return PolarityLabel::Positive;
  if (value <= -0.05) return PolarityLabel::Negative;
  return PolarityLabel::Neutral;
}

inline std::string_view polarity_name(PolarityLabel label) {
  switch (label) {
    case PolarityLabel::Positive: return "positive";
    case PolarityLabel::Neutral: return "neutral";
    case PolarityLabel::Negative: return "negative";
  }
  return "neutral";
}

namespace sentiment_detail {

inline double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

struct WordRef {
  std::size_t token_index;
  const Token* token;
};

}  // namespace sentiment_detail

// Lexicon-and-rule polarity of one verse unit. Rule set: all-caps emphasis in
// mixed-case context, booster words up to three words back with distance
// damping, single negation flip within three words, "but"-clause reweighting,
// exclamation amplification, then compound normalization s/sqrt(s^2+alpha).
inline PolarityScore score_unit(const SentimentUnit& unit,
                                const SentimentLexicon& lex) {
  const SentimentConstants& c = lex.constants;

  std::vector<sentiment_detail::WordRef> words;
  std::int64_t exclamations = 0;
  bool any_lower = false;
  bool any_caps = false;
  for (std::size_t i = 0; i < unit.tokens.size(); ++i) {
    const Token& t = unit.tokens[i];
    if (t.is_word()) {
      words.push_back({i, &t});
      if (is_all_caps(t.surface)) {
        any_caps = true;
      } else {
        any_lower = true;
      }
    } else if (t.surface == "!") {
      ++exclamations;
    }
  }
  const bool mixed_case = any_caps && any_lower;

  std::size_t first_but = words.size();
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (words[w].token->folded == "but") {
      first_but = w;
      break;
    }
  }

  double total = 0.0;
  bool any_hit = false;
  for (std::size_t w = 0; w < words.size(); ++w) {
    auto hit = lex.valences.find(words[w].token->folded);
    if (hit == lex.valences.end()) continue;
    any_hit = true;
    double v = hit->second;

    if (mixed_case && is_all_caps(words[w].token->surface)) {
      v += sentiment_detail::sign_of(v) * c.caps_boost;
    }

    bool negated = false;
    for (std::size_t d = 1; d <= 3 && d <= w; ++d) {
      const Token& prev = *words[w - d].token;
      auto booster = lex.boosters.find(prev.folded);
      if (booster != lex.boosters.end()) {
        double scalar = booster->second;
        if (d == 2) scalar *= c.booster_damp_2;
        if (d == 3) scalar *= c.booster_damp_3;
        // intensifiers push away from zero, dampeners pull toward it
        v += sentiment_detail::sign_of(v) * scalar;
      }
      if (!negated && lex.negations.count(prev.folded) != 0) negated = true;
    }
    if (negated) v *= c.negation_factor;

    if (first_but < words.size()) {
      if (w < first_but) {
        v *= c.but_before;
      } else if (w > first_but) {
        v *= c.but_after;
      }
    }
    total += v;
  }

  PolarityScore score;
  if (!any_hit) return score;

  if (total != 0.0) {
    double amp = c.excl_boost * static_cast<double>(std::min<std::int64_t>(4, exclamations));
    total += sentiment_detail::sign_of(total) * amp;
  }

  double compound = total / std::sqrt(total * total + c.alpha);
  compound = std::clamp(compound, -1.0, 1.0);
  score.value = compound;
  score.label = classify_polarity(compound);
  return score;
}

inline std::vector<double> score_units(const std::vector<SentimentUnit>& units,
                                       const SentimentLexicon& lex) {
  std::vector<double> scores;
  scores.reserve(units.size());
  for (const SentimentUnit& unit : units) scores.push_back(score_unit(unit, lex).value);
  return scores;
}

inline double edition_average(const std::vector<double>& scores) {
  if (scores.empty()) {
    throw InsufficientDataError("edition average needs at least one scored unit");
  }
  double sum = 0.0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(scores.size());
}

// Left-aligned rolling mean, window = max(1, round(fraction * length)),
// full windows only.
inline std::vector<double> rolling_mean(const std::vector<double>& scores,
                                        double fraction = 0.10) {
  if (scores.empty()) throw InsufficientDataError("rolling mean of an empty series");
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw DomainError("rolling fraction must lie in (0, 1]");
  }
  const std::int64_t n = static_cast<std::int64_t>(scores.size());
  const std::int64_t window = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::llround(fraction * static_cast<double>(n))));
  if (window > n) {
    throw InsufficientDataError("rolling window exceeds series length");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n - window + 1));
  double sum = 0.0;
  for (std::int64_t i = 0; i < window; ++i) sum += scores[static_cast<std::size_t>(i)];
  out.push_back(sum / static_cast<double>(window));
  for (std::int64_t i = window; i < n; ++i) {
    sum += scores[static_cast<std::size_t>(i)] -
           scores[static_cast<std::size_t>(i - window)];
    out.push_back(sum / static_cast<double>(window));
  }
  return out;
}

inline std::unordered_map<std::string, double> load_valences(
    const std::filesystem::path& path) {
  std::unordered_map<std::string, double> out;
  for (const auto& line : lexicon_detail::read_lines(path)) {
    auto fields = lexicon_detail::tsv_fields(line, 2, path);
    double v = std::stod(fields[1]);
    if (v < -4.0 || v > 4.0) {
      throw LexiconError(path.string() + ": valence out of [-4, 4] for '" +
                         fields[0] + "'");
    }
    out[fold(fields[0])] = v;
  }
  if (out.empty()) throw LexiconError(path.string() + ": sentiment lexicon is empty");
  return out;
}

inline std::unordered_map<std::string, double> load_boosters(
    const std::filesystem::path& path) {
  std::unordered_map<std::string, double> out;
  for (const auto& line : lexicon_detail::read_lines(path)) {
    auto fields = lexicon_detail::tsv_fields(line, 2, path);
    out[fold(fields[0])] = std::stod(fields[1]);
  }
  return out;
}

inline std::unordered_set<std::string> load_negations(
    const std::filesystem::path& path) {
  std::unordered_set<std::string> out;
  for (const auto& line : lexicon_detail::read_lines(path)) {
    out.insert(fold(trim(line)));
  }
  return out;
}

inline SentimentConstants load_sentiment_constants(
    const std::filesystem::path& path) {
  toml::Document doc = toml::parse(read_file(path));
  SentimentConstants c;
  auto real = [&](const char* key, double fallback) {
    const toml::Value* v = doc.find(doc.root, key);
    return v == nullptr ? fallback : v->as_real();
  };
  c.alpha = real("alpha", c.alpha);
  c.caps_boost = real("caps_boost", c.caps_boost);
  c.excl_boost = real("excl_boost", c.excl_boost);
  c.negation_factor = real("negation_factor", c.negation_factor);
  c.booster_damp_2 = real("booster_damp_2", c.booster_damp_2);
  c.booster_damp_3 = real("booster_damp_3", c.booster_damp_3);
  if (const toml::Value* v = doc.find(doc.root, "but_weights")) {
    if (v->kind != toml::Value::Kind::Array || v->array.size() != 2) {
      throw LexiconError(path.string() + ": but_weights must be a 2-element array");
    }
    c.but_before = v->array[0].as_real();
    c.but_after = v->array[1].as_real();
  }
  if (!(c.alpha > 0.0)) throw LexiconError(path.string() + ": alpha must be positive");
  return c;
}

inline SentimentLexicon load_sentiment(const std::filesystem::path& dir) {
  SentimentLexicon lex;
  lex.valences = load_valences(dir / "sentiment_lexicon.tsv");
  lex.boosters = load_boosters(dir / "boosters.tsv");
  lex.negations = load_negations(dir / "negations.tsv");
  lex.constants = load_sentiment_constants(dir / "constants.toml");
  return lex;
}

}  // namespace stylochron
