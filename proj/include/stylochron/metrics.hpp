#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/model.hpp"
#include "stylochron/token.hpp"

namespace stylochron {

struct StanzaStats {
  std::int64_t count = 0;
  double mean_lines = 0.0;
  double std_lines = 0.0;
};

enum class Scale { Percent, Permille, Fraction };

inline double scale_factor(Scale s) {
  switch (s) {
    case Scale::Percent: return 100.0;
    case Scale::Permille: return 1000.0;
    case Scale::Fraction: return 1.0;
  }
  return 1.0;
}

struct FrequencyEntry {
  std::int64_t numerator = 0;
  std::int64_t denominator = 0;
  double value = 0.0;
  Scale scale = Scale::Fraction;
};

struct FrequencyReport {
  std::string edition_label;
  std::map<std::string, FrequencyEntry> entries;
};

inline StanzaStats stanza_stats(const Edition& edition) {
  std::vector<std::int64_t> sizes;
  for (const Poem& poem : edition.poems) {
    for (const Stanza& stanza : poem.stanzas) {
      sizes.push_back(static_cast<std::int64_t>(stanza.lines.size()));
    }
  }
  if (sizes.empty()) {
    throw EmptyEditionError("edition '" + edition.label + "' has no stanzas");
  }
  double sum = 0.0;
  for (auto s : sizes) sum += static_cast<double>(s);
  double mean = sum / static_cast<double>(sizes.size());
  double sq = 0.0;
  for (auto s : sizes) {
    double d = static_cast<double>(s) - mean;
    sq += d * d;
  }
  StanzaStats out;
  out.count = static_cast<std::int64_t>(sizes.size());
  out.mean_lines = mean;
  // population standard deviation: the stanzas ARE the whole population
  out.std_lines = std::sqrt(sq / static_cast<double>(sizes.size()));
  return out;
}

inline std::int64_t count_words(const std::vector<Token>& tokens) {
  std::int64_t n = 0;
  for (const Token& t : tokens) {
    if (t.is_word()) ++n;
  }
  return n;
}

// Surface-form frequency: how often any word in `words` appears per total
// word count, case-insensitively.
inline FrequencyEntry word_frequency(const std::vector<Token>& tokens,
                                     const std::unordered_set<std::string>& words,
                                     Scale scale = Scale::Percent) {
  FrequencyEntry entry;
  entry.scale = scale;
  for (const Token& t : tokens) {
    if (!t.is_word()) continue;
    ++entry.denominator;
    if (words.find(t.folded) != words.end()) ++entry.numerator;
  }
  if (entry.denominator == 0) {
    throw ZeroDenominatorError("word frequency over an edition with no words");
  }
  entry.value = scale_factor(scale) * static_cast<double>(entry.numerator) /
                static_cast<double>(entry.denominator);
  return entry;
}

// Matched '(' ')' pairs per thousand words. Unbalanced text degrades to
// counting by opening marks and reports a warning instead of failing.
inline FrequencyEntry parenthesis_frequency(const std::vector<Token>& tokens,
                                            std::vector<std::string>* warnings = nullptr) {
  std::int64_t opens = 0, closes = 0, pairs = 0, depth = 0, words = 0;
  for (const Token& t : tokens) {
    if (t.is_word()) {
      ++words;
      continue;
    }
    if (t.surface == "(") {
      ++opens;
      ++depth;
    } else if (t.surface == ")") {
      ++closes;
      if (depth > 0) {
        ++pairs;
        --depth;
      }
    }
  }
  FrequencyEntry entry;
  entry.scale = Scale::Permille;
  if (words == 0) {
    throw ZeroDenominatorError("parenthesis frequency over an edition with no words");
  }
  if (opens == closes && pairs == opens) {
    entry.numerator = pairs;
  } else {
    entry.numerator = opens;
    if (warnings != nullptr) {
      warnings->push_back("unmatched parentheses: " + std::to_string(opens) +
                          " opening vs " + std::to_string(closes) +
                          " closing; counting by opening marks");
    }
  }
  entry.denominator = words;
  entry.value = scale_factor(entry.scale) * static_cast<double>(entry.numerator) /
                static_cast<double>(entry.denominator);
  return entry;
}

}  // namespace stylochron
