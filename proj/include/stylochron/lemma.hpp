#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stylochron/lexicon.hpp"
#include "stylochron/tag.hpp"
#include "stylochron/token.hpp"

namespace stylochron {

namespace lemma_detail {

using tag_detail::ends_with;

struct Detachment {
  std::string_view suffix;
  std::string_view replacement;
  bool undouble;  // also drop a trailing doubled consonant after stripping
};

// Candidate orders follow the classic morphy tables: a candidate wins when the
// tag lexicon knows it; with no known candidate the first applicable plain
// strip is kept so unseen inflections still merge into one type.
inline constexpr Detachment kNounRules[] = {
    {"ies", "y", false}, {"ses", "s", false}, {"xes", "x", false},
    {"zes", "z", false}, {"ches", "ch", false}, {"shes", "sh", false},
    {"s", "", false},
};

inline constexpr Detachment kVerbRules[] = {
    {"ies", "y", false}, {"es", "e", false},  {"es", "", false},
    {"ed", "e", false},  {"ed", "", false},   {"ed", "", true},
    {"ing", "e", false}, {"ing", "", false},  {"ing", "", true},
    {"s", "", false},
};

inline constexpr Detachment kAdjRules[] = {
    {"ier", "y", false}, {"er", "e", false},  {"er", "", false},
    {"er", "", true},    {"iest", "y", false}, {"est", "e", false},
    {"est", "", false},  {"est", "", true},
};

inline bool is_consonant(char c) {
  return c >= 'a' && c <= 'z' && c != 'a' && c != 'e' && c != 'i' &&
         c != 'o' && c != 'u';
}

inline bool apply(const std::string& word, const Detachment& rule,
                  std::string& out) {
  if (!ends_with(word, rule.suffix)) return false;
  std::string stem = word.substr(0, word.size() - rule.suffix.size());
  stem.append(rule.replacement);
  if (rule.undouble) {
    if (stem.size() < 3 || stem[stem.size() - 1] != stem[stem.size() - 2] ||
        !is_consonant(stem.back())) {
      return false;
    }
    stem.pop_back();
  }
  if (stem.size() < 2) return false;
  out = std::move(stem);
  return true;
}

inline bool bad_plural_strip(const std::string& word, bool noun_guard) {
  // "pass", "grass", "genius", "basis": a bare -s strip would mangle these.
  if (ends_with(word, "ss")) return true;
  return noun_guard && (ends_with(word, "us") || ends_with(word, "is"));
}

template <std::size_t N>
inline std::string run_rules(const std::string& word,
                             const Detachment (&rules)[N], bool noun_guard,
                             const LexiconBundle& lex) {
  std::string candidate;
  std::string fallback;
  for (const Detachment& rule : rules) {
    if (rule.suffix == "s" && bad_plural_strip(word, noun_guard)) continue;
    if (!apply(word, rule, candidate)) continue;
    if (lex.known_word(candidate)) return candidate;
    if (fallback.empty() && !rule.undouble) fallback = candidate;
  }
  return fallback.empty() ? word : fallback;
}

}  // namespace lemma_detail

inline std::string lemmatize_word(const std::string& folded, Pos pos,
                                  const LexiconBundle& lex) {
  std::string word = tag_detail::normalize_archaic(folded);
  if (const std::string* exc = lex.lemma_exception(word, pos)) return *exc;
  // A word the lexicon already knows is its own base form ("sing" must not
  // lose its -ing); irregular inflections bypass this via the exception table.
  if (lex.known_word(word)) return word;
  switch (pos) {
    case Pos::Noun:
      return lemma_detail::run_rules(word, lemma_detail::kNounRules, true, lex);
    case Pos::Verb:
      return lemma_detail::run_rules(word, lemma_detail::kVerbRules, false, lex);
    case Pos::Adj:
      return lemma_detail::run_rules(word, lemma_detail::kAdjRules, false, lex);
    default:
      return word;
  }
}

inline void lemmatize(std::vector<Token>& tokens, const LexiconBundle& lex) {
  for (Token& t : tokens) {
    t.lemma = t.is_word() ? lemmatize_word(t.folded, t.pos, lex) : std::string();
  }
}

}  // namespace stylochron
