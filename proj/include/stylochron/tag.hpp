#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stylochron/lexicon.hpp"
#include "stylochron/token.hpp"

namespace stylochron {

namespace tag_detail {

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Archaic preterites ("weather'd") behave like "-ed" forms everywhere the
// suffix rules look at endings.
inline std::string normalize_archaic(std::string_view folded) {
  std::string s(folded);
  if (ends_with(s, "'d")) {
    s.resize(s.size() - 2);
    s += "ed";
  }
  return s;
}

inline Pos suffix_pos(std::string_view w) {
  if (ends_with(w, "ly")) return Pos::Adv;
  if (ends_with(w, "tion") || ends_with(w, "ness") || ends_with(w, "ment") ||
      ends_with(w, "ity")) {
    return Pos::Noun;
  }
  if (ends_with(w, "ous") || ends_with(w, "ful") || ends_with(w, "ive") ||
      ends_with(w, "able")) {
    return Pos::Adj;
  }
  if (ends_with(w, "ize") || ends_with(w, "ate")) return Pos::Verb;
  if (ends_with(w, "ing") || ends_with(w, "ed")) return Pos::Verb;
  return Pos::Noun;
}

}  // namespace tag_detail

inline Pos pos_tag_word(const std::string& folded, const LexiconBundle& lex) {
  auto it = lex.tag_lexicon.find(folded);
  if (it != lex.tag_lexicon.end()) return it->second;
  return tag_detail::suffix_pos(tag_detail::normalize_archaic(folded));
}

inline void pos_tag(std::vector<Token>& tokens, const LexiconBundle& lex) {
  for (Token& t : tokens) {
    t.pos = t.is_word() ? pos_tag_word(t.folded, lex) : Pos::Other;
  }
}

// Content-word test: nouns, adjectives, verbs, and adverbs derived from
// adjectives ("boldly" counts because the lexicon tags "bold" ADJ).
inline bool is_lexical(const Token& token, const LexiconBundle& lex) {
  if (!token.is_word()) return false;
  if (token.pos == Pos::Noun || token.pos == Pos::Adj || token.pos == Pos::Verb) {
    return true;
  }
  if (token.pos == Pos::Adv && tag_detail::ends_with(token.folded, "ly")) {
    std::string stem = token.folded.substr(0, token.folded.size() - 2);
    auto it = lex.tag_lexicon.find(stem);
    return it != lex.tag_lexicon.end() && it->second == Pos::Adj;
  }
  return false;
}

}  // namespace stylochron
