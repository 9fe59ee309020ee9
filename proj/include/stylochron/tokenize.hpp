#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stylochron/text.hpp"
#include "stylochron/token.hpp"

namespace stylochron {

namespace tok_detail {

inline bool is_space_cp(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == 0x0B ||
         cp == 0x0C || cp == 0xA0 || (cp >= 0x2000 && cp <= 0x200B) ||
         cp == 0x2028 || cp == 0x2029 || cp == 0x3000;
}

inline bool is_letter_cp(char32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  // Latin-1 supplement letters and extended Latin, minus × and ÷.
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  return false;
}

inline bool is_word_cp(char32_t cp) {
  return is_letter_cp(cp) || (cp >= '0' && cp <= '9');
}

inline bool is_apostrophe_cp(char32_t cp) { return cp == '\'' || cp == 0x2019; }

inline bool is_dash_cp(char32_t cp) {
  return cp == 0x2013 || cp == 0x2014 || cp == 0x2015;
}

struct Cp {
  char32_t value;
  std::size_t offset;
  std::size_t length;
};

inline std::vector<Cp> decode_all(std::string_view s) {
  std::vector<Cp> cps;
  cps.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    Codepoint cp = decode_utf8(s, i);
    cps.push_back({cp.value, i, cp.length});
    i += cp.length;
  }
  return cps;
}

}  // namespace tok_detail

// Splits a line into WORD and PUNCT tokens. Apostrophes flanked by letters
// stay inside their word ("weather'd", "o'er"); a single hyphen between word
// characters stays inside ("to-day"); hyphen runs and em/en dashes split the
// neighbors and come out as PUNCT; every other punctuation mark is its own
// PUNCT token.
inline std::vector<Token> tokenize(std::string_view line) {
  using namespace tok_detail;
  std::vector<Token> tokens;
  const std::vector<Cp> cps = decode_all(line);
  const std::size_t n = cps.size();

  auto slice = [&](std::size_t b, std::size_t e) {
    return std::string(line.substr(cps[b].offset,
                                   cps[e - 1].offset + cps[e - 1].length -
                                       cps[b].offset));
  };
  auto emit = [&](Token::Kind kind, std::size_t b, std::size_t e) {
    Token t;
    t.kind = kind;
    t.surface = slice(b, e);
    t.folded = fold(t.surface);
    tokens.push_back(std::move(t));
  };

  std::size_t i = 0;
  while (i < n) {
    char32_t cp = cps[i].value;
    if (is_space_cp(cp)) {
      ++i;
      continue;
    }
    if (is_word_cp(cp)) {
      std::size_t j = i + 1;
      while (j < n) {
        char32_t cj = cps[j].value;
        if (is_word_cp(cj)) {
          ++j;
        } else if (is_apostrophe_cp(cj) && j + 1 < n &&
                   is_letter_cp(cps[j - 1].value) &&
                   is_letter_cp(cps[j + 1].value)) {
          ++j;
        } else if (cj == '-' && j + 1 < n && is_word_cp(cps[j + 1].value) &&
                   is_word_cp(cps[j - 1].value)) {
          ++j;
        } else {
          break;
        }
      }
      emit(Token::Kind::Word, i, j);
      i = j;
      continue;
    }
    if (cp == '-') {
      std::size_t j = i;
      while (j < n && cps[j].value == '-') ++j;
      emit(Token::Kind::Punct, i, j);
      i = j;
      continue;
    }
    emit(Token::Kind::Punct, i, i + 1);
    ++i;
  }
  return tokens;
}

}  // namespace stylochron
