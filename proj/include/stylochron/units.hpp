#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stylochron/lemma.hpp"
#include "stylochron/lexicon.hpp"
#include "stylochron/model.hpp"
#include "stylochron/tag.hpp"
#include "stylochron/token.hpp"
#include "stylochron/tokenize.hpp"

namespace stylochron {

// Tokenize + tag + lemmatize one raw verse line.
inline std::vector<Token> annotate_line(const std::string& raw,
                                        const LexiconBundle& lex) {
  std::vector<Token> tokens = tokenize(raw);
  pos_tag(tokens, lex);
  lemmatize(tokens, lex);
  return tokens;
}

// Whole-edition token stream in document order.
inline std::vector<Token> edition_tokens(const Edition& edition,
                                         const LexiconBundle& lex) {
  std::vector<Token> out;
  for (const Poem& poem : edition.poems) {
    for (const Stanza& stanza : poem.stanzas) {
      for (const Line& line : stanza.lines) {
        std::vector<Token> tokens = annotate_line(line.raw_text, lex);
        out.insert(out.end(), std::make_move_iterator(tokens.begin()),
                   std::make_move_iterator(tokens.end()));
      }
    }
  }
  return out;
}

struct SentimentUnit {
  std::vector<Token> tokens;
  std::size_t poem_index = 0;
  std::size_t stanza_index = 0;
  std::size_t line_index = 0;
};

enum class UnitMode { Line, Sentence };

namespace unit_detail {

inline bool has_word(const std::vector<Token>& tokens) {
  for (const Token& t : tokens) {
    if (t.is_word()) return true;
  }
  return false;
}

inline bool is_sentence_end(const Token& t) {
  return t.kind == Token::Kind::Punct &&
         (t.surface == "." || t.surface == "!" || t.surface == "?");
}

}  // namespace unit_detail

// One unit per verse line by default; pure-punctuation lines are dropped.
// Sentence mode concatenates each poem's lines and cuts at ./!/? instead.
inline std::vector<SentimentUnit> segment_units(const Edition& edition,
                                                const LexiconBundle& lex,
                                                UnitMode mode = UnitMode::Line) {
  std::vector<SentimentUnit> units;
  for (std::size_t p = 0; p < edition.poems.size(); ++p) {
    const Poem& poem = edition.poems[p];
    SentimentUnit pending;  // only used in sentence mode
    bool pending_open = false;
    for (std::size_t s = 0; s < poem.stanzas.size(); ++s) {
      const Stanza& stanza = poem.stanzas[s];
      for (std::size_t l = 0; l < stanza.lines.size(); ++l) {
        std::vector<Token> tokens = annotate_line(stanza.lines[l].raw_text, lex);
        if (mode == UnitMode::Line) {
          if (unit_detail::has_word(tokens)) {
            units.push_back({std::move(tokens), p, s, l});
          }
          continue;
        }
        for (Token& t : tokens) {
          if (!pending_open) {
            pending = SentimentUnit{{}, p, s, l};
            pending_open = true;
          }
          bool ends = unit_detail::is_sentence_end(t);
          pending.tokens.push_back(std::move(t));
          if (ends) {
            if (unit_detail::has_word(pending.tokens)) {
              units.push_back(std::move(pending));
            }
            pending_open = false;
          }
        }
      }
    }
    if (pending_open && unit_detail::has_word(pending.tokens)) {
      units.push_back(std::move(pending));
    }
  }
  return units;
}

}  // namespace stylochron
