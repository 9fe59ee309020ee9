#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace stylochron {

enum class Pos {
  Noun,
  Verb,
  Adj,
  Adv,
  Pron,
  Det,
  Adp,
  Conj,
  Num,
  Part,
  Intj,
  Other,
};

inline std::string_view pos_name(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "NOUN";
    case Pos::Verb: return "VERB";
    case Pos::Adj: return "ADJ";
    case Pos::Adv: return "ADV";
    case Pos::Pron: return "PRON";
    case Pos::Det: return "DET";
    case Pos::Adp: return "ADP";
    case Pos::Conj: return "CONJ";
    case Pos::Num: return "NUM";
    case Pos::Part: return "PART";
    case Pos::Intj: return "INTJ";
    case Pos::Other: return "OTHER";
  }
  return "OTHER";
}

inline std::optional<Pos> pos_from_name(std::string_view name) {
  if (name == "NOUN") return Pos::Noun;
  if (name == "VERB") return Pos::Verb;
  if (name == "ADJ") return Pos::Adj;
  if (name == "ADV") return Pos::Adv;
  if (name == "PRON") return Pos::Pron;
  if (name == "DET") return Pos::Det;
  if (name == "ADP") return Pos::Adp;
  if (name == "CONJ") return Pos::Conj;
  if (name == "NUM") return Pos::Num;
  if (name == "PART") return Pos::Part;
  if (name == "INTJ") return Pos::Intj;
  if (name == "OTHER") return Pos::Other;
  return std::nullopt;
}

struct Token {
  enum class Kind { Word, Punct };

  Kind kind = Kind::Word;
  std::string surface;
  std::string folded;
  std::string lemma;
  Pos pos = Pos::Other;

  bool is_word() const { return kind == Kind::Word; }
};

}  // namespace stylochron
