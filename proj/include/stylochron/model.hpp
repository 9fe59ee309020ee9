#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/text.hpp"

namespace stylochron {

struct Line {
  std::string raw_text;  // whitespace-normalized, markup stripped
};

struct Stanza {
  std::vector<Line> lines;
};

struct Poem {
  std::optional<std::string> title;
  std::vector<Stanza> stanzas;
};

struct Edition {
  std::string label;
  int ordinal = 0;
  std::vector<Poem> poems;

  std::size_t stanza_count() const {
    std::size_t n = 0;
    for (const auto& p : poems) n += p.stanzas.size();
    return n;
  }

  std::size_t line_count() const {
    std::size_t n = 0;
    for (const auto& p : poems)
      for (const auto& s : p.stanzas) n += s.lines.size();
    return n;
  }
};

// Plain-text debug serialization. Sentinel prefixes keep verse lines (which
// never contain newlines) unambiguous on re-read.
inline std::string to_debug_text(const Edition& edition) {
  std::string out;
  out += "=edition\t" + edition.label + "\t" + std::to_string(edition.ordinal) + "\n";
  for (const auto& poem : edition.poems) {
    out += "=poem";
    if (poem.title) out += "\t" + *poem.title;
    out += "\n";
    for (const auto& stanza : poem.stanzas) {
      out += "=stanza\n";
      for (const auto& line : stanza.lines) {
        out += "|" + line.raw_text + "\n";
      }
    }
  }
  return out;
}

inline Edition from_debug_text(std::string_view text) {
  Edition edition;
  bool have_header = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view row = text.substr(start, nl - start);
    start = nl + 1;
    if (row.empty()) {
      if (start > text.size()) break;
      continue;
    }
    if (row.substr(0, 9) == "=edition\t") {
      auto rest = row.substr(9);
      auto tab = rest.find('\t');
      if (tab == std::string_view::npos)
        throw ParseError("debug text: bad edition header");
      edition.label = std::string(rest.substr(0, tab));
      edition.ordinal = std::stoi(std::string(rest.substr(tab + 1)));
      have_header = true;
    } else if (row.substr(0, 5) == "=poem") {
      Poem poem;
      if (row.size() > 5 && row[5] == '\t') poem.title = std::string(row.substr(6));
      edition.poems.push_back(std::move(poem));
    } else if (row == "=stanza") {
      if (edition.poems.empty()) throw ParseError("debug text: stanza before poem");
      edition.poems.back().stanzas.emplace_back();
    } else if (row[0] == '|') {
      if (edition.poems.empty() || edition.poems.back().stanzas.empty())
        throw ParseError("debug text: line outside stanza");
      edition.poems.back().stanzas.back().lines.push_back(
          Line{std::string(row.substr(1))});
    } else {
      throw ParseError("debug text: unrecognized row");
    }
  }
  if (!have_header) throw ParseError("debug text: missing edition header");
  return edition;
}

}  // namespace stylochron
