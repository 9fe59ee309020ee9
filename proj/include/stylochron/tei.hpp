#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/model.hpp"
#include "stylochron/text.hpp"
#include "stylochron/xml.hpp"

namespace stylochron {

namespace tei_detail {

inline bool is_skipped_subtree(const xml::Node& el) {
  return el.name == "teiHeader" || el.name == "front" || el.name == "back" ||
         el.name == "note";
}

inline bool is_line_element(const xml::Node& el) {
  return el.name == "l" || el.name == "line";
}

// Structural classification keys on the type attribute, as the corpus does;
// untyped <lg>/<lg1>/<lg2> fall back to their TEI meaning (a line group).
inline bool is_poem(const xml::Node& el) {
  const auto* type = el.attr("type");
  return type != nullptr && *type == "poem";
}

inline bool is_linegroup(const xml::Node& el) {
  if (const auto* type = el.attr("type")) {
    return *type == "linegroup" || *type == "stanza";
  }
  return el.name.size() >= 2 && el.name.compare(0, 2, "lg") == 0;
}

inline void flush_run(std::vector<Line>& run, Poem& poem) {
  if (!run.empty()) {
    poem.stanzas.push_back(Stanza{std::move(run)});
    run.clear();
  }
}

// Collect verse lines below `node` into `run`, emitting a stanza whenever a
// line-group boundary is crossed. Sections, clusters, and other wrappers are
// transparent, which flattens nesting in document order.
inline void collect_poem_content(const xml::Node& node, std::vector<Line>& run,
                                 Poem& poem) {
  for (const auto& child : node.children) {
    if (child.kind != xml::Node::Kind::Element) continue;
    if (is_skipped_subtree(child) || child.name == "head") continue;
    if (is_line_element(child)) {
      std::string text = normalize_whitespace(xml::text_of(child));
      if (!text.empty()) run.push_back(Line{std::move(text)});
      continue;
    }
    if (is_linegroup(child) && !is_poem(child)) {
      flush_run(run, poem);
      std::vector<Line> inner;
      collect_poem_content(child, inner, poem);
      flush_run(inner, poem);
      continue;
    }
    collect_poem_content(child, run, poem);
  }
}

inline Poem build_poem(const xml::Node& el) {
  Poem poem;
  for (const auto& child : el.children) {
    if (child.kind == xml::Node::Kind::Element && child.name == "head") {
      std::string title = normalize_whitespace(xml::text_of(child));
      if (!title.empty()) {
        poem.title = std::move(title);
        break;
      }
    }
  }
  std::vector<Line> run;
  collect_poem_content(el, run, poem);
  flush_run(run, poem);
  return poem;
}

inline void find_poems(const xml::Node& node, std::vector<Poem>& out) {
  if (node.kind != xml::Node::Kind::Element || is_skipped_subtree(node)) return;
  if (is_poem(node)) {
    Poem poem = build_poem(node);
    if (!poem.stanzas.empty()) out.push_back(std::move(poem));
    return;
  }
  for (const auto& child : node.children) find_poems(child, out);
}

}  // namespace tei_detail

inline Edition parse_edition(std::string_view xml_bytes, const std::string& label,
                             int ordinal) {
  xml::Node root = xml::parse(xml_bytes);
  Edition edition;
  edition.label = label;
  edition.ordinal = ordinal;
  tei_detail::find_poems(root, edition.poems);
  if (edition.poems.empty()) {
    throw EmptyEditionError("edition '" + label + "': no poems found");
  }
  return edition;
}

}  // namespace stylochron
