#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stylochron/errors.hpp"

namespace stylochron::xml {

// Just enough XML for the corpus subset: elements, attributes, character
// data, comments, CDATA, processing instructions, DOCTYPE (skipped), and the
// five predefined entities plus numeric character references.
struct Node {
  enum class Kind { Element, Text };

  Kind kind = Kind::Element;
  std::string name;   // element local name, prefix stripped
  std::string text;   // set for Kind::Text
  std::vector<std::pair<std::string, std::string>> attrs;
  std::vector<Node> children;

  const std::string* attr(std::string_view key) const {
    for (const auto& [k, v] : attrs) {
      if (k == key) return &v;
    }
    return nullptr;
  }

  bool is_element(std::string_view n) const {
    return kind == Kind::Element && name == n;
  }
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view input) : in_(input) {}

  Node parse_document() {
    skip_bom();
    Node root;
    bool have_root = false;
    while (!at_end()) {
      skip_ws();
      if (at_end()) break;
      if (!peek_is('<')) {
        fail("text outside of the root element");
      }
      if (try_skip_misc()) continue;
      if (have_root) fail("multiple root elements");
      root = parse_element();
      have_root = true;
    }
    if (!have_root) fail("no root element");
    return root;
  }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("XML: " + msg, pos_);
  }

  bool at_end() const { return pos_ >= in_.size(); }
  char cur() const { return in_[pos_]; }
  bool peek_is(char c) const { return !at_end() && in_[pos_] == c; }

  bool starts_with(std::string_view s) const {
    return in_.substr(pos_, s.size()) == s;
  }

  void skip_bom() {
    if (in_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(cur()))) ++pos_;
  }

  void expect(char c) {
    if (at_end() || cur() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  // Comments, PIs, DOCTYPE. Returns true if one was consumed.
  bool try_skip_misc() {
    if (starts_with("<?")) {
      auto end = in_.find("?>", pos_);
      if (end == std::string_view::npos) fail("unterminated processing instruction");
      pos_ = end + 2;
      return true;
    }
    if (starts_with("<!--")) {
      auto end = in_.find("-->", pos_);
      if (end == std::string_view::npos) fail("unterminated comment");
      pos_ = end + 3;
      return true;
    }
    if (starts_with("<!DOCTYPE") || starts_with("<!doctype")) {
      // Skip to the matching '>', honoring an internal subset in brackets.
      int depth = 0;
      while (!at_end()) {
        char c = cur();
        ++pos_;
        if (c == '[') ++depth;
        else if (c == ']') --depth;
        else if (c == '>' && depth <= 0) return true;
      }
      fail("unterminated DOCTYPE");
    }
    return false;
  }

  static bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
  }
  static bool is_name_char(char c) {
    return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) ||
           c == '-' || c == '.';
  }

  std::string parse_name() {
    if (at_end() || !is_name_start(cur())) fail("expected a name");
    std::size_t start = pos_;
    while (!at_end() && is_name_char(cur())) ++pos_;
    return std::string(in_.substr(start, pos_ - start));
  }

  static std::string local_name(const std::string& name) {
    auto colon = name.find(':');
    return colon == std::string::npos ? name : name.substr(colon + 1);
  }

  std::string decode_entities(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out.push_back(raw[i]);
        continue;
      }
      auto semi = raw.find(';', i + 1);
      if (semi == std::string_view::npos) fail("unterminated entity reference");
      std::string_view ent = raw.substr(i + 1, semi - i - 1);
      if (ent == "amp") out.push_back('&');
      else if (ent == "lt") out.push_back('<');
      else if (ent == "gt") out.push_back('>');
      else if (ent == "quot") out.push_back('"');
      else if (ent == "apos") out.push_back('\'');
      else if (!ent.empty() && ent[0] == '#') {
        append_codepoint(out, decode_charref(ent));
      } else {
        fail("unknown entity &" + std::string(ent) + ";");
      }
      i = semi;
    }
    return out;
  }

  unsigned long decode_charref(std::string_view ent) {
    // ent is "#123" or "#x1F".
    unsigned long cp = 0;
    if (ent.size() >= 2 && (ent[1] == 'x' || ent[1] == 'X')) {
      for (std::size_t i = 2; i < ent.size(); ++i) {
        char c = ent[i];
        int digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        else fail("bad numeric character reference");
        cp = cp * 16 + static_cast<unsigned long>(digit);
      }
    } else {
      for (std::size_t i = 1; i < ent.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(ent[i])))
          fail("bad numeric character reference");
        cp = cp * 10 + static_cast<unsigned long>(ent[i] - '0');
      }
    }
    return cp;
  }

  static void append_codepoint(std::string& out, unsigned long cp) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }

  Node parse_element() {
    expect('<');
    Node node;
    node.kind = Node::Kind::Element;
    std::string raw_name = parse_name();
    node.name = local_name(raw_name);

    // Attributes.
    while (true) {
      skip_ws();
      if (at_end()) fail("unterminated start tag <" + raw_name);
      if (cur() == '/' || cur() == '>') break;
      std::string key = parse_name();
      skip_ws();
      expect('=');
      skip_ws();
      if (at_end() || (cur() != '"' && cur() != '\'')) fail("expected quoted attribute value");
      char quote = cur();
      ++pos_;
      auto end = in_.find(quote, pos_);
      if (end == std::string_view::npos) fail("unterminated attribute value");
      node.attrs.emplace_back(local_name(key),
                              decode_entities(in_.substr(pos_, end - pos_)));
      pos_ = end + 1;
    }

    if (cur() == '/') {
      ++pos_;
      expect('>');
      return node;
    }
    expect('>');

    // Content until matching close tag.
    while (true) {
      if (at_end()) fail("unterminated element <" + raw_name + ">");
      if (cur() == '<') {
        if (starts_with("</")) {
          pos_ += 2;
          std::string close = parse_name();
          if (close != raw_name) {
            fail("mismatched close tag </" + close + "> for <" + raw_name + ">");
          }
          skip_ws();
          expect('>');
          return node;
        }
        if (starts_with("<![CDATA[")) {
          auto end = in_.find("]]>", pos_);
          if (end == std::string_view::npos) fail("unterminated CDATA section");
          Node text;
          text.kind = Node::Kind::Text;
          text.text = std::string(in_.substr(pos_ + 9, end - pos_ - 9));
          node.children.push_back(std::move(text));
          pos_ = end + 3;
          continue;
        }
        if (try_skip_misc()) continue;
        node.children.push_back(parse_element());
      } else {
        std::size_t start = pos_;
        while (!at_end() && cur() != '<') ++pos_;
        Node text;
        text.kind = Node::Kind::Text;
        text.text = decode_entities(in_.substr(start, pos_ - start));
        node.children.push_back(std::move(text));
      }
    }
  }
};

}  // namespace detail

inline Node parse(std::string_view bytes) {
  detail::Parser parser(bytes);
  return parser.parse_document();
}

// All character data beneath `node`, in document order, unnormalized.
inline void collect_text(const Node& node, std::string& out) {
  if (node.kind == Node::Kind::Text) {
    out += node.text;
    return;
  }
  for (const auto& child : node.children) collect_text(child, out);
}

inline std::string text_of(const Node& node) {
  std::string out;
  collect_text(node, out);
  return out;
}

}  // namespace stylochron::xml
