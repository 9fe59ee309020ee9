#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/text.hpp"

namespace stylochron::toml {

// A deliberately small TOML subset: [table] and [[array-of-tables]] headers,
// string/integer/float/boolean scalars, and flat arrays. Covers the manifest
// and the sentiment constants file; not a general TOML implementation.
struct Value {
  enum class Kind { String, Integer, Float, Boolean, Array };

  Kind kind = Kind::String;
  std::string str;
  std::int64_t integer = 0;
  double real = 0.0;
  bool boolean = false;
  std::vector<Value> array;

  double as_real() const {
    if (kind == Kind::Float) return real;
    if (kind == Kind::Integer) return static_cast<double>(integer);
    throw ManifestError("expected a number, got '" + str + "'");
  }
};

using Table = std::map<std::string, Value>;

struct Document {
  Table root;
  std::map<std::string, Table> tables;
  std::map<std::string, std::vector<Table>> table_arrays;

  const Value* find(const Table& t, std::string_view key) const {
    auto it = t.find(std::string(key));
    return it == t.end() ? nullptr : &it->second;
  }
};

namespace detail {

inline std::string toml_line(std::size_t line_no) {
  return "TOML line " + std::to_string(line_no) + ": ";
}

inline Value parse_value(std::string_view raw, std::size_t line_no) {
  std::string s = trim(raw);
  if (s.empty()) throw ParseError(detail::toml_line(line_no) + "empty value");
  Value v;
  if (s.front() == '"') {
    if (s.size() < 2 || s.back() != '"')
      throw ParseError(detail::toml_line(line_no) + "unterminated string");
    v.kind = Value::Kind::String;
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] == '\\' && i + 2 < s.size()) {
        char n = s[i + 1];
        if (n == '"') { out.push_back('"'); ++i; continue; }
        if (n == '\\') { out.push_back('\\'); ++i; continue; }
        if (n == 't') { out.push_back('\t'); ++i; continue; }
        if (n == 'n') { out.push_back('\n'); ++i; continue; }
      }
      out.push_back(s[i]);
    }
    v.str = out;
    return v;
  }
  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError(detail::toml_line(line_no) + "unterminated array");
    v.kind = Value::Kind::Array;
    std::string body = trim(s.substr(1, s.size() - 2));
    if (body.empty()) return v;
    // Split on commas outside quotes.
    std::vector<std::string> items;
    std::string cur;
    bool in_str = false;
    for (char c : body) {
      if (c == '"') in_str = !in_str;
      if (c == ',' && !in_str) {
        items.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!trim(cur).empty()) items.push_back(cur);
    for (const auto& item : items) v.array.push_back(parse_value(item, line_no));
    return v;
  }
  if (s == "true" || s == "false") {
    v.kind = Value::Kind::Boolean;
    v.boolean = (s == "true");
    return v;
  }
  bool numeric = true, has_dot = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '-' || c == '+') {
      if (i != 0) numeric = false;
    } else if (c == '.' || c == 'e' || c == 'E') {
      has_dot = true;
    } else if (!is_ascii_digit(c)) {
      numeric = false;
    }
  }
  if (!numeric) throw ParseError(detail::toml_line(line_no) + "unrecognized value '" + s + "'");
  if (has_dot) {
    v.kind = Value::Kind::Float;
    v.real = std::stod(s);
  } else {
    v.kind = Value::Kind::Integer;
    v.integer = std::stoll(s);
  }
  return v;
}

}  // namespace detail

inline Document parse(std::string_view text) {
  Document doc;
  Table* current = &doc.root;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line = trim(text.substr(start, nl - start));
    start = nl + 1;
    ++line_no;
    if (start > text.size() && line.empty()) break;

    // Strip comments outside strings.
    bool in_str = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_str = !in_str;
      if (line[i] == '#' && !in_str) {
        line = trim(std::string_view(line).substr(0, i));
        break;
      }
    }
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.size() >= 4 && line[1] == '[') {
        if (line.substr(line.size() - 2) != "]]")
          throw ParseError(detail::toml_line(line_no) + "bad table-array header");
        std::string name = trim(std::string_view(line).substr(2, line.size() - 4));
        doc.table_arrays[name].emplace_back();
        current = &doc.table_arrays[name].back();
      } else {
        if (line.back() != ']')
          throw ParseError(detail::toml_line(line_no) + "bad table header");
        std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
        current = &doc.tables[name];
      }
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(detail::toml_line(line_no) + "expected key = value");
    std::string key = trim(std::string_view(line).substr(0, eq));
    if (key.empty()) throw ParseError(detail::toml_line(line_no) + "empty key");
    (*current)[key] = detail::parse_value(std::string_view(line).substr(eq + 1), line_no);
  }
  return doc;
}

}  // namespace stylochron::toml
