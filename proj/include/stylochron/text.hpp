#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace stylochron {

// ASCII lowercase fold. The corpus is 19th-century English; bytes >= 0x80 pass
// through unchanged except the right single quote (U+2019), which folds to '\''
// so lexicon lookups never depend on the typographic apostrophe variant.
inline std::string fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == 0xE2 && i + 2 < s.size() &&
        static_cast<unsigned char>(s[i + 1]) == 0x80 &&
        static_cast<unsigned char>(s[i + 2]) == 0x99) {
      out.push_back('\'');
      i += 2;
      continue;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

// Collapse internal whitespace runs to single spaces and trim both ends.
inline std::string normalize_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = false;
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      if (!in_space && !out.empty()) {
        out.push_back(' ');
        in_space = true;
      }
    } else {
      out.push_back(static_cast<char>(c));
      in_space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Fixed 6-significant-digit rendering used by every CSV/JSON report writer.
// snprintf("%.6g") is locale-independent for the C locale and byte-stable.
inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

struct Codepoint {
  char32_t value = 0;
  std::size_t length = 1;  // bytes consumed
};

// Minimal UTF-8 decode; malformed bytes decode as themselves so corpus noise
// degrades to punctuation instead of aborting a run.
inline Codepoint decode_utf8(std::string_view s, std::size_t i) {
  unsigned char c0 = static_cast<unsigned char>(s[i]);
  if (c0 < 0x80) return {c0, 1};
  auto cont = [&](std::size_t k) {
    return i + k < s.size() &&
           (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  auto bits = [&](std::size_t k) {
    return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
  };
  if ((c0 & 0xE0) == 0xC0 && cont(1)) {
    return {static_cast<char32_t>((c0 & 0x1F) << 6) | bits(1), 2};
  }
  if ((c0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    return {static_cast<char32_t>((c0 & 0x0F) << 12) | (bits(1) << 6) | bits(2), 3};
  }
  if ((c0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    return {static_cast<char32_t>((c0 & 0x07) << 18) | (bits(1) << 12) |
                (bits(2) << 6) | bits(3),
            4};
  }
  return {c0, 1};
}

inline bool is_all_caps(std::string_view word) {
  bool has_alpha = false;
  for (unsigned char c : word) {
    if (std::isalpha(c)) {
      has_alpha = true;
      if (std::islower(c)) return false;
    }
  }
  return has_alpha;
}

}  // namespace stylochron
