#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/text.hpp"

namespace stylochron {

namespace csv_detail {

inline bool needs_quoting(std::string_view field) {
  return field.find_first_of(",\"\n\r") != std::string_view::npos;
}

}  // namespace csv_detail

// RFC 4180 row writer: UTF-8, LF line endings, quotes only when needed.
class CsvWriter {
 public:
  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out_ << ',';
      write_field(fields[i]);
    }
    out_ << '\n';
  }

  std::string str() const { return out_.str(); }

 private:
  void write_field(std::string_view field) {
    if (!csv_detail::needs_quoting(field)) {
      out_ << field;
      return;
    }
    out_ << '"';
    for (char c : field) {
      if (c == '"') out_ << '"';
      out_ << c;
    }
    out_ << '"';
  }

  std::ostringstream out_;
};

struct ReviewCounts {
  std::vector<std::pair<std::string, std::int64_t>> rows;  // label, reviews

  const std::int64_t* find(const std::string& label) const {
    for (const auto& [l, n] : rows) {
      if (l == label) return &n;
    }
    return nullptr;
  }
};

// Parses the bundled review-count table (header "label,reviews"). Quoted
// fields are not needed for edition labels, so a plain comma split suffices.
inline ReviewCounts parse_reviews_csv(const std::string& content) {
  ReviewCounts out;
  std::istringstream in(content);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line != "label,reviews") {
        throw ParseError("reviews csv must start with header 'label,reviews'");
      }
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != 2) {
      throw ParseError("reviews csv row needs 2 fields: '" + line + "'");
    }
    try {
      out.rows.emplace_back(trim(fields[0]), std::stoll(trim(fields[1])));
    } catch (const std::exception&) {
      throw ParseError("reviews csv has a non-integer count: '" + line + "'");
    }
  }
  if (out.rows.empty()) throw ParseError("reviews csv has no data rows");
  return out;
}

}  // namespace stylochron
