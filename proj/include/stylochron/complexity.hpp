#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/lexicon.hpp"
#include "stylochron/tag.hpp"
#include "stylochron/token.hpp"

namespace stylochron {

struct ComplexityReport {
  double ld = 0.0;
  double ls = 0.0;
  double ttr = 0.0;
  double d_measure = 0.0;
  double msttr = 0.0;
  std::int64_t n_tokens = 0;
  std::int64_t n_types = 0;
};

inline double lexical_density(const std::vector<Token>& tokens,
                              const LexiconBundle& lex) {
  std::int64_t words = 0, lexical = 0;
  for (const Token& t : tokens) {
    if (!t.is_word()) continue;
    ++words;
    if (is_lexical(t, lex)) ++lexical;
  }
  if (words == 0) throw ZeroDenominatorError("lexical density over zero words");
  return static_cast<double>(lexical) / static_cast<double>(words);
}

inline double lexical_sophistication(
    const std::vector<Token>& tokens,
    const std::unordered_set<std::string>& top2000) {
  std::unordered_set<std::string> types;
  for (const Token& t : tokens) {
    if (t.is_word()) types.insert(t.lemma);
  }
  if (types.empty()) {
    throw ZeroDenominatorError("lexical sophistication over zero word types");
  }
  std::int64_t sophisticated = 0;
  for (const std::string& type : types) {
    if (top2000.find(type) == top2000.end()) ++sophisticated;
  }
  return static_cast<double>(sophisticated) / static_cast<double>(types.size());
}

inline double type_token_ratio(const std::vector<Token>& tokens) {
  std::unordered_set<std::string> types;
  std::int64_t words = 0;
  for (const Token& t : tokens) {
    if (!t.is_word()) continue;
    ++words;
    types.insert(t.lemma);
  }
  if (words == 0) throw ZeroDenominatorError("type-token ratio over zero words");
  return static_cast<double>(types.size()) / static_cast<double>(words);
}

// TTR predicted by the vocd model: TTR = D/N * (sqrt(1 + 2N/D) - 1).
inline double d_forward(double d, std::int64_t n) {
  if (!(d > 0.0)) throw DomainError("d_forward requires d > 0");
  double ratio = d / static_cast<double>(n);
  return ratio * (std::sqrt(1.0 + 2.0 / ratio) - 1.0);
}

// Inverts d_forward in D by bisection; the model is strictly increasing in D.
inline double solve_d(double ttr_value, std::int64_t n) {
  if (!(ttr_value > 0.0) || !(ttr_value < 1.0)) {
    throw DomainError("solve_d requires a type-token ratio strictly inside (0,1)");
  }
  double lo = 1e-6, hi = 1e9;
  double flo = d_forward(lo, n) - ttr_value;
  double fhi = d_forward(hi, n) - ttr_value;
  if (flo > 0.0 || fhi < 0.0) {
    throw ConvergenceError("solve_d: no root bracketed in [1e-6, 1e9]");
  }
  // Run the interval down to relative machine scale rather than stopping at
  // the first small residual; the flat high-D regime otherwise leaves the
  // root orders of magnitude less precise than the residual suggests.
  double mid = lo;
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    double fmid = d_forward(mid, n) - ttr_value;
    if (fmid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= std::fabs(mid) * 1e-13) break;
  }
  if (std::fabs(d_forward(mid, n) - ttr_value) < 1e-10) return mid;
  throw ConvergenceError("solve_d: bisection failed to reach residual 1e-10");
}

// Mean segmental TTR over consecutive full blocks of segment_len words;
// the trailing partial block is discarded.
inline double msttr(const std::vector<Token>& tokens, std::int64_t segment_len = 50) {
  if (segment_len < 1) throw DomainError("msttr requires segment_len >= 1");
  std::vector<const std::string*> lemmas;
  for (const Token& t : tokens) {
    if (t.is_word()) lemmas.push_back(&t.lemma);
  }
  const std::int64_t n = static_cast<std::int64_t>(lemmas.size());
  const std::int64_t blocks = n / segment_len;
  if (blocks == 0) {
    throw InsufficientTextError("msttr needs at least " + std::to_string(segment_len) +
                                " words, got " + std::to_string(n));
  }
  double sum = 0.0;
  std::unordered_set<std::string> types;
  for (std::int64_t b = 0; b < blocks; ++b) {
    types.clear();
    for (std::int64_t i = b * segment_len; i < (b + 1) * segment_len; ++i) {
      types.insert(*lemmas[i]);
    }
    sum += static_cast<double>(types.size()) / static_cast<double>(segment_len);
  }
  return sum / static_cast<double>(blocks);
}

inline ComplexityReport compute_complexity(const std::vector<Token>& tokens,
                                           const LexiconBundle& lex,
                                           std::int64_t segment_len = 50) {
  ComplexityReport report;
  std::unordered_set<std::string> types;
  for (const Token& t : tokens) {
    if (!t.is_word()) continue;
    ++report.n_tokens;
    types.insert(t.lemma);
  }
  report.n_types = static_cast<std::int64_t>(types.size());
  report.ld = lexical_density(tokens, lex);
  report.ls = lexical_sophistication(tokens, lex.top2000);
  report.ttr = type_token_ratio(tokens);
  report.d_measure = solve_d(report.ttr, report.n_tokens);
  report.msttr = msttr(tokens, segment_len);
  return report;
}

}  // namespace stylochron
