#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/lexicon.hpp"
#include "stylochron/token.hpp"

namespace stylochron {

struct DocTermCounts {
  std::vector<std::string> vocabulary;       // sorted, unique
  std::vector<std::vector<std::int64_t>> counts;  // editions x terms
};

struct FeatureMatrix {
  std::vector<std::string> terms;
  std::vector<std::vector<double>> rows;  // editions x terms
};

// Terms are folded lemmas of WORD tokens with stopwords removed (checked on
// both the surface and the lemma, so inflected function words never leak in).
inline DocTermCounts build_counts(
    const std::vector<std::vector<Token>>& edition_tokens,
    const std::unordered_set<std::string>& stopwords) {
  if (edition_tokens.size() < 2) {
    throw InsufficientDataError("term counting needs at least 2 editions");
  }
  std::map<std::string, std::size_t> index;
  std::vector<std::unordered_map<std::string, std::int64_t>> raw(
      edition_tokens.size());
  for (std::size_t e = 0; e < edition_tokens.size(); ++e) {
    for (const Token& t : edition_tokens[e]) {
      if (!t.is_word()) continue;
      if (stopwords.count(t.folded) != 0 || stopwords.count(t.lemma) != 0) continue;
      ++raw[e][t.lemma];
      index.emplace(t.lemma, 0);
    }
  }
  if (index.empty()) {
    throw EmptyVocabularyError("no content terms survive stopword removal");
  }
  DocTermCounts out;
  out.vocabulary.reserve(index.size());
  for (auto& [term, slot] : index) {
    slot = out.vocabulary.size();
    out.vocabulary.push_back(term);
  }
  out.counts.assign(edition_tokens.size(),
                    std::vector<std::int64_t>(out.vocabulary.size(), 0));
  for (std::size_t e = 0; e < raw.size(); ++e) {
    for (const auto& [term, count] : raw[e]) {
      out.counts[e][index[term]] = count;
    }
  }
  return out;
}

inline double smoothed_idf(std::int64_t df, std::int64_t n_docs) {
  return 1.0 + std::log((1.0 + static_cast<double>(n_docs)) /
                        (1.0 + static_cast<double>(df)));
}

namespace tfidf_detail {

inline void normalize_rows(std::vector<std::vector<double>>& rows) {
  for (auto& row : rows) {
    double norm_sq = 0.0;
    for (double v : row) norm_sq += v * v;
    if (norm_sq == 0.0) continue;
    double inv = 1.0 / std::sqrt(norm_sq);
    for (double& v : row) v *= inv;
  }
}

}  // namespace tfidf_detail

// Raw tf times smoothed idf, each edition row scaled to unit Euclidean norm.
inline FeatureMatrix tfidf(const DocTermCounts& counts) {
  const std::size_t n_docs = counts.counts.size();
  const std::size_t n_terms = counts.vocabulary.size();
  std::vector<std::int64_t> df(n_terms, 0);
  for (const auto& row : counts.counts) {
    for (std::size_t j = 0; j < n_terms; ++j) {
      if (row[j] > 0) ++df[j];
    }
  }
  FeatureMatrix out;
  out.terms = counts.vocabulary;
  out.rows.assign(n_docs, std::vector<double>(n_terms, 0.0));
  for (std::size_t j = 0; j < n_terms; ++j) {
    double idf = smoothed_idf(df[j], static_cast<std::int64_t>(n_docs));
    for (std::size_t i = 0; i < n_docs; ++i) {
      out.rows[i][j] = static_cast<double>(counts.counts[i][j]) * idf;
    }
  }
  tfidf_detail::normalize_rows(out.rows);
  return out;
}

// Keep the k terms with the highest per-term maximum tf-idf across editions,
// ties broken lexicographically, then re-normalize the restricted rows.
inline FeatureMatrix select_features(const FeatureMatrix& matrix, std::size_t k = 400,
                                     std::vector<std::string>* warnings = nullptr) {
  const std::size_t n_terms = matrix.terms.size();
  if (k >= n_terms) {
    if (k > n_terms && warnings != nullptr) {
      warnings->push_back("requested " + std::to_string(k) + " features but only " +
                          std::to_string(n_terms) + " terms exist; keeping all");
    }
    FeatureMatrix out = matrix;
    tfidf_detail::normalize_rows(out.rows);
    return out;
  }
  std::vector<std::size_t> order(n_terms);
  for (std::size_t j = 0; j < n_terms; ++j) order[j] = j;
  std::vector<double> score(n_terms, 0.0);
  for (std::size_t j = 0; j < n_terms; ++j) {
    for (const auto& row : matrix.rows) score[j] = std::max(score[j], row[j]);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return matrix.terms[a] < matrix.terms[b];
  });
  order.resize(k);
  std::sort(order.begin(), order.end());  // keep original column order

  FeatureMatrix out;
  out.terms.reserve(k);
  for (std::size_t j : order) out.terms.push_back(matrix.terms[j]);
  out.rows.assign(matrix.rows.size(), std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    for (std::size_t jj = 0; jj < k; ++jj) {
      out.rows[i][jj] = matrix.rows[i][order[jj]];
    }
  }
  tfidf_detail::normalize_rows(out.rows);
  return out;
}

}  // namespace stylochron
