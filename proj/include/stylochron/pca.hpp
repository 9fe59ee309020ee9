#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/tfidf.hpp"

namespace stylochron {

struct Projection2D {
  std::vector<std::array<double, 2>> points;
  std::array<double, 2> explained_variance = {0.0, 0.0};
};

namespace pca_detail {

// Cyclic Jacobi eigensolver for small symmetric matrices. Deterministic
// sweep order; returns eigenvalues on the diagonal of `a` and eigenvectors
// as columns of `v`.
inline void jacobi_eigen(std::vector<std::vector<double>>& a,
                         std::vector<std::vector<double>>& v) {
  const std::size_t n = a.size();
  v.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-30) return;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
}

}  // namespace pca_detail

// Projects editions onto the top two principal axes of the centered feature
// matrix via the editions-by-editions Gram matrix. Sign convention: the
// largest-magnitude term loading of each component is positive. Rank-1 input
// yields a zero second component; rank-0 input (all rows identical) throws.
inline Projection2D pca_2d(const FeatureMatrix& features) {
  const std::size_t m = features.rows.size();
  if (m < 3) throw InsufficientDataError("pca_2d needs at least 3 editions");
  const std::size_t k = features.terms.size();

  std::vector<std::vector<double>> centered(m, std::vector<double>(k, 0.0));
  for (std::size_t j = 0; j < k; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < m; ++i) mean += features.rows[i][j];
    mean /= static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) centered[i][j] = features.rows[i][j] - mean;
  }

  std::vector<std::vector<double>> gram(m, std::vector<double>(m, 0.0));
  double trace = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      double dot = 0.0;
      for (std::size_t t = 0; t < k; ++t) dot += centered[i][t] * centered[j][t];
      gram[i][j] = dot;
      gram[j][i] = dot;
    }
    trace += gram[i][i];
  }

  std::vector<std::vector<double>> vecs;
  pca_detail::jacobi_eigen(gram, vecs);

  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (gram[a][a] != gram[b][b]) return gram[a][a] > gram[b][b];
    return a < b;
  });

  const double tol = 1e-12 * std::max(trace, 1.0);
  if (gram[order[0]][order[0]] <= tol) {
    throw DegenerateRankError("pca_2d: all editions coincide after centering");
  }

  Projection2D proj;
  proj.points.assign(m, {0.0, 0.0});
  for (std::size_t comp = 0; comp < 2; ++comp) {
    double lambda = gram[order[comp]][order[comp]];
    if (lambda <= tol) {
      proj.explained_variance[comp] = 0.0;
      continue;
    }
    double sigma = std::sqrt(lambda);
    std::vector<double> u(m);
    for (std::size_t i = 0; i < m; ++i) u[i] = vecs[i][order[comp]];

    // loading direction = X^T u; flip so its largest-|entry| is positive
    double best = 0.0;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < k; ++j) {
      double w = 0.0;
      for (std::size_t i = 0; i < m; ++i) w += centered[i][j] * u[i];
      if (std::fabs(w) > std::fabs(best)) {
        best = w;
        best_j = j;
      }
    }
    (void)best_j;
    double sign = best < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < m; ++i) proj.points[i][comp] = sign * sigma * u[i];
    proj.explained_variance[comp] = lambda / static_cast<double>(m - 1);
  }
  return proj;
}

inline std::vector<double> consecutive_distances(const Projection2D& proj) {
  if (proj.points.size() < 2) {
    throw InsufficientDataError("consecutive distances need at least 2 points");
  }
  std::vector<double> out;
  out.reserve(proj.points.size() - 1);
  for (std::size_t i = 1; i < proj.points.size(); ++i) {
    double dx = proj.points[i][0] - proj.points[i - 1][0];
    double dy = proj.points[i][1] - proj.points[i - 1][1];
    out.push_back(std::sqrt(dx * dx + dy * dy));
  }
  return out;
}

}  // namespace stylochron
