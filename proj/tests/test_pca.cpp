#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/pca.hpp"

using namespace stylochron;

namespace {

FeatureMatrix matrix(std::vector<std::vector<double>> rows) {
  FeatureMatrix m;
  m.rows = std::move(rows);
  m.terms.resize(m.rows.empty() ? 0 : m.rows[0].size());
  for (std::size_t j = 0; j < m.terms.size(); ++j) {
    m.terms[j] = "t" + std::to_string(j);
  }
  return m;
}

}  // namespace

TEST_CASE("pca_2d recovers an exactly two-dimensional configuration") {
  // Columns are zero-mean and uncorrelated, so the principal axes are the
  // coordinate axes and the projection reproduces the data exactly.
  FeatureMatrix m = matrix({
      {-3.0, 1.0},
      {-1.0, -1.0},
      {1.0, -1.0},
      {3.0, 1.0},
  });
  Projection2D p = pca_2d(m);
  REQUIRE(p.points.size() == 4);
  const double x[] = {-3.0, -1.0, 1.0, 3.0};
  const double y[] = {1.0, -1.0, -1.0, 1.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(p.points[i][0] == Catch::Approx(x[i]).margin(1e-9));
    CHECK(p.points[i][1] == Catch::Approx(y[i]).margin(1e-9));
  }
  CHECK(p.explained_variance[0] == Catch::Approx(20.0 / 3.0).epsilon(1e-12));
  CHECK(p.explained_variance[1] == Catch::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("sign convention follows the dominant feature column") {
  FeatureMatrix m = matrix({
      {-3.0, 1.0},
      {-1.0, -1.0},
      {1.0, -1.0},
      {3.0, 1.0},
  });
  FeatureMatrix flipped = m;
  for (auto& row : flipped.rows) row[0] = -row[0];
  Projection2D p = pca_2d(m);
  Projection2D q = pca_2d(flipped);
  // Mirrored input mirrors the first component; the second is untouched.
  for (int i = 0; i < 4; ++i) {
    CHECK(q.points[i][0] == Catch::Approx(-p.points[i][0]).margin(1e-9));
    CHECK(q.points[i][1] == Catch::Approx(p.points[i][1]).margin(1e-9));
  }
}

TEST_CASE("pca_2d is deterministic across repeated runs") {
  FeatureMatrix m = matrix({
      {0.12, 0.90, 0.41, 0.10},
      {0.55, 0.13, 0.77, 0.20},
      {0.31, 0.44, 0.62, 0.95},
      {0.87, 0.25, 0.08, 0.33},
      {0.46, 0.71, 0.29, 0.58},
  });
  Projection2D a = pca_2d(m);
  Projection2D b = pca_2d(m);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i][0] == b.points[i][0]);
    CHECK(a.points[i][1] == b.points[i][1]);
  }
  CHECK(a.explained_variance[0] == b.explained_variance[0]);
  // Components are ordered by decreasing variance.
  CHECK(a.explained_variance[0] >= a.explained_variance[1]);
}

TEST_CASE("projection preserves centered pairwise distances in rank two") {
  // Any rank-2 configuration embeds isometrically in the 2-D projection.
  FeatureMatrix m = matrix({
      {1.0, 0.0, 1.0},
      {0.0, 1.0, 1.0},
      {-1.0, 0.0, -1.0},
      {0.0, -1.0, -1.0},
  });
  Projection2D p = pca_2d(m);
  auto dist_full = [&](std::size_t i, std::size_t j) {
    double s = 0.0;
    for (std::size_t t = 0; t < 3; ++t) {
      double d = m.rows[i][t] - m.rows[j][t];
      s += d * d;
    }
    return std::sqrt(s);
  };
  auto dist_proj = [&](std::size_t i, std::size_t j) {
    double dx = p.points[i][0] - p.points[j][0];
    double dy = p.points[i][1] - p.points[j][1];
    return std::sqrt(dx * dx + dy * dy);
  };
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      CHECK(dist_proj(i, j) == Catch::Approx(dist_full(i, j)).margin(1e-9));
    }
  }
}

TEST_CASE("rank-one input zeroes the second component") {
  FeatureMatrix m = matrix({
      {0.0, 0.0},
      {1.0, 2.0},
      {2.0, 4.0},
      {3.0, 6.0},
  });
  Projection2D p = pca_2d(m);
  for (const auto& pt : p.points) {
    CHECK(pt[1] == 0.0);
  }
  CHECK(p.explained_variance[0] == Catch::Approx(25.0 / 3.0).epsilon(1e-9));
  CHECK(p.explained_variance[1] == 0.0);
  // The dominant column (the second, with weight 2) orients the axis.
  CHECK(p.points[0][0] < p.points[3][0]);
}

TEST_CASE("degenerate inputs are rejected") {
  FeatureMatrix same = matrix({
      {0.5, 0.5},
      {0.5, 0.5},
      {0.5, 0.5},
  });
  CHECK_THROWS_AS(pca_2d(same), DegenerateRankError);
  FeatureMatrix tiny = matrix({{1.0, 0.0}, {0.0, 1.0}});
  CHECK_THROWS_AS(pca_2d(tiny), InsufficientDataError);
}

TEST_CASE("consecutive_distances walks the projection in order") {
  Projection2D p;
  p.points = {{0.0, 0.0}, {3.0, 4.0}, {3.0, 4.0}, {6.0, 8.0}};
  auto d = consecutive_distances(p);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == Catch::Approx(5.0));
  CHECK(d[1] == Catch::Approx(0.0));
  CHECK(d[2] == Catch::Approx(5.0));
  Projection2D one;
  one.points = {{0.0, 0.0}};
  CHECK_THROWS_AS(consecutive_distances(one), InsufficientDataError);
}
