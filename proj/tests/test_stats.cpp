#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/stats.hpp"

using namespace stylochron;

namespace {

// Student t density, used to cross-check the survival function by quadrature.
double t_pdf(double t, double df) {
  double log_c = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                 0.5 * std::log(df * M_PI);
  return std::exp(log_c - 0.5 * (df + 1.0) * std::log1p(t * t / df));
}

double t_survival_trapezoid(double t, double df) {
  const double hi = 400.0;
  const int steps = 400000;
  double h = (hi - t) / steps;
  double sum = 0.5 * (t_pdf(t, df) + t_pdf(hi, df));
  for (int i = 1; i < steps; ++i) sum += t_pdf(t + i * h, df);
  return sum * h;
}

}  // namespace

TEST_CASE("reg_inc_beta matches closed forms") {
  CHECK(reg_inc_beta(1.0, 4.0, 0.25) ==
        Catch::Approx(1.0 - std::pow(0.75, 4)).epsilon(1e-12));
  CHECK(reg_inc_beta(2.0, 1.0, 0.3) == Catch::Approx(0.09).epsilon(1e-12));
  CHECK(reg_inc_beta(2.0, 3.0, 0.5) == Catch::Approx(0.6875).epsilon(1e-12));
  CHECK(reg_inc_beta(3.0, 3.0, 0.0) == 0.0);
  CHECK(reg_inc_beta(3.0, 3.0, 1.0) == 1.0);
  // Symmetry: I_x(a,b) = 1 - I_{1-x}(b,a).
  for (double x : {0.1, 0.35, 0.62, 0.9}) {
    CHECK(reg_inc_beta(2.5, 4.5, x) ==
          Catch::Approx(1.0 - reg_inc_beta(4.5, 2.5, 1.0 - x)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(reg_inc_beta(0.0, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(reg_inc_beta(1.0, 1.0, 1.5), DomainError);
}

TEST_CASE("t_survival matches closed forms for small df") {
  CHECK(t_survival(0.0, 7.0) == Catch::Approx(0.5).epsilon(1e-12));
  // df = 1 is Cauchy: P(T > t) = 1/2 - atan(t)/pi.
  CHECK(t_survival(1.0, 1.0) == Catch::Approx(0.25).epsilon(1e-12));
  CHECK(t_survival(3.0, 1.0) ==
        Catch::Approx(0.5 - std::atan(3.0) / M_PI).epsilon(1e-12));
  // df = 2: P(T > t) = (1 - t/sqrt(2 + t^2)) / 2.
  CHECK(t_survival(1.0, 2.0) ==
        Catch::Approx(0.5 * (1.0 - 1.0 / std::sqrt(3.0))).epsilon(1e-12));
  // Symmetry around zero.
  CHECK(t_survival(-1.7, 9.0) ==
        Catch::Approx(1.0 - t_survival(1.7, 9.0)).epsilon(1e-12));
}

TEST_CASE("t_survival agrees with trapezoid quadrature") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> t_dist(-3.0, 4.0);
  std::uniform_int_distribution<int> df_dist(2, 30);
  for (int i = 0; i < 20; ++i) {
    double t = t_dist(rng);
    double df = df_dist(rng);
    double q = t >= 0.0 ? t_survival_trapezoid(t, df)
                        : 1.0 - t_survival_trapezoid(-t, df);
    CHECK(t_survival(t, df) == Catch::Approx(q).margin(1e-6));
  }
}

TEST_CASE("pearson_p_one_tailed reproduces reference significance levels") {
  CHECK(pearson_p_one_tailed(0.946, 5) ==
        Catch::Approx(0.007470421561702752).epsilon(1e-10));
  CHECK(pearson_p_one_tailed(0.579, 7) ==
        Catch::Approx(0.08658329562044845).epsilon(1e-10));
  CHECK(pearson_p_one_tailed(0.9, 10) ==
        Catch::Approx(0.00019357812499999977).epsilon(1e-9));
  CHECK(pearson_p_one_tailed(-0.5, 8) ==
        Catch::Approx(0.8964843749999998).epsilon(1e-10));
  CHECK(pearson_p_one_tailed(0.0, 12) == Catch::Approx(0.5).epsilon(1e-12));
  CHECK(pearson_p_one_tailed(1.0, 5) == 0.0);
  CHECK(pearson_p_one_tailed(-1.0, 5) == 1.0);
  CHECK_THROWS_AS(pearson_p_one_tailed(0.5, 2), InsufficientDataError);
}

TEST_CASE("pearson computes r and its one-tailed p") {
  std::vector<double> x{1, 2, 3, 4, 5};
  std::vector<double> y{2, 4, 5, 4, 5};
  CorrelationResult c = pearson(x, y);
  CHECK(c.n == 5);
  CHECK(c.r == Catch::Approx(6.0 / std::sqrt(60.0)).epsilon(1e-12));
  CHECK(c.p_one_tailed == Catch::Approx(0.06201353132877729).epsilon(1e-10));

  // Perfect correlation clamps instead of dividing by zero.
  std::vector<double> z{2, 4, 6, 8, 10};
  c = pearson(x, z);
  CHECK(c.r == 1.0);
  CHECK(c.p_one_tailed == 0.0);

  CHECK_THROWS_AS(pearson({1, 2}, {3, 4}), InsufficientDataError);
  CHECK_THROWS_AS(pearson({1, 2, 3}, {3, 4}), InsufficientDataError);
  CHECK_THROWS_AS(pearson({1, 1, 1}, {1, 2, 3}), DegenerateInputError);
}
