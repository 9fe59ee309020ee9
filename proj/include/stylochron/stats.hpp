#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "stylochron/errors.hpp"

namespace stylochron {

namespace stats_detail {

// Continued fraction for the regularized incomplete beta, evaluated with the
// modified Lentz algorithm.
inline double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-16;
  constexpr double kTiny = 1e-300;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw ConvergenceError("incomplete beta continued fraction did not converge");
}

}  // namespace stats_detail

// Regularized incomplete beta I_x(a, b).
inline double reg_inc_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("reg_inc_beta requires a, b > 0");
  if (x < 0.0 || x > 1.0) throw DomainError("reg_inc_beta requires x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                     a * std::log(x) + b * std::log1p(-x);
  double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * stats_detail::beta_cf(a, b, x) / a;
  }
  return 1.0 - front * stats_detail::beta_cf(b, a, 1.0 - x) / b;
}

// Survival function P(T > t) of Student's t with df degrees of freedom.
inline double t_survival(double t, double df) {
  if (!(df > 0.0)) throw DomainError("t_survival requires df > 0");
  double x = df / (df + t * t);
  double half_tail = 0.5 * reg_inc_beta(0.5 * df, 0.5, x);
  return t >= 0.0 ? half_tail : 1.0 - half_tail;
}

struct CorrelationResult {
  double r = 0.0;
  std::int64_t n = 0;
  double p_one_tailed = 0.0;
};

// One-tailed significance of a positive association: P(T_{n-2} > t(r)).
inline double pearson_p_one_tailed(double r, std::int64_t n) {
  if (n < 3) throw InsufficientDataError("p-value needs n >= 3");
  if (r >= 1.0) return 0.0;
  if (r <= -1.0) return 1.0;
  double df = static_cast<double>(n - 2);
  double t = r * std::sqrt(df / (1.0 - r * r));
  return t_survival(t, df);
}

inline CorrelationResult pearson(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw InsufficientDataError("pearson requires equally long series");
  }
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  if (n < 3) throw InsufficientDataError("pearson needs n >= 3 pairs");
  double mx = 0.0, my = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DegenerateInputError("pearson requires nonzero variance in both series");
  }
  CorrelationResult result;
  result.n = n;
  result.r = sxy / std::sqrt(sxx * syy);
  if (result.r > 1.0) result.r = 1.0;
  if (result.r < -1.0) result.r = -1.0;
  result.p_one_tailed = pearson_p_one_tailed(result.r, n);
  return result;
}

}  // namespace stylochron
