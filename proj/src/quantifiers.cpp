// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/quantifiers.hpp"

#include <algorithm>
#include <cmath>

#include "antiflat/ordering.hpp"

namespace antiflat {

double capacity(const Spectrum& s) {
  double m1 = 0.0, m2 = 0.0;
  const Eigen::VectorXd& w = s.weights();
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w[i] <= 0.0) continue;
    const double l = std::log(w[i]);
    m1 += w[i] * l;
    m2 += w[i] * l * l;
  }
  return std::max(0.0, m2 - m1 * m1);
}

double linear_renyi_spread(const Spectrum& s) {
  const double z2 = partition_function(s, 2.0);
  const double z3 = partition_function(s, 3.0);
  return std::max(0.0, z3 - z2 * z2);
}

double log_antiflatness(const Spectrum& s) {
  const double z2 = partition_function(s, 2.0);
  const double z3 = partition_function(s, 3.0);
  return std::max(0.0, std::log(z3) - 2.0 * std::log(z2));
}

double gap_measure(const Spectrum& s) {
  if (s.dim() < 2) throw DimTooSmall("gap_measure: need dimension >= 2");
  const Eigen::VectorXd& w = s.weights();
  double acc = 0.0;
  for (Eigen::Index i = 0; i + 1 < w.size(); ++i) {
    const double g = w[i] - w[i + 1];
    acc += g * g;
  }
  return acc / static_cast<double>(w.size() - 1);
}

double weighted_gap_measure(const Spectrum& s, const Spectrum& p) {
  if (s.dim() != p.dim()) throw DimMismatch("weighted_gap_measure: dims differ");
  const Eigen::VectorXd& lam = s.weights();
  const Eigen::VectorXd& q = p.weights();
  const double mean = q.dot(lam);
  double var = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) var += q[i] * lam[i] * lam[i];
  return std::max(0.0, var - mean * mean);
}

Spectrum jump_spectrum(double r, int m, int n, int d) {
  if (m < 1 || n < 1 || m + n > d) throw BadShape("jump_spectrum: need m, n >= 1 and m+n <= d");
  if (r < 0.0 || r > 1.0) throw BadShape("jump_spectrum: r must lie in [0, 1]");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
  w.head(m).setConstant((1.0 - r) / m);
  w.segment(m, n).setConstant(r / n);
  return Spectrum::from_raw(std::move(w));
}

namespace {

double f_on_jump(double r, int d) {
  // jump family with m = 1, n = d-1: F(r) = r(1-r)(dr - d + 1)^2 / (d-1)^2
  const double n = static_cast<double>(d - 1);
  const double a = d * r - d + 1.0;
  return r * (1.0 - r) * a * a / (n * n);
}

double loglam_on_jump(double r, int d) {
  const double n = static_cast<double>(d - 1);
  const double one = 1.0 - r;
  const double z3 = one * one * one + r * r * r / (n * n);
  const double z2 = one * one + r * r / n;
  return std::log(z3) - 2.0 * std::log(z2);
}

double capacity_on_jump(double r, int d) {
  const double n = static_cast<double>(d - 1);
  const double one = 1.0 - r;
  double m1 = 0.0, m2 = 0.0;
  if (one > 0.0) {
    const double l = std::log(one);
    m1 += one * l;
    m2 += one * l * l;
  }
  if (r > 0.0) {
    const double l = std::log(r / n);
    m1 += r * l;
    m2 += r * l * l;
  }
  return m2 - m1 * m1;
}

/// Bracket a maximum of f on [lo, hi] by golden-section search, then refine
/// the critical point by bisection on the sign of df. The derivative polish
/// recovers the ~1e-8 localization barrier inherent to value-only search.
template <typename F, typename DF>
double maximize_1d(F f, DF df, double lo, double hi) {
  constexpr double kGolden = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-12) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  double r = 0.5 * (a + b);
  // derivative-sign bisection around the bracket
  double wl = std::max(lo, r - 1e-6), wr = std::min(hi, r + 1e-6);
  if (df(wl) > 0.0 && df(wr) < 0.0) {
    for (int it = 0; it < 200 && wr - wl > 1e-15; ++it) {
      const double mid = 0.5 * (wl + wr);
      (df(mid) > 0.0 ? wl : wr) = mid;
    }
    r = 0.5 * (wl + wr);
  }
  return r;
}

}  // namespace

Extremum max_linear_spread(int d) {
  if (d < 2) throw DimTooSmall("max_linear_spread: need d >= 2");
  const double dd = d;
  const double root = std::sqrt(4.0 - 4.0 * dd + 9.0 * dd * dd);
  const double r = (5.0 * dd - 2.0 - root) / (8.0 * dd);
  return {r, f_on_jump(r, d)};
}

Extremum max_log_antiflatness(int d) {
  if (d < 2) throw DimTooSmall("max_log_antiflatness: need d >= 2");
  double r = 0.5;
  switch (d) {
    case 2:
      r = (3.0 - std::sqrt(3.0)) / 6.0;
      break;
    case 3:
      r = 2.0 - std::sqrt(6.0) * std::sin(std::atan(1.0 / (2.0 * std::sqrt(2.0))) / 3.0) -
          std::sqrt(2.0) * std::cos(std::atan(1.0 / (2.0 * std::sqrt(2.0))) / 3.0);
      break;
    case 4:
      r = 1.5 - 1.5 * std::sin(M_PI / 18.0) - 0.5 * std::sqrt(3.0) * std::cos(M_PI / 18.0);
      break;
    case 5:
      r = 4.0 / 3.0 - 2.0 * std::sin(std::atan(0.75) / 3.0) / std::sqrt(3.0) -
          2.0 / 3.0 * std::cos(std::atan(0.75) / 3.0);
      break;
    case 6:
      r = 1.25 - 0.25 * std::sqrt(15.0) * std::sin(std::atan(2.0 / std::sqrt(5.0)) / 3.0) -
          0.25 * std::sqrt(5.0) * std::cos(std::atan(2.0 / std::sqrt(5.0)) / 3.0);
      break;
    default:
      r = 0.5;
      break;
  }
  return {r, loglam_on_jump(r, d)};
}

Extremum max_capacity(int d) {
  if (d < 2) throw DimTooSmall("max_capacity: need d >= 2");
  // bracket sanity: the family is flat (capacity 0) at r = (d-1)/d, outside
  // the search interval, and 0 again at the pure endpoint r = 0
  auto value = [d](double r) { return capacity_on_jump(r, d); };
  auto deriv = [d](double r) {
    const double h = 1e-7;
    return (capacity_on_jump(r + h, d) - capacity_on_jump(r - h, d)) / (2.0 * h);
  };
  const double r = maximize_1d(value, deriv, 1e-12, 0.5);
  if (!std::isfinite(r)) throw NoConvergence("max_capacity: search failed");
  return {r, value(r)};
}

BoundChain bound_chain(const Spectrum& s) {
  const double rank = static_cast<double>(s.rank());
  const double spread = renyi_spread(s, RenyiIndex::zero(), RenyiIndex::infinity());
  const double cap = std::pow(std::exp(spread) / 2.0, 2.0);
  return {log_antiflatness(s), rank * rank * linear_renyi_spread(s), cap};
}

std::vector<ParetoPoint> pareto_scan(int d, const std::vector<double>& r_grid,
                                     const RenyiGrid& grid) {
  const double r_hi = static_cast<double>(d - 1) / d;
  std::vector<Spectrum> family;
  std::vector<ParetoPoint> out;
  family.reserve(r_grid.size());
  for (double r : r_grid) {
    if (r < 0.0 || r > r_hi + 1e-12) throw BadShape("pareto_scan: r outside [0, (d-1)/d]");
    Spectrum s = jump_spectrum(r, 1, d - 1, d);
    out.push_back({r, linear_renyi_spread(s), log_antiflatness(s), capacity(s), false});
    family.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size() && !out[i].dominated; ++j) {
      if (i == j) continue;
      out[i].dominated = af_strictly_dominates(family[j], family[i], grid);
    }
  }
  return out;
}

}  // namespace antiflat
