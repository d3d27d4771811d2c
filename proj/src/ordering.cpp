// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/ordering.hpp"

#include <algorithm>
#include <cmath>

namespace antiflat {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::FirstDominates:
      return "FirstDominates";
    case Relation::SecondDominates:
      return "SecondDominates";
    case Relation::Equivalent:
      return "Equivalent";
    case Relation::Incomparable:
      return "Incomparable";
  }
  return "";
}

namespace {

constexpr double kMajorizationTol = 1e-10;

/// First grid pair (i, j), i < j, violating G_j <= G_i + tol, if any.
std::optional<OrderWitness> first_increase(const Eigen::VectorXd& g, double tol) {
  for (Eigen::Index i = 0; i + 1 < g.size(); ++i)
    for (Eigen::Index j = i + 1; j < g.size(); ++j)
      if (g[j] > g[i] + tol)
        return OrderWitness{static_cast<std::size_t>(i), static_cast<std::size_t>(j), g[i], g[j]};
  return std::nullopt;
}

bool non_increasing(const Eigen::VectorXd& g, double tol) {
  double running_min = g[0];
  for (Eigen::Index i = 1; i < g.size(); ++i) {
    if (g[i] > running_min + tol) return false;
    running_min = std::min(running_min, g[i]);
  }
  return true;
}

OrderVerdict verdict_from_profile(const Eigen::VectorXd& g, double tol) {
  const bool second = non_increasing(g, tol);               // rho <=AF sigma
  const bool first = non_increasing((-g).eval(), tol);      // sigma <=AF rho
  if (first && second) return {Relation::Equivalent, std::nullopt};
  if (second) return {Relation::SecondDominates, std::nullopt};
  if (first) return {Relation::FirstDominates, std::nullopt};
  return {Relation::Incomparable, first_increase(g, tol)};
}

double purity_of(const Spectrum& s) { return partition_function(s, 2.0); }

}  // namespace

OrderVerdict standard_majorizes(const Spectrum& a, const Spectrum& b) {
  const Eigen::Index n = std::max(a.dim(), b.dim());
  double ca = 0.0, cb = 0.0;
  bool a_ge = true, b_ge = true;
  std::size_t a_fail = 0, b_fail = 0;  // 1-based prefix of first failure
  double fail_lhs = 0.0, fail_rhs = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    ca += k < a.dim() ? a[k] : 0.0;
    cb += k < b.dim() ? b[k] : 0.0;
    if (a_ge && ca < cb - kMajorizationTol) {
      a_ge = false;
      b_fail = static_cast<std::size_t>(k) + 1;
    }
    if (b_ge && cb < ca - kMajorizationTol) {
      b_ge = false;
      a_fail = static_cast<std::size_t>(k) + 1;
      fail_lhs = ca;
      fail_rhs = cb;
    }
  }
  if (a_ge && b_ge) return {Relation::Equivalent, std::nullopt};
  if (a_ge) return {Relation::FirstDominates, std::nullopt};
  if (b_ge) return {Relation::SecondDominates, std::nullopt};
  return {Relation::Incomparable, OrderWitness{a_fail, b_fail, fail_lhs, fail_rhs}};
}

OrderVerdict af_compare(const Spectrum& rho, const Spectrum& sigma, const RenyiGrid& grid) {
  return verdict_from_profile(g_profile(sigma, rho, grid).values, kOrderTol);
}

OrderVerdict af_compare_pairwise(const Spectrum& rho, const Spectrum& sigma,
                                 const RenyiGrid& grid) {
  const Eigen::Index n = static_cast<Eigen::Index>(grid.size());
  Eigen::VectorXd s_rho(n), s_sigma(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    s_rho[i] = renyi_entropy(rho, grid[static_cast<std::size_t>(i)]);
    s_sigma[i] = renyi_entropy(sigma, grid[static_cast<std::size_t>(i)]);
  }
  bool second = true, first = true;  // second: Delta(rho) <= Delta(sigma) all pairs
  std::optional<OrderWitness> witness;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d_rho = s_rho[i] - s_rho[j];
      const double d_sigma = s_sigma[i] - s_sigma[j];
      if (d_rho > d_sigma + kOrderTol) {
        second = false;
        if (!witness)
          witness = OrderWitness{static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                 s_sigma[i] - s_rho[i], s_sigma[j] - s_rho[j]};
      }
      if (d_sigma > d_rho + kOrderTol) first = false;
    }
  }
  if (first && second) return {Relation::Equivalent, std::nullopt};
  if (second) return {Relation::SecondDominates, std::nullopt};
  if (first) return {Relation::FirstDominates, std::nullopt};
  return {Relation::Incomparable, witness};
}

bool af_strictly_dominates(const Spectrum& sigma, const Spectrum& rho, const RenyiGrid& grid) {
  const Eigen::VectorXd g = g_profile(sigma, rho, grid).values;
  if (!non_increasing(g, kOrderTol)) return false;
  return g[0] - g[g.size() - 1] > kOrderTol;
}

Spectrum iso_purity_sample(int d, double purity, RandomStream& rng) {
  if (d < 1) throw BadDims("iso_purity_sample: d must be >= 1");
  const double lo = 1.0 / d;
  if (purity < lo - 1e-12 || purity > 1.0 + 1e-12)
    throw InfeasiblePurity("iso_purity_sample: purity outside [1/d, 1]");
  if (std::abs(purity - 1.0) <= 1e-12) return Spectrum::pure(d);
  if (std::abs(purity - lo) <= 1e-12) return Spectrum::flat(d, d);

  const double u = 1.0 / d;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    // uniform simplex draw
    Eigen::VectorXd lam(d);
    double sum = 0.0;
    for (int i = 0; i < d; ++i) {
      double x = rng.uniform01();
      while (x == 0.0) x = rng.uniform01();
      lam[i] = -std::log(x);
      sum += lam[i];
    }
    lam /= sum;
    // purity along the segment x(t) = u + t (lam - u) is 1/d + t^2 |lam - u|^2
    const double d2 = (lam.array() - u).square().sum();
    if (d2 <= 0.0) continue;
    const double t = std::sqrt((purity - lo) / d2);
    Eigen::VectorXd x = (1.0 - t) * Eigen::VectorXd::Constant(d, u) + t * lam;
    if ((x.array() >= 0.0).all()) return Spectrum::from_raw(std::move(x));
  }
  // extremely eccentric purity: fall back to the jump spectrum with that
  // purity, which always exists
  const double dd = d;
  const double disc = 1.0 - dd * (1.0 - purity) / (dd - 1.0);
  const double r = (dd - 1.0) / dd * (1.0 - std::sqrt(std::max(0.0, disc)));
  Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
  w[0] = 1.0 - r;
  w.tail(d - 1).setConstant(r / (dd - 1.0));
  return Spectrum::from_raw(std::move(w));
}

bool rank_obstruction_check(const Spectrum& rho, const Spectrum& sigma, const RenyiGrid& grid,
                            double tol) {
  const bool same_purity = std::abs(purity_of(rho) - purity_of(sigma)) <= 1e-9;
  const bool same_rank = rho.rank() == sigma.rank();
  const Relation rel = af_compare(rho, sigma, grid).relation;
  const bool comparable = rel != Relation::Incomparable;
  if (!(same_purity && same_rank && comparable)) return true;  // vacuous
  if (rho.dim() != sigma.dim()) return false;
  return (rho.weights() - sigma.weights()).cwiseAbs().maxCoeff() <= tol;
}

bool anchored_crossing_check(const Spectrum& rho, const Spectrum& sigma, const RenyiGrid& grid) {
  if (std::abs(purity_of(rho) - purity_of(sigma)) > 1e-9)
    throw PreconditionUnmet("anchored_crossing_check: purities differ");
  const Relation rel = af_compare(rho, sigma, grid).relation;
  if (rel != Relation::SecondDominates && rel != Relation::Equivalent)
    throw PreconditionUnmet("anchored_crossing_check: rho is not antiflat-majorized by sigma");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = grid[i].order_value();
    const double gap = renyi_entropy(sigma, grid[i]) - renyi_entropy(rho, grid[i]);
    if (a < 2.0 && gap < -kOrderTol) return false;
    if (a > 2.0 && gap > kOrderTol) return false;
  }
  return true;
}

bool af_accessible_membership_binary(double x, double r, const RenyiGrid& grid) {
  if (x < 0.5 || x > 1.0 || r < 0.5 || r > 1.0)
    throw BadInterval("af_accessible_membership_binary: x, r must lie in [1/2, 1]");
  const Spectrum target = Spectrum::from_raw({r, 1.0 - r});
  const Spectrum sample = Spectrum::from_raw({x, 1.0 - x});
  const Relation rel = af_compare(target, sample, grid).relation;
  return rel == Relation::SecondDominates || rel == Relation::Equivalent;
}

double regularized_incomplete_beta(double z, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw BadInterval("incomplete beta: a, b must be positive");
  if (z < 0.0 || z > 1.0) throw BadInterval("incomplete beta: z must lie in [0, 1]");
  if (z == 0.0) return 0.0;
  if (z == 1.0) return 1.0;
  if (z > (a + 1.0) / (a + b + 2.0)) return 1.0 - regularized_incomplete_beta(1.0 - z, b, a);

  const double front =
      std::exp(a * std::log(z) + b * std::log1p(-z) + std::lgamma(a + b) - std::lgamma(a) -
               std::lgamma(b));
  // Lentz's algorithm on the standard continued fraction
  constexpr double kTiny = 1e-300;
  double c = 1.0;
  double d = 1.0 - (a + b) * z / (a + 1.0);
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    const double m2 = 2.0 * m;
    double num = m * (b - m) * z / ((a + m2 - 1.0) * (a + m2));
    d = 1.0 + num * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + num / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    num = -(a + m) * (a + b + m) * z / ((a + m2) * (a + m2 + 1.0));
    d = 1.0 + num * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + num / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-14) return front * h / a;
  }
  throw NoConvergence("incomplete beta: continued fraction did not converge");
}

double accessible_interval_probability(double lambda_lo, double lambda_hi, int big_k) {
  if (big_k < 2) throw BadDims("accessible_interval_probability: K must be >= 2");
  if (!(0.5 <= lambda_lo && lambda_lo <= lambda_hi && lambda_hi <= 1.0))
    throw BadInterval("accessible_interval_probability: need 1/2 <= lo <= hi <= 1");
  const double z_lo = 4.0 * lambda_lo * (1.0 - lambda_lo);
  const double z_hi = 4.0 * lambda_hi * (1.0 - lambda_hi);
  const double a = static_cast<double>(big_k - 1);
  const double p = regularized_incomplete_beta(z_lo, a, 1.5) -
                   regularized_incomplete_beta(z_hi, a, 1.5);
  return std::clamp(p, 0.0, 1.0);
}

double af_target_probability_binary(double r, int big_k) {
  if (big_k < 2) throw BadDims("af_target_probability_binary: K must be >= 2");
  if (r < 0.5 || r > 1.0)
    throw BadInterval("af_target_probability_binary: r must lie in [1/2, 1]");
  return (r == 0.5 || r == 1.0) ? 1.0 : 0.0;
}

}  // namespace antiflat
