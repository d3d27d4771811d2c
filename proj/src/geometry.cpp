// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace antiflat {

namespace {

double weight_at(const Spectrum& s, Eigen::Index i) { return i < s.dim() ? s[i] : 0.0; }

}  // namespace

double kl_divergence(const Spectrum& p, const Spectrum& q) {
  const Eigen::Index n = std::max(p.dim(), q.dim());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double pi = weight_at(p, i);
    if (pi <= 0.0) continue;
    const double qi = weight_at(q, i);
    if (qi <= 0.0) throw SupportMismatch("kl_divergence: support(p) not within support(q)");
    acc += pi * std::log(pi / qi);
  }
  return std::max(0.0, acc);
}

double bregman(BregmanGenerator gen, const Spectrum& p, const Spectrum& q) {
  switch (gen) {
    case BregmanGenerator::NegShannonEntropy: {
      // F(p) - F(q) - <grad F(q), p - q> collapses to KL on the simplex
      return kl_divergence(p, q);
    }
    case BregmanGenerator::SecondMoment: {
      const Eigen::Index n = std::max(p.dim(), q.dim());
      double acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double d = weight_at(p, i) - weight_at(q, i);
        acc += d * d;
      }
      return acc;
    }
  }
  throw Error("bregman: unreachable");
}

double escort_curvature_capacity(const Spectrum& s, double eps) {
  if (!(eps > 0.0) || eps > 0.1)
    throw Error("escort_curvature_capacity: eps must lie in (0, 0.1]");
  if (s.rank() != s.dim())
    throw ZeroWeight("escort_curvature_capacity: spectrum must have full support");
  return 2.0 / (eps * eps) * kl_divergence(s, escort(s, 1.0 + eps));
}

double euclidean_spread_identity(const Spectrum& s) {
  const double z2 = partition_function(s, 2.0);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    const double d = s[i] - z2;
    acc += s[i] * d * d;
  }
  return acc;
}

double cov_unification(const Spectrum& s) {
  const double z2 = partition_function(s, 2.0);
  const double z3 = partition_function(s, 3.0);
  return std::log1p(std::max(0.0, z3 - z2 * z2) / (z2 * z2));
}

}  // namespace antiflat
