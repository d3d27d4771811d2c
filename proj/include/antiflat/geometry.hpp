// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include "antiflat/spectrum.hpp"

namespace antiflat {

/// Closed set of Bregman generating functions; the two that matter here.
enum class BregmanGenerator {
  NegShannonEntropy,  // F(p) = sum p log p; divergence is Kullback-Leibler
  SecondMoment,       // F(p) = sum p^2;     divergence is squared Euclidean
};

/// sum p_i log(p_i / q_i) over the support of p (0 log 0 = 0). Requires
/// support(p) within support(q), index-wise on the descending weights.
double kl_divergence(const Spectrum& p, const Spectrum& q);

double bregman(BregmanGenerator gen, const Spectrum& p, const Spectrum& q);

/// 2/eps^2 * KL(p || escort(p, 1+eps)); approaches capacity(p) as eps -> 0
/// with first-order error. Requires a strictly positive spectrum.
double escort_curvature_capacity(const Spectrum& s, double eps);

/// sum p (p - Z_2)^2, the mean Euclidean divergence of a weight from the
/// purity; equals linear_renyi_spread(s).
double euclidean_spread_identity(const Spectrum& s);

/// log(1 + F / Z_2^2), the squared-coefficient-of-variation form of the
/// logarithmic antiflatness.
double cov_unification(const Spectrum& s);

}  // namespace antiflat
