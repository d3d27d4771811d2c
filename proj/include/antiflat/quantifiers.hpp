// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <vector>

#include "antiflat/spectrum.hpp"

namespace antiflat {

/// Variance of the surprisal -log w over the spectrum (nats^2); zero exactly
/// on flat spectra.
double capacity(const Spectrum& s);

/// Z_3 - Z_2^2, the variance of the spectrum sampled by itself.
double linear_renyi_spread(const Spectrum& s);

/// log(Z_3 / Z_2^2) = 2 (S_2 - S_3).
double log_antiflatness(const Spectrum& s);

/// Mean squared adjacent gap of the descending weights. Not faithful:
/// vanishes on full-rank flat spectra only.
double gap_measure(const Spectrum& s);

/// Var_p(lambda) = sum_{i<j} p_i p_j (lambda_i - lambda_j)^2, with lambda
/// the weights of `s`. Equals linear_renyi_spread(s) when p = s.
double weighted_gap_measure(const Spectrum& s, const Spectrum& p);

/// (1-r)/m repeated m times, then r/n repeated n times, zero-padded to d.
Spectrum jump_spectrum(double r, int m, int n, int d);

struct Extremum {
  double r_max;
  double value;
};

/// Closed-form maximizer of the linear Renyi spread over dimension-d
/// spectra; attained on the jump family with m = 1, n = d-1.
Extremum max_linear_spread(int d);

/// Branch maximizer of the logarithmic antiflatness over jump spectra with
/// r in [0, 1/2]: closed trigonometric forms for d <= 6, r = 1/2 from d = 7
/// on, always below log 2. Note the restriction is active from d = 7: the
/// unrestricted family peaks at r > 1/2 with a strictly larger value there
/// (scan the family directly if the unrestricted supremum is wanted).
Extremum max_log_antiflatness(int d);

/// Numeric maximizer of the capacity over the jump family (golden-section
/// bracket on r in [0, 1/2] refined by bisection on the derivative sign).
Extremum max_capacity(int d);

struct BoundChain {
  double log_lambda;  // log(Lambda)
  double mid;         // rank^2 * F
  double cap;         // (e^{spread(0,inf)} / 2)^2
};

/// logΛ <= rank^2 F <= (e^{Δ(0,inf)}/2)^2. Both the spread and the middle
/// factor use the support convention (rank, not ambient dimension), which
/// keeps the chain valid for rank-deficient spectra.
BoundChain bound_chain(const Spectrum& s);

struct ParetoPoint {
  double r;
  double f;
  double log_lambda;
  double v;
  bool dominated;
};

/// Quantifier triples along the jump family, with a grid-dominance flag:
/// a point is dominated when another grid point strictly antiflat-majorizes
/// it (profile non-increasing within 1e-9 with total decrease above 1e-9).
std::vector<ParetoPoint> pareto_scan(int d, const std::vector<double>& r_grid,
                                     const RenyiGrid& grid);

}  // namespace antiflat
