// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstddef>
#include <optional>

#include "antiflat/random.hpp"
#include "antiflat/spectrum.hpp"

namespace antiflat {

/// Tolerance on profile monotonicity: a decrease smaller than this counts as
/// non-increasing, so verdicts do not flap on entropy round-off.
inline constexpr double kOrderTol = 1e-9;

enum class Relation { FirstDominates, SecondDominates, Equivalent, Incomparable };

/// Diagnostic attached to an Incomparable verdict.
///
/// Antiflat comparisons: (i, j) are grid positions with i < j and
/// lhs = G(alpha_i), rhs = G(alpha_j) the reversed profile values.
/// Standard majorization: i and j are the 1-based prefix lengths where each
/// direction of the cumulative-sum comparison first fails, and lhs/rhs are
/// the partial sums of the two spectra at prefix i.
struct OrderWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct OrderVerdict {
  Relation relation;
  std::optional<OrderWitness> witness;  // present iff Incomparable
};

const char* relation_name(Relation r);

/// Cumulative-sum comparison of descending spectra (padded to a common
/// length), tolerance 1e-10. FirstDominates means `a` majorizes `b`.
OrderVerdict standard_majorizes(const Spectrum& a, const Spectrum& b);

/// Grid antiflat-majorization test via monotonicity of the relative profile:
/// SecondDominates iff G_{sigma|rho} is non-increasing within 1e-9 (running-
/// minimum scan), FirstDominates symmetric, Equivalent when both hold.
/// The Incomparable witness is the lexicographically smallest grid pair
/// (i, j) with G_j > G_i + tol.
OrderVerdict af_compare(const Spectrum& rho, const Spectrum& sigma, const RenyiGrid& grid);

/// O(N^2) oracle: every spread pair Delta_{ij} compared directly.
OrderVerdict af_compare_pairwise(const Spectrum& rho, const Spectrum& sigma,
                                 const RenyiGrid& grid);

/// True when sigma antiflat-majorizes rho strictly on the grid: the profile
/// is non-increasing within 1e-9 and decreases in total by more than 1e-9.
bool af_strictly_dominates(const Spectrum& sigma, const Spectrum& rho, const RenyiGrid& grid);

/// Random spectrum with Tr rho^2 = P, built by moving a uniform-simplex draw
/// along the segment through the flat point until the purity sphere is hit;
/// draws leaving the simplex are rejected and retried.
Spectrum iso_purity_sample(int d, double purity, RandomStream& rng);

/// Checks the rank-obstruction implication for one pair: equal purity, equal
/// rank and grid comparability force equal spectra within tol.
bool rank_obstruction_check(const Spectrum& rho, const Spectrum& sigma, const RenyiGrid& grid,
                            double tol);

/// For same-purity pairs with rho antiflat-majorized by sigma: the Renyi
/// curves must cross in an ordered way at alpha = 2 (sigma above below 2,
/// below above 2). Throws PreconditionUnmet otherwise.
bool anchored_crossing_check(const Spectrum& rho, const Spectrum& sigma, const RenyiGrid& grid);

/// Membership of the binary spectrum (x, 1-x) in the grid accessible set of
/// the binary target (r, 1-r): does (x, 1-x) antiflat-majorize the target?
bool af_accessible_membership_binary(double x, double r, const RenyiGrid& grid);

/// I_z(a, b) by Lentz continued fraction with the symmetry split at
/// z = (a+1)/(a+b+2); 1e-10 relative accuracy.
double regularized_incomplete_beta(double z, double a, double b);

/// Probability that the larger eigenvalue of a Haar(2, K) reduced state lies
/// in [lambda_lo, lambda_hi] within [1/2, 1]:
/// I_{4 lo (1-lo)}(K-1, 3/2) - I_{4 hi (1-hi)}(K-1, 3/2).
double accessible_interval_probability(double lambda_lo, double lambda_hi, int big_k);

/// Haar probability of antiflat-majorizing the binary target (r, 1-r):
/// 1 for flat targets (r = 1/2 or 1), 0 otherwise. K is the environment
/// dimension; the value is independent of it.
double af_target_probability_binary(double r, int big_k);

}  // namespace antiflat
