// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "antiflat/clifford.hpp"
#include "antiflat/random.hpp"
#include "antiflat/states.hpp"

namespace antiflat {

struct MCEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

enum class Functional { F, LogL, V, Elin, Purity };

struct HaarSpec {
  int d_a, d_b;
};
struct BuresHallSpec {
  int d_a, d_b;
};
struct CliffordDopedSpec {
  int n;
  int k;
  double theta;
  int cut = -1;  // -1: contiguous first half, n/2
};
using EnsembleSpec = std::variant<HaarSpec, BuresHallSpec, CliffordDopedSpec>;

/// Haar-random bipartite pure state: i.i.d. complex Gaussians, normalized.
BipartitePureState haar_pure(int d_a, int d_b, RandomStream& rng);

/// Unnormalized joint eigenvalue density of the reduced state of a Haar
/// state: prod (l_j - l_i)^2 * prod l_i^{d_b - d_a}. Requires d_a <= d_b.
double lloyd_pagels_density(const Eigen::VectorXd& lambda, int d_a, int d_b);

/// Schmidt weight lambda in [0, 1] under the binary Bures-Hall marginal
/// 2 (1-2l)^2 / (pi sqrt(l (1-l))), drawn by exact rejection from the
/// arcsine proposal (acceptance probability (2l-1)^2).
double bures_hall_sample_binary(RandomStream& rng);

/// Metropolis chain on the Bures-Hall joint eigenvalue density
/// prod (li - lj)^2 / (li + lj) * prod li^(d_b - d_a - 1/2) on the simplex.
/// Proposal: sign-symmetrized Dirichlet displacement, which keeps the walk
/// exactly on the simplex.
class BuresHallChain {
 public:
  BuresHallChain(int d_a, int d_b, RandomStream rng, int burn_in = 10000, int thin = 10);
  Spectrum next();
  double log_density(const Eigen::VectorXd& lambda) const;
  double acceptance_rate() const;

 private:
  void step();
  int d_a_, d_b_;
  double alpha_;
  RandomStream rng_;
  int thin_;
  Eigen::VectorXd state_;
  double log_pi_;
  std::int64_t proposed_ = 0, accepted_ = 0;
};

/// One draw after a fresh burn-in (a convenience wrapper; estimation loops
/// should keep a BuresHallChain).
Spectrum bures_hall_sample_general(int d_a, int d_b, RandomStream& rng, int burn_in = 10000,
                                   int thin = 10);

/// Uniformly random n-qubit Clifford element, 1 <= n <= 12.
CliffordTableau random_clifford(int n, RandomStream& rng);

/// State of a k-doped Clifford circuit on |0...0>: k alternating layers of
/// a uniform Clifford and one diag(1, e^{i theta}) gate on a uniformly
/// chosen qubit, after an initial uniform Clifford.
BipartitePureState doped_state(int n, int k, double theta, RandomStream& rng, int cut = -1);

/// Monte Carlo mean with standard error. Work is partitioned over 64 fixed
/// blocks with streams split from the seed and reduced in block order, so
/// the estimate is bit-identical for every thread count.
MCEstimate mc_estimate(const EnsembleSpec& spec, Functional functional, std::int64_t n,
                       std::uint64_t seed, int threads = 1);

// Closed-form ensemble averages.
double haar_mean_purity(int d_a, int d_b);
double haar_mean_cube(int d_a, int d_b);
double haar_mean_F(int d_a, int d_b);
double haar_var_F(int d_a, int d_b);
/// Bures-Hall mean of F at d_a = d_b = sqrt(d); d must be a perfect square.
double bures_mean_F(int d);
/// k-doped Clifford mean of F at d = 4^m with the half cut.
double clifford_mean_F(int d, int k, double theta);

// Two-qubit densities of F (support (0, 1/16)) and of log2(Lambda)
// (support (0, log2(9/8))). The log-Lambda closed form is evaluated with
// complex square roots and modulus-valued absolute values; it agrees with
// the direct change-of-variables construction.
double pdf_F_haar_binary(double f);
double pdf_F_bures_binary(double f);
double pdf_logl_haar_binary(double x);

// Exact CDFs used for bin-averaged histogram comparisons.
double cdf_F_haar_binary(double f);
double cdf_F_bures_binary(double f);

struct DensityTable {
  std::vector<double> value;
  std::vector<double> density;
  std::vector<std::uint8_t> excluded;  // bins straddling a critical point
};

/// Push a base density on [0, 1] through a piecewise monotone map with known
/// derivative: density(v) = sum over preimages of base(l) / |map'(l)|.
/// Monotone segments are located from derivative sign changes on a fine
/// mesh; targets whose preimages sit at a derivative zero are excluded.
/// A map with a flat segment is refused (DerivativeZero).
DensityTable mapped_pdf(const std::function<double(double)>& base_density,
                        const std::function<double(double)>& map,
                        const std::function<double(double)>& map_derivative,
                        const std::vector<double>& targets);

}  // namespace antiflat
