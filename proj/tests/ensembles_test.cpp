// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/ensembles.hpp"

#include <doctest.h>

#include <cmath>

#include "antiflat/quantifiers.hpp"
#include "test_support.hpp"

using namespace antiflat;
using testing::tanh_sinh_integrate;

TEST_CASE("haar sampler invariants") {
  RandomStream rng(71);
  // mean purity against the closed form, 3 standard errors
  const MCEstimate purity =
      mc_estimate(HaarSpec{2, 3}, Functional::Purity, 100000, 7);
  CHECK(std::abs(purity.mean - haar_mean_purity(2, 3)) < 3.0 * purity.stderr_);

  // trivial subsystem: F identically zero
  for (int trial = 0; trial < 50; ++trial) {
    const BipartitePureState psi = haar_pure(1, 6, rng);
    const Spectrum s = schmidt_coefficients(psi);
    CHECK(linear_renyi_spread(s) < 1e-14);
  }

  // determinism across calls and across thread counts
  RandomStream r1(123), r2(123);
  const BipartitePureState s1 = haar_pure(3, 3, r1);
  const BipartitePureState s2 = haar_pure(3, 3, r2);
  CHECK((s1.amplitudes() - s2.amplitudes()).cwiseAbs().maxCoeff() == 0.0);

  const MCEstimate serial = mc_estimate(HaarSpec{2, 2}, Functional::F, 20000, 9, 1);
  const MCEstimate parallel = mc_estimate(HaarSpec{2, 2}, Functional::F, 20000, 9, 4);
  CHECK(serial.mean == parallel.mean);
  CHECK(serial.stderr_ == parallel.stderr_);
}

TEST_CASE("lloyd-pagels density") {
  Eigen::VectorXd degenerate(2);
  degenerate << 0.5, 0.5;
  CHECK(lloyd_pagels_density(degenerate, 2, 2) == 0.0);

  Eigen::VectorXd lam(2);
  for (double x : {0.55, 0.7, 0.93}) {
    lam << x, 1.0 - x;
    const double want = (2.0 * x - 1.0) * (2.0 * x - 1.0);
    CHECK(lloyd_pagels_density(lam, 2, 2) == doctest::Approx(want).epsilon(1e-12));
    for (int big_k : {3, 5}) {
      const double tail = std::pow(x * (1.0 - x), big_k - 2.0);
      CHECK(lloyd_pagels_density(lam, 2, big_k) == doctest::Approx(want * tail).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(lloyd_pagels_density(lam, 3, 2), BadDims);
}

TEST_CASE("haar closed forms") {
  CHECK(haar_mean_F(2, 2) == doctest::Approx(3.0 / 70.0).epsilon(1e-15));
  CHECK(haar_mean_F(1, 8) == 0.0);
  CHECK(haar_var_F(1, 8) == 0.0);
  CHECK(haar_mean_purity(2, 2) == doctest::Approx(0.8));
  CHECK(haar_mean_cube(2, 2) == doctest::Approx((4.0 + 4.0 + 12.0 + 1.0) / (5.0 * 6.0)));

  // independently derived value at (2, 2): E[F^2] = 1/462
  const double var22 = 1.0 / 462.0 - std::pow(3.0 / 70.0, 2);
  CHECK(haar_var_F(2, 2) == doctest::Approx(var22).epsilon(1e-12));

  // Theta(1/d^3) scaling of the variance at square bipartitions
  double prev = 0.0;
  for (int m : {2, 4, 8}) {
    const double d = static_cast<double>(m) * m;
    const double scaled = haar_var_F(m, m) * d * d * d;
    CHECK(scaled > prev);  // approaches the asymptotic constant from below
    CHECK(scaled < 12.0);
    prev = scaled;
  }
}

TEST_CASE("haar means against monte carlo") {
  for (auto [da, db] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    const MCEstimate est = mc_estimate(HaarSpec{da, db}, Functional::F, 40000, 11);
    CHECK(std::abs(est.mean - haar_mean_F(da, db)) < 3.0 * est.stderr_);
  }
  // second moment of F against the closed-form variance at (2, 2)
  const MCEstimate est = mc_estimate(HaarSpec{2, 2}, Functional::F, 200000, 13);
  const double sd = est.stderr_ * std::sqrt(static_cast<double>(est.n_samples));
  const double var_mc = sd * sd;
  CHECK(std::abs(var_mc - haar_var_F(2, 2)) < 0.05 * haar_var_F(2, 2));
}

TEST_CASE("bures-hall binary sampler") {
  RandomStream rng(72);
  // histogram against the analytic marginal
  const int bins = 20;
  std::vector<double> counts(bins, 0.0);
  const int n = 200000;
  double mean_f = 0.0, sq_f = 0.0;
  for (int i = 0; i < n; ++i) {
    const double l = bures_hall_sample_binary(rng);
    counts[std::min(bins - 1, static_cast<int>(l * bins))] += 1.0;
    const double f = (1.0 - 2.0 * l) * (1.0 - 2.0 * l) * l * (1.0 - l);
    mean_f += f;
    sq_f += f * f;
  }
  mean_f /= n;
  const double se_f = std::sqrt((sq_f / n - mean_f * mean_f) / n);
  CHECK(std::abs(mean_f - bures_mean_F(4)) < 3.0 * se_f);
  for (int b = 0; b < bins; ++b) {
    const double lo = static_cast<double>(b) / bins, hi = lo + 1.0 / bins;
    const double p = tanh_sinh_integrate(
        [](double l) {
          return 2.0 * std::pow(1.0 - 2.0 * l, 2) / (M_PI * std::sqrt(l * (1.0 - l)));
        },
        lo, hi, 1e-10);
    const double observed = counts[b] / n;
    CHECK(std::abs(observed - p) < 0.01);
  }
  // determinism
  RandomStream a(5), b(5);
  for (int i = 0; i < 100; ++i) CHECK(bures_hall_sample_binary(a) == bures_hall_sample_binary(b));
}

TEST_CASE("bures-hall closed form") {
  CHECK(bures_mean_F(4) == doctest::Approx(1.0 / 32.0).epsilon(1e-15));
  CHECK_THROWS_AS(bures_mean_F(5), BadDims);
  // Theta(1/d) decay toward the asymptotic constant 7/4
  double prev = 0.0;
  for (int d : {4, 16, 64}) {
    const double scaled = d * bures_mean_F(d);
    CHECK(scaled > prev);
    CHECK(scaled < 1.75);
    prev = scaled;
  }
}

TEST_CASE("bures-hall chain") {
  RandomStream rng(73);
  // target density evaluation against the direct product formula
  BuresHallChain chain(2, 3, rng.split(1), 500, 5);
  Eigen::VectorXd lam(2);
  lam << 0.7, 0.3;
  const double alpha = 3 - 2 - 0.5;
  const double direct = 2.0 * std::log(std::abs(0.7 - 0.3)) - std::log(1.0) +
                        alpha * (std::log(0.7) + std::log(0.3));
  CHECK(chain.log_density(lam) == doctest::Approx(direct).epsilon(1e-12));

  // chain mean of F at (2, 2) against the analytic value and the direct
  // rejection sampler
  const MCEstimate direct22 = mc_estimate(BuresHallSpec{2, 2}, Functional::F, 100000, 3);
  CHECK(std::abs(direct22.mean - 1.0 / 32.0) < 3.0 * direct22.stderr_);

  BuresHallChain mc(2, 2, rng.split(7), 10000, 10);
  double acc = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) acc += linear_renyi_spread(mc.next());
  acc /= n;
  CHECK(std::abs(acc - direct22.mean) < 4e-3);
  CHECK(mc.acceptance_rate() > 0.05);
  CHECK(mc.acceptance_rate() < 0.95);

  // the one-shot wrapper advances the caller's stream
  RandomStream one(99);
  const Spectrum s1 = bures_hall_sample_general(2, 2, one, 500, 5);
  const Spectrum s2 = bures_hall_sample_general(2, 2, one, 500, 5);
  CHECK((s1.weights() - s2.weights()).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("clifford purity matches the haar mean (3-design moment)") {
  const MCEstimate purity =
      mc_estimate(CliffordDopedSpec{2, 0, 0.0}, Functional::Purity, 100000, 19, 4);
  CHECK(std::abs(purity.mean - haar_mean_purity(2, 2)) < 3.0 * purity.stderr_);
}

TEST_CASE("doped circuit means") {
  // k = 0 is exactly Clifford: flat spectra, zero F
  const MCEstimate zero = mc_estimate(CliffordDopedSpec{2, 0, M_PI / 4}, Functional::F, 500, 1);
  CHECK(std::abs(zero.mean) < 1e-12);
  CHECK(zero.stderr_ < 1e-12);

  for (int k : {1, 2}) {
    const MCEstimate est =
        mc_estimate(CliffordDopedSpec{2, k, M_PI / 4}, Functional::F, 30000, 17, 4);
    const double want = clifford_mean_F(4, k, M_PI / 4);
    CHECK(std::abs(est.mean - want) < 3.0 * est.stderr_);
  }
}

TEST_CASE("heavily doped circuits reach the haar mean") {
  const MCEstimate est = mc_estimate(CliffordDopedSpec{2, 12, M_PI / 4}, Functional::F, 20000, 31);
  CHECK(std::abs(est.mean - haar_mean_F(2, 2)) < 3.0 * est.stderr_);
}

TEST_CASE("other functionals and ensembles run deterministically") {
  // capacity over a doped ensemble: zero exactly at k = 0
  const MCEstimate v0 = mc_estimate(CliffordDopedSpec{2, 0, 0.3}, Functional::V, 200, 1);
  CHECK(v0.mean < 1e-12);
  const MCEstimate v1 = mc_estimate(HaarSpec{2, 2}, Functional::V, 2000, 1);
  CHECK(v1.mean > 0.0);
  const MCEstimate l1 = mc_estimate(HaarSpec{2, 3}, Functional::LogL, 2000, 1);
  CHECK(l1.mean > 0.0);
  // rectangular Bures-Hall runs through the chain path
  const MCEstimate bh = mc_estimate(BuresHallSpec{2, 3}, Functional::F, 6400, 2);
  CHECK(bh.mean > 0.0);
  CHECK(bh.mean < 1.0 / 16.0);
  const MCEstimate bh2 = mc_estimate(BuresHallSpec{2, 3}, Functional::F, 6400, 2, 3);
  CHECK(bh.mean == bh2.mean);
  CHECK(bh.stderr_ == bh2.stderr_);
}

TEST_CASE("doped closed form") {
  for (int d : {4, 16, 64, 256, 1024}) {
    CHECK(std::abs(clifford_mean_F(d, 0, 0.77)) < 1e-12);
    // large doping approaches the Haar mean
    const int root = static_cast<int>(std::llround(std::sqrt(static_cast<double>(d))));
    CHECK(std::abs(clifford_mean_F(d, 10000, M_PI / 4) - haar_mean_F(root, root)) < 1e-12);
    // theta = pi/2 makes the doping gate Clifford: no k dependence
    for (int k : {1, 5, 40})
      CHECK(std::abs(clifford_mean_F(d, k, M_PI / 2) - clifford_mean_F(d, 0, M_PI / 2)) < 1e-12);
  }
  CHECK_THROWS_AS(clifford_mean_F(8, 1, 0.3), BadDims);
}

TEST_CASE("binary pdf normalizations and means") {
  const double sup = 1.0 / 16.0;
  const double norm_haar =
      tanh_sinh_integrate([](double f) { return pdf_F_haar_binary(f); }, 0.0, sup, 1e-9);
  CHECK(std::abs(norm_haar - 1.0) < 1e-6);
  const double mean_haar =
      tanh_sinh_integrate([](double f) { return f * pdf_F_haar_binary(f); }, 0.0, sup, 1e-10);
  CHECK(std::abs(mean_haar - 3.0 / 70.0) < 1e-6);

  const double norm_bures =
      tanh_sinh_integrate([](double f) { return pdf_F_bures_binary(f); }, 0.0, sup, 1e-9);
  CHECK(std::abs(norm_bures - 1.0) < 1e-6);
  const double mean_bures =
      tanh_sinh_integrate([](double f) { return f * pdf_F_bures_binary(f); }, 0.0, sup, 1e-10);
  CHECK(std::abs(mean_bures - 1.0 / 32.0) < 1e-6);

  const double x_max = std::log2(9.0 / 8.0);
  const double norm_logl =
      tanh_sinh_integrate([](double x) { return pdf_logl_haar_binary(x); }, 0.0, x_max, 1e-9);
  CHECK(std::abs(norm_logl - 1.0) < 1e-6);

  CHECK_THROWS_AS(pdf_F_haar_binary(0.2), OutOfSupport);
  CHECK_THROWS_AS(pdf_F_bures_binary(-0.01), OutOfSupport);
  CHECK_THROWS_AS(pdf_logl_haar_binary(0.2), OutOfSupport);
}

TEST_CASE("determinant shortcut for two-qubit schmidt weights") {
  // lambda_max = (1 + sqrt(2 Z2 - 1))/2 with Z2 = 1 - 2 |det M|^2 / |M|^4,
  // the closed form the histogram criteria rely on
  RandomStream rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    CVec amps(4);
    for (int i = 0; i < 4; ++i) amps[i] = Cplx(rng.gaussian(), rng.gaussian());
    const double norm2 = amps.squaredNorm();
    const double det2 = std::norm(amps[0] * amps[3] - amps[1] * amps[2]) / (norm2 * norm2);
    const double lam = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - 4.0 * det2)));
    const Spectrum s = schmidt_coefficients(BipartitePureState(amps / std::sqrt(norm2), 2, 2));
    CHECK(std::abs(s[0] - lam) < 1e-10);
  }
}

TEST_CASE("third moment closed form against monte carlo") {
  RandomStream rng(38);
  for (auto [da, db] : {std::pair{2, 2}, {2, 4}, {3, 3}}) {
    double sum = 0.0, sq = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
      const BipartitePureState psi = haar_pure(da, db, rng);
      const Spectrum s = schmidt_coefficients(psi);
      const double z3 = partition_function(s, 3.0);
      sum += z3;
      sq += z3 * z3;
    }
    const double mean = sum / n;
    const double se = std::sqrt(std::max(0.0, sq / n - mean * mean) / n);
    CHECK(std::abs(mean - haar_mean_cube(da, db)) < 3.0 * se);
  }
}

TEST_CASE("log-antiflatness histogram matches the density") {
  // exact CDF of x = log2(Lambda) from the two u^2 branches
  auto cdf = [](double x) {
    const double x_max = std::log2(9.0 / 8.0);
    if (x <= 0.0) return 0.0;
    if (x >= x_max) return 1.0;
    const double big_l = std::exp2(x);
    const double s = std::sqrt(9.0 - 8.0 * big_l);
    const double v_plus = (3.0 - 2.0 * big_l + s) / (2.0 * big_l);
    const double v_minus = (3.0 - 2.0 * big_l - s) / (2.0 * big_l);
    return 1.0 - (std::pow(v_plus, 1.5) - std::pow(std::max(v_minus, 0.0), 1.5));
  };
  // the CDF integrates the closed-form density
  for (double x : {0.02, 0.08, 0.14}) {
    const double h = 1e-7;
    CHECK((cdf(x + h) - cdf(x - h)) / (2.0 * h) ==
          doctest::Approx(pdf_logl_haar_binary(x)).epsilon(1e-5));
  }
  // empirical histogram over haar samples
  RandomStream rng(39);
  const int bins = 30, n = 200000;
  const double x_max = std::log2(9.0 / 8.0);
  std::vector<int> counts(bins, 0);
  for (int i = 0; i < n; ++i) {
    const Spectrum s = schmidt_coefficients(haar_pure(2, 2, rng));
    const double x = log_antiflatness(s) / std::log(2.0);
    ++counts[std::min(bins - 1, static_cast<int>(x / x_max * bins))];
  }
  for (int b = 0; b < bins; ++b) {
    const double p = cdf(x_max * (b + 1) / bins) - cdf(x_max * b / bins);
    const double se = std::sqrt(p * (1.0 - p) / n);
    CHECK(std::abs(static_cast<double>(counts[b]) / n - p) < 4.0 * se + 1e-6);
  }
}

TEST_CASE("cdfs differentiate to the densities") {
  for (double f : {0.004, 0.017, 0.031, 0.052}) {
    const double h = 1e-7;
    const double slope_haar = (cdf_F_haar_binary(f + h) - cdf_F_haar_binary(f - h)) / (2 * h);
    CHECK(slope_haar == doctest::Approx(pdf_F_haar_binary(f)).epsilon(1e-5));
    const double slope_bures = (cdf_F_bures_binary(f + h) - cdf_F_bures_binary(f - h)) / (2 * h);
    CHECK(slope_bures == doctest::Approx(pdf_F_bures_binary(f)).epsilon(1e-5));
  }
  CHECK(cdf_F_haar_binary(1.0) == 1.0);
  CHECK(cdf_F_bures_binary(0.0) == 0.0);
}

TEST_CASE("mapped pdf machinery") {
  auto f_map = [](double l) { return (1.0 - 2.0 * l) * (1.0 - 2.0 * l) * l * (1.0 - l); };
  auto f_deriv = [](double l) { return (1.0 - 2.0 * l) * (8.0 * (l - 1.0) * l + 1.0); };

  std::vector<double> targets;
  for (int i = 1; i <= 30; ++i) targets.push_back(1.0 / 16.0 * i / 32.0);

  auto haar_base = [](double l) { return 3.0 * (1.0 - 2.0 * l) * (1.0 - 2.0 * l); };
  const DensityTable haar = mapped_pdf(haar_base, f_map, f_deriv, targets);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    REQUIRE_FALSE(haar.excluded[i]);
    CHECK(std::abs(haar.density[i] - pdf_F_haar_binary(targets[i])) < 1e-8);
  }

  auto bures_base = [](double l) {
    return 2.0 * std::pow(1.0 - 2.0 * l, 2) / (M_PI * std::sqrt(l * (1.0 - l)));
  };
  const DensityTable bures = mapped_pdf(bures_base, f_map, f_deriv, targets);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    REQUIRE_FALSE(bures.excluded[i]);
    CHECK(std::abs(bures.density[i] - pdf_F_bures_binary(targets[i])) < 1e-8);
  }

  // the closed-form log-Lambda density agrees with the change-of-variables route
  auto loglam_map = [](double l) {
    const double w = l * (1.0 - l);
    return std::log2((1.0 - 3.0 * w) / std::pow(1.0 - 2.0 * w, 2));
  };
  auto loglam_deriv = [](double l) {
    const double w = l * (1.0 - l);
    const double dw = 1.0 - 2.0 * l;
    const double lam = (1.0 - 3.0 * w) / std::pow(1.0 - 2.0 * w, 2);
    const double dlam_dw = (-3.0 * std::pow(1.0 - 2.0 * w, 2) +
                            4.0 * (1.0 - 2.0 * w) * (1.0 - 3.0 * w)) /
                           std::pow(1.0 - 2.0 * w, 4);
    return dlam_dw * dw / (lam * std::log(2.0));
  };
  std::vector<double> xs;
  const double x_max = std::log2(9.0 / 8.0);
  for (int i = 2; i <= 28; ++i) xs.push_back(x_max * i / 30.0);
  const DensityTable logl = mapped_pdf(haar_base, loglam_map, loglam_deriv, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    REQUIRE_FALSE(logl.excluded[i]);
    CHECK(std::abs(logl.density[i] - pdf_logl_haar_binary(xs[i])) < 1e-8);
  }

  // a flat map has no usable density
  CHECK_THROWS_AS(mapped_pdf(haar_base, [](double) { return 0.5; },
                             [](double) { return 0.0; }, targets),
                  DerivativeZero);
}

TEST_CASE("relative growth of F against linear entanglement") {
  double prev = std::numeric_limits<double>::infinity();
  for (int m : {2, 3, 4, 5}) {
    const MCEstimate f = mc_estimate(HaarSpec{m, m}, Functional::F, 20000, 23);
    const MCEstimate e = mc_estimate(HaarSpec{m, m}, Functional::Elin, 20000, 29);
    const double ratio = f.mean / e.mean;
    CHECK(ratio < prev);
    prev = ratio;
  }
}
