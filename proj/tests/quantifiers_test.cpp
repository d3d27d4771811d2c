// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/quantifiers.hpp"

#include <doctest.h>

#include <cmath>

#include "antiflat/ordering.hpp"
#include "test_support.hpp"

using namespace antiflat;
using testing::golden_max;
using testing::random_spectrum;
using testing::random_spectrum_with_zeros;

namespace {

// jump-family objectives, written out independently of the library path
double f_jump(double r, int d) {
  const double n = d - 1.0;
  const double a = d * r - d + 1.0;
  return r * (1.0 - r) * a * a / (n * n);
}

double f_jump_deriv(double r, int d) {
  const double n = d - 1.0;
  const double a = d * r - d + 1.0;
  return (a * a * (1.0 - 2.0 * r) + 2.0 * d * a * r * (1.0 - r)) / (n * n);
}

double loglam_jump(double r, int d) {
  const double n = d - 1.0;
  const double one = 1.0 - r;
  return std::log(one * one * one + r * r * r / (n * n)) -
         2.0 * std::log(one * one + r * r / n);
}

double loglam_jump_deriv(double r, int d) {
  const double n = d - 1.0;
  const double one = 1.0 - r;
  const double z3 = one * one * one + r * r * r / (n * n);
  const double z2 = one * one + r * r / n;
  return (-3.0 * one * one + 3.0 * r * r / (n * n)) / z3 - 2.0 * (-2.0 * one + 2.0 * r / n) / z2;
}

}  // namespace

TEST_CASE("capacity of entanglement") {
  for (int rank = 1; rank <= 5; ++rank) CHECK(capacity(Spectrum::flat(rank, 5)) < 1e-14);

  const Spectrum s = Spectrum::from_raw({0.9, 0.1});
  const double direct = 0.9 * std::pow(std::log(0.9), 2) + 0.1 * std::pow(std::log(0.1), 2) -
                        std::pow(0.9 * std::log(0.9) + 0.1 * std::log(0.1), 2);
  CHECK(capacity(s) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("linear renyi spread") {
  CHECK(linear_renyi_spread(Spectrum::flat(4, 4)) == 0.0);
  for (double l : {0.1, 0.25, 0.4, 0.9}) {
    const Spectrum s = Spectrum::from_raw({l, 1.0 - l});
    CHECK(linear_renyi_spread(s) ==
          doctest::Approx((1.0 - 2.0 * l) * (1.0 - 2.0 * l) * l * (1.0 - l)).epsilon(1e-13));
  }
  const double lmax = (2.0 - std::sqrt(2.0)) / 4.0;
  CHECK(linear_renyi_spread(Spectrum::from_raw({1.0 - lmax, lmax})) ==
        doctest::Approx(1.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("log antiflatness") {
  CHECK(log_antiflatness(Spectrum::flat(3, 3)) == 0.0);
  const double r = (3.0 - std::sqrt(3.0)) / 6.0;
  CHECK(log_antiflatness(jump_spectrum(r, 1, 1, 2)) ==
        doctest::Approx(std::log(9.0 / 8.0)).epsilon(1e-13));

  RandomStream rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Spectrum s = random_spectrum_with_zeros(2 + trial % 6, rng);
    const double z2 = partition_function(s, 2.0);
    const double f = linear_renyi_spread(s);
    CHECK(log_antiflatness(s) == doctest::Approx(std::log1p(f / (z2 * z2))).epsilon(1e-12));
    CHECK(log_antiflatness(s) ==
          doctest::Approx(2.0 * renyi_spread(s, 2.0, 3.0)).epsilon(1e-12));
  }
}

TEST_CASE("gap measures") {
  CHECK(gap_measure(Spectrum::flat(4, 4)) == 0.0);
  CHECK(gap_measure(Spectrum::from_raw({0.5, 0.5, 0.0})) == doctest::Approx(1.0 / 8.0));
  for (int d : {2, 3, 7})
    CHECK(gap_measure(Spectrum::pure(d)) == doctest::Approx(1.0 / (d - 1.0)));
  CHECK_THROWS_AS(gap_measure(Spectrum::pure(1)), DimTooSmall);

  // weighted version: p = s recovers the linear spread, uniform p on (1,0)
  // gives the pairwise value 1/4
  RandomStream rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const Spectrum s = random_spectrum(2 + trial % 5, rng);
    CHECK(std::abs(weighted_gap_measure(s, s) - linear_renyi_spread(s)) < 1e-12);
  }
  CHECK(weighted_gap_measure(Spectrum::pure(2), Spectrum::flat(2, 2)) == doctest::Approx(0.25));
  CHECK(weighted_gap_measure(Spectrum::flat(3, 3), random_spectrum(3, rng)) ==
        doctest::Approx(0.0));
  CHECK_THROWS_AS(weighted_gap_measure(Spectrum::pure(2), Spectrum::pure(3)), DimMismatch);

  // pairwise-sum oracle for the weighted form
  for (int trial = 0; trial < 50; ++trial) {
    const Spectrum lam = random_spectrum(4, rng);
    const Spectrum p = random_spectrum(4, rng);
    double oracle = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        oracle += p[i] * p[j] * (lam[i] - lam[j]) * (lam[i] - lam[j]);
    CHECK(weighted_gap_measure(lam, p) == doctest::Approx(oracle).epsilon(1e-12));
  }
}

TEST_CASE("jump spectrum") {
  const Spectrum pure = jump_spectrum(0.0, 1, 3, 4);
  CHECK(pure[0] == doctest::Approx(1.0));
  CHECK(pure.rank() == 1);

  const Spectrum flat = jump_spectrum(0.75, 1, 3, 4);
  CHECK(is_flat(flat));
  CHECK(flat.rank() == 4);

  const Spectrum quarter = jump_spectrum(0.25, 1, 3, 4);
  CHECK(quarter[0] == doctest::Approx(0.75));
  for (int i = 1; i < 4; ++i) CHECK(quarter[i] == doctest::Approx(1.0 / 12.0));

  CHECK_THROWS_AS(jump_spectrum(0.5, 2, 3, 4), BadShape);
  CHECK_THROWS_AS(jump_spectrum(1.5, 1, 1, 2), BadShape);
}

TEST_CASE("maximum of the linear spread") {
  const Extremum e2 = max_linear_spread(2);
  CHECK(e2.r_max == doctest::Approx((8.0 - 4.0 * std::sqrt(2.0)) / 16.0).epsilon(1e-14));
  CHECK(e2.value == doctest::Approx(1.0 / 16.0).epsilon(1e-13));

  double prev = 0.0;
  for (int d = 2; d <= 64; ++d) {
    const Extremum e = max_linear_spread(d);
    CHECK(e.value < 27.0 / 256.0);
    CHECK(e.value > prev);
    prev = e.value;
  }

  // numeric maximization oracle over the jump family
  for (int d = 2; d <= 10; ++d) {
    const double r_oracle = golden_max([d](double r) { return f_jump(r, d); },
                                       [d](double r) { return f_jump_deriv(r, d); }, 0.0, 0.5);
    const Extremum e = max_linear_spread(d);
    CHECK(std::abs(e.r_max - r_oracle) < 1e-10);
    CHECK(std::abs(e.value - f_jump(r_oracle, d)) < 1e-10);
  }
}

TEST_CASE("maximum of the log antiflatness") {
  const Extremum e2 = max_log_antiflatness(2);
  CHECK(e2.r_max == doctest::Approx((3.0 - std::sqrt(3.0)) / 6.0).epsilon(1e-14));
  CHECK(e2.value == doctest::Approx(std::log(9.0 / 8.0)).epsilon(1e-13));
  for (int d = 7; d <= 10; ++d) CHECK(max_log_antiflatness(d).r_max == 0.5);

  for (int d = 2; d <= 10; ++d) {
    const Extremum e = max_log_antiflatness(d);
    CHECK(e.value < std::log(2.0));
    const double r_oracle = golden_max([d](double r) { return loglam_jump(r, d); },
                                       [d](double r) { return loglam_jump_deriv(r, d); }, 0.0, 0.5);
    CHECK(std::abs(e.r_max - r_oracle) < 1e-10);
    CHECK(std::abs(e.value - loglam_jump(r_oracle, d)) < 1e-10);
  }
}

TEST_CASE("maximum of the capacity") {
  const Extremum e2 = max_capacity(2);
  CHECK(std::abs(e2.r_max - 0.0832217) < 1e-5);

  const double ln2 = std::log(2.0);
  for (int d = 2; d <= 12; ++d) {
    const Extremum e = max_capacity(d);
    // stated bound, with the variance expressed in bits^2
    const double bound = 0.25 * std::pow(std::log2(d - 1.0), 2) + 1.0 / (ln2 * ln2);
    CHECK(e.value / (ln2 * ln2) < bound);
    // flat endpoint of the family has zero capacity (bracketing sanity)
    const double r_flat = (d - 1.0) / d;
    CHECK(capacity(jump_spectrum(r_flat, 1, d - 1, d)) < 1e-14);
    CHECK(e.value > 0.0);
  }
}

TEST_CASE("m = 1, n = d-1 is the optimal jump shape") {
  for (int d = 2; d <= 8; ++d) {
    double best = 0.0, best_log = 0.0, family_log = 0.0;
    for (int m = 1; m + 1 <= d; ++m) {
      for (int n = 1; m + n <= d; ++n) {
        for (int i = 0; i <= 400; ++i) {
          const Spectrum s = jump_spectrum(i / 400.0, m, n, d);
          best = std::max(best, linear_renyi_spread(s));
          best_log = std::max(best_log, log_antiflatness(s));
          if (m == 1 && n == d - 1) family_log = std::max(family_log, log_antiflatness(s));
        }
      }
    }
    // the linear-spread closed form is the unrestricted maximum
    CHECK(best <= max_linear_spread(d).value + 1e-6);
    // the one-large-weight shape also carries the log-antiflatness maximum,
    // but only its r <= 1/2 branch matches the closed form: from d = 7 on
    // the family peaks at r > 1/2 above the branch value
    CHECK(best_log <= family_log + 1e-9);
    if (d <= 6) {
      CHECK(best_log <= max_log_antiflatness(d).value + 1e-6);
    } else {
      CHECK(family_log > max_log_antiflatness(d).value + 1e-5);
    }
  }
}

TEST_CASE("log antiflatness branch restriction is active from d = 7") {
  // direct witnesses that r = 1/2 is only a boundary maximum of the
  // restricted branch: slightly larger r gives a strictly larger value
  for (auto [d, r] : {std::pair{7, 0.505}, {8, 0.53}, {10, 0.57}}) {
    const double branch = max_log_antiflatness(d).value;
    CHECK(log_antiflatness(jump_spectrum(r, 1, d - 1, d)) > branch);
  }
  // for d <= 6 the interior critical point is the true family maximum
  for (int d = 2; d <= 6; ++d) {
    const double branch = max_log_antiflatness(d).value;
    for (int i = 0; i <= 1000; ++i)
      CHECK(log_antiflatness(jump_spectrum(i / 1000.0, 1, d - 1, d)) <= branch + 1e-9);
  }
}

TEST_CASE("bound chain") {
  const BoundChain flat = bound_chain(Spectrum::flat(3, 3));
  CHECK(flat.log_lambda == 0.0);
  CHECK(flat.mid == 0.0);
  CHECK(flat.cap >= 0.0);

  const BoundChain two = bound_chain(Spectrum::from_raw({0.8, 0.2}));
  CHECK(two.log_lambda <= two.mid + 1e-12);
  CHECK(two.mid <= two.cap + 1e-12);

  const BoundChain extremal = bound_chain(jump_spectrum(max_linear_spread(5).r_max, 1, 4, 5));
  CHECK(extremal.log_lambda <= extremal.mid + 1e-12);
  CHECK(extremal.mid <= extremal.cap + 1e-12);

  RandomStream rng(33);
  for (int trial = 0; trial < 2000; ++trial) {
    const BoundChain c = bound_chain(random_spectrum_with_zeros(2 + trial % 8, rng));
    CHECK(c.log_lambda <= c.mid + 1e-12);
    CHECK(c.mid <= c.cap + 1e-12);
  }
}

TEST_CASE("pareto scan") {
  std::vector<double> r_grid;
  for (int i = 0; i <= 40; ++i) r_grid.push_back(0.75 * i / 40.0);
  const auto points = pareto_scan(4, r_grid, RenyiGrid::default_grid());

  CHECK(points.front().dominated);  // r = 0 is pure, hence flat
  CHECK(points.back().dominated);   // r = 3/4 is flat rank 4

  std::size_t arg_f = 0, arg_log = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].f > points[arg_f].f) arg_f = i;
    if (points[i].log_lambda > points[arg_log].log_lambda) arg_log = i;
  }
  CHECK_FALSE(points[arg_f].dominated);
  CHECK_FALSE(points[arg_log].dominated);

  // no single grid point dominates every other one
  const auto& grid = RenyiGrid::default_grid();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Spectrum si = jump_spectrum(points[i].r, 1, 3, 4);
    bool dominates_all = true;
    for (std::size_t j = 0; j < points.size() && dominates_all; ++j) {
      if (i == j) continue;
      dominates_all = af_strictly_dominates(si, jump_spectrum(points[j].r, 1, 3, 4), grid);
    }
    CHECK_FALSE(dominates_all);
  }
}

TEST_CASE("faithfulness of the three quantifiers") {
  RandomStream rng(34);
  for (int rank = 1; rank <= 8; ++rank) {
    const Spectrum flat = Spectrum::flat(rank, 8);
    CHECK(capacity(flat) <= 1e-12);
    CHECK(linear_renyi_spread(flat) <= 1e-12);
    CHECK(log_antiflatness(flat) <= 1e-12);
  }
  int clearly_nonflat = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Spectrum s = random_spectrum_with_zeros(2 + trial % 7, rng);
    if (is_flat(s)) continue;
    const Eigen::Index r = s.rank();
    if (s[0] - s[r - 1] < 1e-4) continue;  // too close to flat to resolve
    ++clearly_nonflat;
    CHECK(capacity(s) > 1e-12);
    CHECK(linear_renyi_spread(s) > 1e-14);
    CHECK(log_antiflatness(s) > 1e-14);
  }
  CHECK(clearly_nonflat > 7000);
}

TEST_CASE("additivity and the product rule") {
  RandomStream rng(35);
  for (int trial = 0; trial < 300; ++trial) {
    const Spectrum s = random_spectrum_with_zeros(2 + trial % 4, rng);
    const Spectrum t = random_spectrum_with_zeros(2 + (trial / 4) % 3, rng);
    const Spectrum st = spectrum_tensor(s, t);
    CHECK(std::abs(capacity(st) - capacity(s) - capacity(t)) < 1e-10);
    CHECK(std::abs(log_antiflatness(st) - log_antiflatness(s) - log_antiflatness(t))
          < 1e-10);
    const double f_prod = linear_renyi_spread(s) * partition_function(t, 3.0) +
                          std::pow(partition_function(s, 2.0), 2) * linear_renyi_spread(t);
    CHECK(std::abs(linear_renyi_spread(st) - f_prod) < 1e-12);
    // the product rule implies subadditivity and supermultiplicativity
    CHECK(linear_renyi_spread(st) <=
          linear_renyi_spread(s) + linear_renyi_spread(t) + 1e-12);
    CHECK(linear_renyi_spread(st) >=
          linear_renyi_spread(s) * linear_renyi_spread(t) - 1e-12);
  }
  // flat (x) flat stays flat with multiplied rank
  const Spectrum ff = spectrum_tensor(Spectrum::flat(2, 2), Spectrum::flat(3, 3));
  CHECK(is_flat(ff));
  CHECK(ff.rank() == 6);
}

TEST_CASE("the (2,3) spread is neither Schur-convex nor Schur-concave") {
  const Spectrum rho = Spectrum::from_raw({0.9, 0.1});
  const Spectrum sig1 = Spectrum::from_raw({0.8, 0.2});
  const Spectrum sig2 = Spectrum::from_raw({0.6, 0.4});
  // rho majorizes both
  CHECK(standard_majorizes(rho, sig1).relation == Relation::FirstDominates);
  CHECK(standard_majorizes(rho, sig2).relation == Relation::FirstDominates);
  const double ln2 = std::log(2.0);
  const double d_rho = renyi_spread(rho, 2.0, 3.0) / ln2;
  const double d_sig1 = renyi_spread(sig1, 2.0, 3.0) / ln2;
  const double d_sig2 = renyi_spread(sig2, 2.0, 3.0) / ln2;
  // reference values in bits, to four decimals
  CHECK(std::abs(d_rho - 0.0593) < 5e-5);
  CHECK(std::abs(d_sig1 - 0.0847) < 5e-5);
  CHECK(std::abs(d_sig2 - 0.0252) < 5e-5);
  CHECK(d_rho < d_sig1);  // increases along one majorization pair
  CHECK(d_rho > d_sig2);  // decreases along another
}

TEST_CASE("conditional monotonicity counterexample") {
  const Spectrum rho = Spectrum::from_raw({0.6, 0.3, 0.1});
  const Spectrum sigma = Spectrum::from_raw({0.8, 0.2, 0.0});
  const double pur_rho = partition_function(rho, 2.0);
  const double pur_sigma = partition_function(sigma, 2.0);
  CHECK(pur_rho == doctest::Approx(0.46));
  CHECK(pur_sigma == doctest::Approx(0.68));
  const double f_rho = linear_renyi_spread(rho);
  const double f_sigma = linear_renyi_spread(sigma);
  CHECK(f_rho == doctest::Approx(0.0324).epsilon(1e-10));
  CHECK(f_sigma == doctest::Approx(0.0576).epsilon(1e-10));
  // purity and F order one way, the (2,3) spread the other
  const double shape_rho = f_rho / (pur_rho * pur_rho);
  const double shape_sigma = f_sigma / (pur_sigma * pur_sigma);
  CHECK(std::abs(shape_rho - 0.1531) < 5e-5);
  CHECK(std::abs(shape_sigma - 0.1245) < 1e-4);
  CHECK(renyi_spread(rho, 2.0, 3.0) > renyi_spread(sigma, 2.0, 3.0));
}

TEST_CASE("quantifiers respect the antiflat order on comparable pairs") {
  RandomStream rng(36);
  const auto& grid = RenyiGrid::default_grid();
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    // rho (padded) is antiflat-majorized by rho (x) tau by entropy additivity
    const Spectrum rho = random_spectrum_with_zeros(2 + trial % 3, rng);
    const Spectrum tau = random_spectrum(2 + (trial / 3) % 2, rng);
    const Spectrum sigma = spectrum_tensor(rho, tau);
    const Spectrum rho_padded = rho.padded(sigma.dim());
    const Relation rel = af_compare(rho_padded, sigma, grid).relation;
    REQUIRE((rel == Relation::SecondDominates || rel == Relation::Equivalent));
    CHECK(log_antiflatness(rho_padded) <= log_antiflatness(sigma) + 1e-9);
    CHECK(capacity(rho_padded) <= capacity(sigma) + 1e-9);
    ++checked;
  }
  CHECK(checked == 1000);

  // conditional F monotonicity: iso-purity comparable pairs via a flat
  // seed pair tensored with a common factor
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 + trial % 3;
    const int d = m + 1 + trial % 2;
    const Spectrum flat_m = Spectrum::flat(m, d);
    const Spectrum sigma_p = iso_purity_sample(d, 1.0 / m, rng);
    const Spectrum tau = random_spectrum(2, rng);
    const Spectrum a = spectrum_tensor(flat_m, tau);
    const Spectrum b = spectrum_tensor(sigma_p, tau);
    const Relation rel = af_compare(a, b, grid).relation;
    REQUIRE((rel == Relation::SecondDominates || rel == Relation::Equivalent));
    const double za = partition_function(a, 2.0);
    const double zb = partition_function(b, 2.0);
    REQUIRE(za <= zb + 1e-9);  // purity condition for the F monotone
    CHECK(linear_renyi_spread(a) <= linear_renyi_spread(b) + 1e-9);
  }
}
