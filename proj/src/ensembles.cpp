// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/ensembles.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <thread>

#include "antiflat/quantifiers.hpp"
#include "antiflat/statevector.hpp"

namespace antiflat {

BipartitePureState haar_pure(int d_a, int d_b, RandomStream& rng) {
  if (d_a < 1 || d_b < 1) throw BadDims("haar_pure: dims must be >= 1");
  CVec amps(static_cast<Eigen::Index>(d_a) * d_b);
  for (Eigen::Index i = 0; i < amps.size(); ++i) amps[i] = Cplx(rng.gaussian(), rng.gaussian());
  amps /= amps.norm();
  return BipartitePureState(std::move(amps), d_a, d_b);
}

double lloyd_pagels_density(const Eigen::VectorXd& lambda, int d_a, int d_b) {
  if (d_a > d_b) throw BadDims("lloyd_pagels_density: requires d_a <= d_b");
  if (lambda.size() != d_a) throw BadDims("lloyd_pagels_density: lambda must have length d_a");
  double out = 1.0;
  for (int i = 0; i < d_a; ++i) {
    for (int j = i + 1; j < d_a; ++j) {
      const double g = lambda[j] - lambda[i];
      out *= g * g;
    }
    out *= std::pow(lambda[i], static_cast<double>(d_b - d_a));
  }
  return out;
}

double bures_hall_sample_binary(RandomStream& rng) {
  for (;;) {
    // arcsine proposal: lambda = sin^2(pi u / 2)
    const double s = std::sin(M_PI_2 * rng.uniform01());
    const double lambda = s * s;
    const double w = 2.0 * lambda - 1.0;
    if (rng.uniform01() < w * w) return lambda;
  }
}

BuresHallChain::BuresHallChain(int d_a, int d_b, RandomStream rng, int burn_in, int thin)
    : d_a_(d_a), d_b_(d_b), alpha_(d_b - d_a - 0.5), rng_(rng), thin_(thin) {
  if (d_a < 2 || d_a > d_b) throw BadDims("BuresHallChain: need 2 <= d_a <= d_b");
  state_ = Eigen::VectorXd::Zero(d_a);
  // start from a spread-out interior point
  for (int i = 0; i < d_a; ++i) state_[i] = 1.0 + i;
  state_ /= state_.sum();
  log_pi_ = log_density(state_);
  for (int i = 0; i < burn_in; ++i) step();
  proposed_ = accepted_ = 0;
}

double BuresHallChain::log_density(const Eigen::VectorXd& lambda) const {
  double acc = 0.0;
  for (int i = 0; i < d_a_; ++i) {
    if (lambda[i] <= 0.0) return -std::numeric_limits<double>::infinity();
    acc += alpha_ * std::log(lambda[i]);
    for (int j = i + 1; j < d_a_; ++j)
      acc += 2.0 * std::log(std::abs(lambda[i] - lambda[j])) - std::log(lambda[i] + lambda[j]);
  }
  return acc;
}

void BuresHallChain::step() {
  ++proposed_;
  const int d = d_a_;
  // zero-sum Dirichlet displacement, sign-flipped with probability 1/2 so
  // the proposal kernel is exactly symmetric
  Eigen::VectorXd delta(d);
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    double x = rng_.uniform01();
    while (x == 0.0) x = rng_.uniform01();
    delta[i] = -std::log(x);
    sum += delta[i];
  }
  delta = (delta / sum).array() - 1.0 / d;
  const double sign = rng_.uniform01() < 0.5 ? 1.0 : -1.0;
  const double eps = 0.35 / d;
  Eigen::VectorXd proposal = state_ + sign * eps * delta;
  if ((proposal.array() <= 0.0).any()) return;
  const double log_pi_new = log_density(proposal);
  if (log_pi_new - log_pi_ >= std::log(std::max(rng_.uniform01(), 1e-300))) {
    state_ = std::move(proposal);
    log_pi_ = log_pi_new;
    ++accepted_;
  }
}

Spectrum BuresHallChain::next() {
  for (int i = 0; i < thin_; ++i) step();
  Eigen::VectorXd w = state_;
  return Spectrum::from_raw(std::move(w));
}

double BuresHallChain::acceptance_rate() const {
  return proposed_ == 0 ? 0.0 : static_cast<double>(accepted_) / static_cast<double>(proposed_);
}

Spectrum bures_hall_sample_general(int d_a, int d_b, RandomStream& rng, int burn_in, int thin) {
  // draw from the parent so repeated calls get fresh chains
  BuresHallChain chain(d_a, d_b, rng.split(rng.next_u64()), burn_in, thin);
  return chain.next();
}

CliffordTableau random_clifford(int n, RandomStream& rng) {
  return CliffordTableau::random(n, rng);
}

BipartitePureState doped_state(int n, int k, double theta, RandomStream& rng, int cut) {
  if (n < 1 || n > 12) throw BadDims("doped_state: need 1 <= n <= 12");
  if (k < 0) throw BadDims("doped_state: k must be >= 0");
  if (cut < 0) cut = n / 2;
  if (cut < 1 || cut >= n) throw BadDims("doped_state: cut must satisfy 1 <= cut < n");
  CVec psi = zero_state(n);
  apply_clifford(psi, CliffordTableau::random(n, rng));
  for (int layer = 0; layer < k; ++layer) {
    const int q = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    apply_phase(psi, q, theta, n);
    apply_clifford(psi, CliffordTableau::random(n, rng));
  }
  return BipartitePureState(std::move(psi), 1 << cut, 1 << (n - cut));
}

namespace {

double functional_from_moments(Functional f, double z2, double z3) {
  switch (f) {
    case Functional::F:
      return z3 - z2 * z2;
    case Functional::LogL:
      return std::log(z3) - 2.0 * std::log(z2);
    case Functional::Elin:
      return 1.0 - z2;
    case Functional::Purity:
      return z2;
    case Functional::V:
      throw Error("capacity needs the full spectrum, not moments");
  }
  throw Error("unreachable");
}

double evaluate_on_gram(Functional f, const CMat& gram) {
  if (f == Functional::V) {
    Eigen::SelfAdjointEigenSolver<CMat> es(gram, Eigen::EigenvaluesOnly);
    double m1 = 0.0, m2 = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const double l = es.eigenvalues()[i];
      if (l <= 1e-14) continue;
      const double lg = std::log(l);
      m1 += l * lg;
      m2 += l * lg * lg;
    }
    return m2 - m1 * m1;
  }
  const CMat g2 = gram * gram;
  return functional_from_moments(f, g2.trace().real(), (g2 * gram).trace().real());
}

double haar_draw(const HaarSpec& s, Functional f, RandomStream& rng) {
  CVec amps(static_cast<Eigen::Index>(s.d_a) * s.d_b);
  for (Eigen::Index i = 0; i < amps.size(); ++i) amps[i] = Cplx(rng.gaussian(), rng.gaussian());
  amps /= amps.norm();
  Eigen::Map<const Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      amps.data(), s.d_a, s.d_b);
  return evaluate_on_gram(f, m * m.adjoint());
}

double spectrum_functional(Functional f, const Spectrum& s) {
  switch (f) {
    case Functional::F:
      return linear_renyi_spread(s);
    case Functional::LogL:
      return log_antiflatness(s);
    case Functional::V:
      return capacity(s);
    case Functional::Elin:
      return 1.0 - partition_function(s, 2.0);
    case Functional::Purity:
      return partition_function(s, 2.0);
  }
  throw Error("unreachable");
}

struct BlockSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::int64_t n = 0;
};

constexpr int kBlocks = 64;

}  // namespace

MCEstimate mc_estimate(const EnsembleSpec& spec, Functional functional, std::int64_t n,
                       std::uint64_t seed, int threads) {
  if (n < 2) throw BadDims("mc_estimate: need n >= 2");
  threads = std::max(1, threads);

  std::vector<BlockSums> blocks(kBlocks);
  const RandomStream master(seed);

  auto run_block = [&](int b) {
    RandomStream rng = master.split(static_cast<std::uint64_t>(b));
    const std::int64_t lo = n * b / kBlocks;
    const std::int64_t hi = n * (b + 1) / kBlocks;
    BlockSums acc;
    if (const auto* haar = std::get_if<HaarSpec>(&spec)) {
      for (std::int64_t i = lo; i < hi; ++i) {
        const double v = haar_draw(*haar, functional, rng);
        acc.sum += v;
        acc.sum_sq += v * v;
        ++acc.n;
      }
    } else if (const auto* bh = std::get_if<BuresHallSpec>(&spec)) {
      if (bh->d_a == 2 && bh->d_b == 2) {
        for (std::int64_t i = lo; i < hi; ++i) {
          const double l = bures_hall_sample_binary(rng);
          const Spectrum s = Spectrum::from_raw({std::max(l, 1.0 - l), std::min(l, 1.0 - l)});
          const double v = spectrum_functional(functional, s);
          acc.sum += v;
          acc.sum_sq += v * v;
          ++acc.n;
        }
      } else {
        BuresHallChain chain(bh->d_a, bh->d_b, rng, 10000, 10);
        for (std::int64_t i = lo; i < hi; ++i) {
          const double v = spectrum_functional(functional, chain.next());
          acc.sum += v;
          acc.sum_sq += v * v;
          ++acc.n;
        }
      }
    } else {
      const auto& cd = std::get<CliffordDopedSpec>(spec);
      const int cut = cd.cut < 0 ? cd.n / 2 : cd.cut;
      for (std::int64_t i = lo; i < hi; ++i) {
        const BipartitePureState psi = doped_state(cd.n, cd.k, cd.theta, rng, cut);
        double v;
        if (functional == Functional::V) {
          v = capacity(reduced_spectrum_cut(psi.amplitudes(), cd.n, cut));
        } else {
          const ReducedMoments mom = reduced_moments(psi.amplitudes(), cd.n, cut);
          v = functional_from_moments(functional, mom.z2, mom.z3);
        }
        acc.sum += v;
        acc.sum_sq += v * v;
        ++acc.n;
      }
    }
    blocks[static_cast<std::size_t>(b)] = acc;
  };

  if (threads == 1) {
    for (int b = 0; b < kBlocks; ++b) run_block(b);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (int b = next.fetch_add(1); b < kBlocks; b = next.fetch_add(1)) run_block(b);
      });
    for (auto& th : pool) th.join();
  }

  double total = 0.0, total_sq = 0.0;
  std::int64_t count = 0;
  for (const auto& b : blocks) {  // fixed reduction order
    total += b.sum;
    total_sq += b.sum_sq;
    count += b.n;
  }
  const double mean = total / static_cast<double>(count);

  // The Metropolis blocks are autocorrelated within a chain, so their iid
  // standard error would be optimistic; use the spread of the independent
  // per-chain (per-block) means instead, and compare the two halves as a
  // convergence diagnostic.
  if (const auto* bh = std::get_if<BuresHallSpec>(&spec); bh && !(bh->d_a == 2 && bh->d_b == 2)) {
    if (count < kBlocks) throw BadDims("mc_estimate: Bures-Hall chains need n >= 64");
    double bm = 0.0, bv = 0.0, m1 = 0.0, m2 = 0.0;
    for (int b = 0; b < kBlocks; ++b) {
      const double x = blocks[b].sum / static_cast<double>(blocks[b].n);
      bm += x;
      bv += x * x;
      (b < kBlocks / 2 ? m1 : m2) += x;
    }
    bm /= kBlocks;
    bv = std::max(0.0, bv / kBlocks - bm * bm) * kBlocks / (kBlocks - 1.0);
    const double se = std::sqrt(bv / kBlocks);
    m1 /= kBlocks / 2;
    m2 /= kBlocks / 2;
    if (std::abs(m1 - m2) > 6.0 * std::sqrt(bv * (2.0 / (kBlocks / 2))))
      throw ChainNotConverged("bures-hall chain halves disagree");
    return {mean, se, count, seed};
  }

  const double var = std::max(0.0, total_sq / static_cast<double>(count) - mean * mean);
  const double sd = count > 1 ? std::sqrt(var * static_cast<double>(count) /
                                          static_cast<double>(count - 1))
                              : 0.0;
  return {mean, sd / std::sqrt(static_cast<double>(count)), count, seed};
}

double haar_mean_purity(int d_a, int d_b) {
  const double d = static_cast<double>(d_a) * d_b;
  return (d_a + d_b) / (d + 1.0);
}

double haar_mean_cube(int d_a, int d_b) {
  const double d = static_cast<double>(d_a) * d_b;
  const double a = d_a, b = d_b;
  return (a * a + b * b + 3.0 * a * b + 1.0) / ((d + 1.0) * (d + 2.0));
}

double haar_mean_F(int d_a, int d_b) {
  const double d = static_cast<double>(d_a) * d_b;
  const double a = d_a, b = d_b;
  return (a * a - 1.0) * (b * b - 1.0) / ((d + 1.0) * (d + 2.0) * (d + 3.0));
}

double haar_var_F(int d_a, int d_b) {
  const double a = d_a, b = d_b;
  const double d = a * b;
  const double poly = 2.0 * std::pow(a, 6) * std::pow(b, 4) +
                      7.0 * std::pow(a, 5) * std::pow(b, 3) * (b * b - 2.0) +
                      std::pow(a, 4) * b * b * (2.0 * std::pow(b, 4) - 5.0 * b * b - 62.0) -
                      7.0 * std::pow(a, 3) * b * (2.0 * std::pow(b, 4) + 11.0 * b * b - 26.0) +
                      a * a * (-62.0 * std::pow(b, 4) + 413.0 * b * b + 588.0) +
                      2.0 * a * b * (91.0 * b * b + 683.0) + 84.0 * (7.0 * b * b + 2.0);
  const double denom = std::pow((d + 1.0) * (d + 2.0) * (d + 3.0), 2) * (d + 4.0) * (d + 5.0) *
                       (d + 6.0) * (d + 7.0);
  return (a * a - 1.0) * (b * b - 1.0) * poly / denom;
}

double bures_mean_F(int d) {
  const int root = static_cast<int>(std::llround(std::sqrt(static_cast<double>(d))));
  if (d < 4 || root * root != d) throw BadDims("bures_mean_F: d must be a perfect square >= 4");
  const double dd = d;
  return (dd - 1.0) * (7.0 * dd - 8.0) / (4.0 * (dd + 2.0) * (dd + 4.0) * (dd + 6.0));
}

double clifford_mean_F(int d, int k, double theta) {
  if (k < 0) throw BadDims("clifford_mean_F: k must be >= 0");
  int n = 0;
  for (int dd = d; dd > 1; dd >>= 1) {
    if (dd & 1) throw BadDims("clifford_mean_F: d must be a power of two");
    ++n;
  }
  if (d < 4 || n % 2 != 0) throw BadDims("clifford_mean_F: d must be 4^m");
  const double dd = d;
  const double f =
      (7.0 * dd * dd - 3.0 * dd + dd * (dd + 3.0) * std::cos(4.0 * theta) - 8.0) /
      (8.0 * (dd * dd - 1.0));
  return (5.0 * dd + 1.0) / ((dd + 1.0) * (dd + 2.0)) -
         (2.0 * (2.0 * dd * dd + 9.0 * dd + 1.0) + (dd - 1.0) * (dd - 1.0) * std::pow(f, k)) /
             ((dd + 1.0) * (dd + 2.0) * (dd + 3.0));
}

double pdf_F_haar_binary(double f) {
  if (!(f > 0.0) || !(f < 1.0 / 16.0)) throw OutOfSupport("pdf_F_haar_binary: f outside (0, 1/16)");
  const double s = std::sqrt(1.0 - 16.0 * f);
  return 3.0 * M_SQRT2 * (std::sqrt((s - 1.0) * (16.0 * f - 1.0)) / (1.0 - 16.0 * f) +
                          std::sqrt(1.0 / s + 1.0 / (1.0 - 16.0 * f)));
}

double pdf_F_bures_binary(double f) {
  if (!(f > 0.0) || !(f < 1.0 / 16.0))
    throw OutOfSupport("pdf_F_bures_binary: f outside (0, 1/16)");
  return 4.0 / (M_PI * std::sqrt(f * (1.0 - 16.0 * f)));
}

double pdf_logl_haar_binary(double x) {
  const double x_max = std::log2(9.0 / 8.0);
  if (!(x > 0.0) || !(x < x_max))
    throw OutOfSupport("pdf_logl_haar_binary: x outside (0, log2(9/8))");
  using C = std::complex<double>;
  const double p1 = std::exp2(x + 1.0);  // 2^(x+1)
  const C st = std::sqrt(C(9.0 - 4.0 * p1, 0.0));
  const C a = st - p1 + 3.0;
  const C b = st + p1 - 3.0;
  const C t1 = std::sqrt(a) * (2.0 * p1 * st - 3.0 * st + 4.0 * p1 - 9.0) /
               (18.0 - 17.0 * p1 + 4.0 * p1 * p1);
  const C t2 = (st - 3.0) * (3.0 * st + 2.0 * p1 - 9.0) /
               (std::sqrt(b) * (3.0 * st + 4.0 * p1 - 9.0));
  const C val = (2.0 * a * std::abs(t1) - 2.0 * b * std::abs(t2)) *
                std::exp2(0.5 * (-3.0 * x - 7.0)) * std::log(8.0);
  return val.real();
}

double cdf_F_haar_binary(double f) {
  if (f <= 0.0) return 0.0;
  if (f >= 1.0 / 16.0) return 1.0;
  const double s = std::sqrt(1.0 - 16.0 * f);
  const double t_plus = 0.5 * (1.0 + s);
  const double t_minus = 0.5 * (1.0 - s);
  return 1.0 - (std::pow(t_plus, 1.5) - std::pow(t_minus, 1.5));
}

double cdf_F_bures_binary(double f) {
  if (f <= 0.0) return 0.0;
  if (f >= 1.0 / 16.0) return 1.0;
  // P_u(u) = (4/pi) u^2 / sqrt(1-u^2); F <= f outside (u_-, u_+)
  const double s = std::sqrt(1.0 - 16.0 * f);
  auto tail = [](double u) {  // integral of P_u on [u, 1]
    return 1.0 - 2.0 / M_PI * (std::asin(u) - u * std::sqrt(1.0 - u * u));
  };
  const double u_minus = std::sqrt(0.5 * (1.0 - s));
  const double u_plus = std::sqrt(0.5 * (1.0 + s));
  return 1.0 - (tail(u_minus) - tail(u_plus));
}

DensityTable mapped_pdf(const std::function<double(double)>& base_density,
                        const std::function<double(double)>& map,
                        const std::function<double(double)>& map_derivative,
                        const std::vector<double>& targets) {
  constexpr int kMesh = 4096;
  constexpr double kFlatTol = 1e-13;

  // locate monotone segments from derivative sign changes
  std::vector<double> knots;
  knots.push_back(0.0);
  double prev = map_derivative(0.0);
  bool seen_nonflat = false;
  int flat_run = 0;
  for (int i = 1; i <= kMesh; ++i) {
    const double l = static_cast<double>(i) / kMesh;
    const double der = map_derivative(l);
    if (std::abs(der) > kFlatTol) seen_nonflat = true;
    flat_run = std::abs(der) <= kFlatTol ? flat_run + 1 : 0;
    if (flat_run > kMesh / 16) throw DerivativeZero("mapped_pdf: map is flat on a segment");
    if ((prev < 0.0) != (der < 0.0) && std::abs(prev) > 0.0) {
      // bracket the critical point by bisection on the derivative sign
      double lo = static_cast<double>(i - 1) / kMesh, hi = l;
      double dlo = prev;
      for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double dm = map_derivative(mid);
        if ((dm < 0.0) == (dlo < 0.0)) {
          lo = mid;
          dlo = dm;
        } else {
          hi = mid;
        }
      }
      knots.push_back(0.5 * (lo + hi));
    }
    prev = der;
  }
  knots.push_back(1.0);
  if (!seen_nonflat) throw DerivativeZero("mapped_pdf: map is constant");

  DensityTable table;
  table.value = targets;
  table.density.assign(targets.size(), 0.0);
  table.excluded.assign(targets.size(), 0);

  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    const double target = targets[ti];
    double acc = 0.0;
    bool excluded = false;
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
      double lo = knots[k], hi = knots[k + 1];
      double flo = map(lo), fhi = map(hi);
      const bool increasing = fhi >= flo;
      double fmin = std::min(flo, fhi), fmax = std::max(flo, fhi);
      if (target < fmin || target > fmax) continue;
      // bisection for the preimage inside the monotone segment
      for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = map(mid);
        if ((fm < target) == increasing)
          lo = mid;
        else
          hi = mid;
      }
      const double root = 0.5 * (lo + hi);
      const double der = map_derivative(root);
      if (std::abs(der) < 1e-10) {
        excluded = true;
        continue;
      }
      acc += base_density(root) / std::abs(der);
    }
    table.density[ti] = acc;
    table.excluded[ti] = excluded ? 1 : 0;
  }
  return table;
}

}  // namespace antiflat
