// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/reproduce.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "antiflat/dynamics.hpp"
#include "antiflat/ensembles.hpp"
#include "antiflat/geometry.hpp"
#include "antiflat/ordering.hpp"
#include "antiflat/quantifiers.hpp"
#include "antiflat/statevector.hpp"

namespace antiflat {

namespace {

std::string fmt(double x, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << x;
  return os.str();
}

CheckResult sigma_check(const std::string& name, const MCEstimate& est, double analytic) {
  const double dist = est.stderr_ > 0.0 ? std::abs(est.mean - analytic) / est.stderr_
                                        : (est.mean == analytic ? 0.0 : 1e99);
  CheckResult r;
  r.name = name;
  r.pass = dist <= 3.0;
  r.detail = "mc=" + fmt(est.mean) + " analytic=" + fmt(analytic) + " sigma=" + fmt(dist, 3) +
             " (n=" + std::to_string(est.n_samples) + ")";
  return r;
}

Spectrum dirichlet_spectrum(int d, RandomStream& rng) {
  Eigen::VectorXd w(d);
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    double x = rng.uniform01();
    while (x == 0.0) x = rng.uniform01();
    w[i] = -std::log(x);
    sum += w[i];
  }
  w /= sum;
  return Spectrum::from_raw(std::move(w));
}

// ---------------------------------------------------------------- criteria

std::vector<CheckResult> haar_2x2_mean(const RunConfig& cfg) {
  const MCEstimate est = mc_estimate(HaarSpec{2, 2}, Functional::F, 100000, cfg.seed, cfg.threads);
  return {sigma_check("haar-2x2-mean: E[F] vs 3/70", est, 3.0 / 70.0)};
}

std::vector<CheckResult> haar_general_means(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  int which = 0;
  for (auto [da, db] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 8}}) {
    const MCEstimate est = mc_estimate(HaarSpec{da, db}, Functional::F, 100000,
                                       cfg.seed + 101 * which++, cfg.threads);
    out.push_back(sigma_check("haar-means: E[F] at (" + std::to_string(da) + "," +
                                  std::to_string(db) + ")",
                              est, haar_mean_F(da, db)));
  }
  return out;
}

struct HistogramDeviation {
  double sup_rel = 0.0;      // max |emp - exact| / max exact (interior bins)
  double per_bin_rel = 0.0;  // max per-bin |emp - exact| / exact
  int worst_bin = -1;
};

/// Deviation of an empirical histogram from exact bin probabilities over
/// interior bins [1, bins-2]. The headline figure is the sup-norm deviation
/// normalized by the largest bin probability; under the true density its
/// noise scale is ~0.5%, so the 5% gate is decisive. The per-bin relative
/// maximum is reported as well (its own noise scale at 1e6 samples is
/// already ~5% in the thin bins).
HistogramDeviation interior_histogram_deviation(const std::vector<std::int64_t>& counts,
                                                std::int64_t n, double sup,
                                                const std::function<double(double)>& cdf) {
  const int bins = static_cast<int>(counts.size());
  HistogramDeviation dev;
  double max_abs = 0.0, max_p = 0.0;
  for (int b = 1; b + 1 < bins; ++b) {
    const double lo = sup * b / bins;
    const double hi = sup * (b + 1) / bins;
    const double p = cdf(hi) - cdf(lo);
    const double abs_dev = std::abs(static_cast<double>(counts[b]) / n - p);
    max_p = std::max(max_p, p);
    if (abs_dev > max_abs) {
      max_abs = abs_dev;
      dev.worst_bin = b;
    }
    dev.per_bin_rel = std::max(dev.per_bin_rel, abs_dev / p);
  }
  dev.sup_rel = max_abs / max_p;
  return dev;
}

std::vector<CheckResult> haar_2x2_pdf(const RunConfig& cfg) {
  const std::int64_t n = 1000000;
  const int bins = 200;
  const double sup = 1.0 / 16.0;
  std::vector<std::int64_t> counts(bins, 0);
  RandomStream rng = RandomStream(cfg.seed).split(0x511);
  for (std::int64_t i = 0; i < n; ++i) {
    double g[8];
    double norm2 = 0.0;
    for (double& x : g) {
      x = rng.gaussian();
      norm2 += x * x;
    }
    // reduced purity of a two-qubit pure state from the 2x2 amplitude matrix
    const Cplx a(g[0], g[1]), b(g[2], g[3]), c(g[4], g[5]), d(g[6], g[7]);
    const double det2 = std::norm(a * d - b * c) / (norm2 * norm2);
    const double z2 = 1.0 - 2.0 * det2;
    const double lam = 0.5 * (1.0 + std::sqrt(std::max(0.0, 2.0 * z2 - 1.0)));
    const double f = (1.0 - 2.0 * lam) * (1.0 - 2.0 * lam) * lam * (1.0 - lam);
    const int bin = std::min(bins - 1, static_cast<int>(f / sup * bins));
    ++counts[bin];
  }
  const HistogramDeviation dev =
      interior_histogram_deviation(counts, n, sup, cdf_F_haar_binary);
  CheckResult r;
  r.name = "haar-2x2-pdf: histogram vs analytic density";
  r.pass = dev.sup_rel < 0.05;
  r.detail = "sup-norm rel deviation " + fmt(dev.sup_rel, 4) + " (per-bin max " +
             fmt(dev.per_bin_rel, 4) + " at bin " + std::to_string(dev.worst_bin) +
             "; 198 interior bins, n=1e6)";
  return {r};
}

std::vector<CheckResult> bures_hall_checks(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  const MCEstimate binary =
      mc_estimate(BuresHallSpec{2, 2}, Functional::F, 100000, cfg.seed + 3, cfg.threads);
  out.push_back(sigma_check("bures-hall: binary sampler E[F] vs 1/32", binary, 1.0 / 32.0));

  // histogram of F under the rejection sampler
  const std::int64_t n = 1000000;
  const int bins = 200;
  const double sup = 1.0 / 16.0;
  std::vector<std::int64_t> counts(bins, 0);
  RandomStream rng = RandomStream(cfg.seed).split(0x512);
  for (std::int64_t i = 0; i < n; ++i) {
    const double l = bures_hall_sample_binary(rng);
    const double f = (1.0 - 2.0 * l) * (1.0 - 2.0 * l) * l * (1.0 - l);
    ++counts[std::min(bins - 1, static_cast<int>(f / sup * bins))];
  }
  const HistogramDeviation dev =
      interior_histogram_deviation(counts, n, sup, cdf_F_bures_binary);
  CheckResult hist;
  hist.name = "bures-hall: histogram vs analytic density";
  hist.pass = dev.sup_rel < 0.05;
  hist.detail = "sup-norm rel deviation " + fmt(dev.sup_rel, 4) + " (per-bin max " +
                fmt(dev.per_bin_rel, 4) + " at bin " + std::to_string(dev.worst_bin) + ")";
  out.push_back(hist);

  // Metropolis chains targeting the same (2, 2) joint density: their mean
  // of F must agree with the rejection sampler within combined errors
  const int chains = 32;
  const int draws = 2000;
  double cm = 0.0, cv = 0.0;
  for (int c = 0; c < chains; ++c) {
    BuresHallChain chain(2, 2, RandomStream(cfg.seed).split(0x513 + c), 10000, 10);
    double acc = 0.0;
    for (int i = 0; i < draws; ++i) acc += linear_renyi_spread(chain.next());
    acc /= draws;
    cm += acc;
    cv += acc * acc;
  }
  cm /= chains;
  cv = std::max(0.0, cv / chains - cm * cm) * chains / (chains - 1.0);
  const double chain_se = std::sqrt(cv / chains);
  const double se = std::hypot(chain_se, binary.stderr_);
  CheckResult agree;
  agree.name = "bures-hall: Metropolis chain agrees with the binary sampler";
  agree.pass = std::abs(cm - binary.mean) <= 3.0 * se;
  agree.detail = "chain=" + fmt(cm) + " binary=" + fmt(binary.mean) + " sigma=" +
                 fmt(std::abs(cm - binary.mean) / se, 3);
  out.push_back(agree);
  return out;
}

std::vector<CheckResult> clifford_checks(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  // k = 0: every sample is a stabilizer state with an exactly flat spectrum
  for (int n : {2, 4}) {
    RandomStream rng = RandomStream(cfg.seed).split(0x520 + n);
    double worst = 0.0;
    const int samples = 400;
    for (int i = 0; i < samples; ++i) {
      CVec psi = zero_state(n);
      apply_clifford(psi, CliffordTableau::random(n, rng));
      const ReducedMoments m = reduced_moments(psi, n, n / 2);
      worst = std::max(worst, std::abs(m.z3 - m.z2 * m.z2));
    }
    CheckResult r;
    r.name = "clifford: k=0 flatness at n=" + std::to_string(n);
    r.pass = worst <= 1e-12;
    r.detail = "max |F| over " + std::to_string(samples) + " samples = " + fmt(worst, 3);
    out.push_back(r);
  }
  // doped means against the closed formula
  for (int k : {1, 2, 3}) {
    const MCEstimate est = mc_estimate(CliffordDopedSpec{2, k, M_PI / 4}, Functional::F, 100000,
                                       cfg.seed + 7 * k, cfg.threads);
    out.push_back(sigma_check("clifford: doped mean at n=2, theta=pi/4, k=" + std::to_string(k),
                              est, clifford_mean_F(4, k, M_PI / 4)));
  }
  // algebraic limits of the closed formula
  bool algebra = true;
  std::string worst;
  for (int d : {4, 16, 64, 256, 1024}) {
    const int root = static_cast<int>(std::llround(std::sqrt(static_cast<double>(d))));
    if (std::abs(clifford_mean_F(d, 0, 0.9)) > 1e-12) {
      algebra = false;
      worst = "k=0 at d=" + std::to_string(d);
    }
    if (std::abs(clifford_mean_F(d, 100000, M_PI / 4) - haar_mean_F(root, root)) > 1e-12) {
      algebra = false;
      worst = "k->inf at d=" + std::to_string(d);
    }
  }
  CheckResult alg;
  alg.name = "clifford: closed-formula limits (k=0 and k->inf), d in {4..1024}";
  alg.pass = algebra;
  alg.detail = algebra ? "both limits at 1e-12" : ("failed " + worst);
  out.push_back(alg);
  return out;
}

std::vector<CheckResult> maxima_checks(const RunConfig&) {
  std::vector<CheckResult> out;
  bool pass_f = true, pass_l = true;
  std::string detail_f, detail_l;
  double prev = 0.0;
  for (int d = 2; d <= 10; ++d) {
    // independent numeric maximization of the jump objectives
    auto f_obj = [d](double r) { return linear_renyi_spread(jump_spectrum(r, 1, d - 1, d)); };
    auto l_obj = [d](double r) { return log_antiflatness(jump_spectrum(r, 1, d - 1, d)); };
    auto numeric_max = [](const std::function<double(double)>& f) {
      double lo = 0.0, hi = 0.5;
      for (int it = 0; it < 200; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        (f(m1) < f(m2) ? lo : hi) = (f(m1) < f(m2) ? m1 : m2);
      }
      const double h = 2e-6;
      double wl = 0.5 * (lo + hi) - 64 * h, wr = 0.5 * (lo + hi) + 64 * h;
      auto slope = [&](double r) { return f(r + h) - f(r - h); };
      if (slope(wl) > 0 && slope(wr) < 0) {
        for (int it = 0; it < 120 && wr - wl > 1e-14; ++it) {
          const double mid = 0.5 * (wl + wr);
          (slope(mid) > 0 ? wl : wr) = mid;
        }
      }
      return 0.5 * (wl + wr);
    };
    const double rf = numeric_max(f_obj);
    const Extremum ef = max_linear_spread(d);
    if (std::abs(rf - ef.r_max) > 1e-7 || std::abs(f_obj(rf) - ef.value) > 1e-10) {
      pass_f = false;
      detail_f = "d=" + std::to_string(d);
    }
    if (!(ef.value < 27.0 / 256.0 && ef.value > prev)) {
      pass_f = false;
      detail_f = "monotonicity at d=" + std::to_string(d);
    }
    prev = ef.value;
    const double rl = numeric_max(l_obj);
    const Extremum el = max_log_antiflatness(d);
    if (std::abs(rl - el.r_max) > 1e-7 || std::abs(l_obj(rl) - el.value) > 1e-10 ||
        !(el.value < std::log(2.0))) {
      pass_l = false;
      detail_l = "d=" + std::to_string(d);
    }
  }
  out.push_back({"maxima: linear-spread closed forms vs numeric search, d=2..10", pass_f,
                 pass_f ? "values at 1e-10, N_F below 27/256 and increasing" : detail_f});
  const Extremum e2 = max_log_antiflatness(2);
  const bool piecewise = std::abs(e2.r_max - (3.0 - std::sqrt(3.0)) / 6.0) < 1e-14 &&
                         max_log_antiflatness(7).r_max == 0.5 &&
                         max_log_antiflatness(10).r_max == 0.5;
  out.push_back({"maxima: log-antiflatness piecewise closed forms, d=2..10", pass_l && piecewise,
                 pass_l && piecewise ? "values at 1e-10, N below log 2" : detail_l});
  const Extremum cap2 = max_capacity(2);
  out.push_back({"maxima: capacity maximizer at d=2", std::abs(cap2.r_max - 0.0832217) < 1e-5,
                 "r_max=" + fmt(cap2.r_max, 8) + " vs 0.0832217"});
  return out;
}

std::vector<CheckResult> identity_checks(const RunConfig& cfg) {
  RandomStream rng = RandomStream(cfg.seed).split(0x700);
  double worst_deriv = 0.0, worst_escort = 0.0;
  double worst_euclid = 0.0, worst_cov = 0.0, worst_part = 0.0;
  bool error_shrinks = true;
  const double h = 1e-4;
  for (int trial = 0; trial < 1000; ++trial) {
    const Spectrum s = dirichlet_spectrum(2 + trial % 7, rng);
    const double v = capacity(s);
    const double slope = (renyi_entropy(s, 1.0 + h) - renyi_entropy(s, 1.0 - h)) / (2.0 * h);
    worst_deriv = std::max(worst_deriv, std::abs(-2.0 * slope - v));

    // first-order convergence in eps: the error at eps/2 is at most ~half
    // the error at eps, up to the 2/eps^2 * ulp roundoff floor (~1e-9 at
    // eps = 5e-4), which near-flat spectra can reach
    const double e1 = std::abs(escort_curvature_capacity(s, 1e-3) - v);
    const double e2 = std::abs(escort_curvature_capacity(s, 5e-4) - v);
    worst_escort = std::max(worst_escort, e1 / std::max(v, 1e-12));
    if (e2 > 0.75 * e1 + 4e-9) error_shrinks = false;

    worst_euclid =
        std::max(worst_euclid, std::abs(euclidean_spread_identity(s) - linear_renyi_spread(s)));
    worst_cov = std::max(worst_cov, std::abs(cov_unification(s) - log_antiflatness(s)));
    for (double alpha : {0.5, 2.0, 3.0, 5.0}) {
      const double via = std::exp((1.0 - alpha) * renyi_entropy(s, alpha));
      worst_part = std::max(worst_part, std::abs(via - partition_function(s, alpha)));
    }
  }
  std::vector<CheckResult> out;
  out.push_back({"identities: -2 dS/da at a=1 equals the capacity", worst_deriv < 1e-6,
                 "max |dev| = " + fmt(worst_deriv, 3) + " (tol 1e-6)"});
  const bool escort_ok = worst_escort < 5e-3 && error_shrinks;
  out.push_back({"identities: escort KL curvature converges to the capacity", escort_ok,
                 "max rel err " + fmt(worst_escort, 3) + std::string(", halving eps shrinks the error: ") +
                     (error_shrinks ? "yes" : "no")});
  out.push_back({"identities: mean Euclidean divergence equals F", worst_euclid < 1e-12,
                 "max |dev| = " + fmt(worst_euclid, 3)});
  out.push_back({"identities: log(1 + F/Z2^2) equals the log antiflatness", worst_cov < 1e-12,
                 "max |dev| = " + fmt(worst_cov, 3)});
  out.push_back({"identities: exp((1-a) S_a) equals Z_a", worst_part < 1e-12,
                 "max |dev| = " + fmt(worst_part, 3)});
  return out;
}

std::vector<CheckResult> app_g_table(const RunConfig&) {
  const Spectrum sigma = Spectrum::from_raw({0.71, 0.29});
  const Spectrum rho = Spectrum::from_raw({0.51, 0.49});
  const RenyiGrid grid({RenyiIndex::finite(0.5), RenyiIndex::one(), RenyiIndex::finite(2.0),
                        RenyiIndex::finite(4.0), RenyiIndex::finite(8.0),
                        RenyiIndex::infinity()});
  const GProfile profile = g_profile(sigma, rho, grid);
  const double expected[] = {-0.0472, -0.0908, -0.1621, -0.2448, -0.3002, -0.3309};
  bool pass = true;
  std::ostringstream os;
  os.precision(4);
  os << std::fixed;
  for (int i = 0; i < 6; ++i) {
    if (std::abs(profile.values[i] - expected[i]) > 5e-5) pass = false;
    os << (i ? " " : "") << profile.values[i];
  }
  return {{"ordering: reference profile table at alphas {0.5,1,2,4,8,inf}", pass, os.str()}};
}

std::vector<CheckResult> app_c_pair(const RunConfig&) {
  const double root77 = std::sqrt(77.0);
  const Spectrum sigma = Spectrum::from_raw({22.0 / 40, (9 + root77) / 40, (9 - root77) / 40, 0.0});
  const Spectrum rho = Spectrum::from_raw({0.5, 0.5, 0.0, 0.0});
  const auto& grid = RenyiGrid::default_grid();
  const OrderVerdict af = af_compare(rho, sigma, grid);
  const OrderVerdict maj = standard_majorizes(rho, sigma);
  const bool pass = af.relation == Relation::SecondDominates &&
                    maj.relation == Relation::Incomparable && maj.witness &&
                    maj.witness->i == 2 && std::abs(maj.witness->lhs - 1.0) < 1e-12 &&
                    std::abs(maj.witness->rhs - 0.994374) < 1e-4;
  std::string detail = std::string("antiflat ") + relation_name(af.relation) +
                       ", majorization " + relation_name(maj.relation);
  if (maj.witness)
    detail += " (k=" + std::to_string(maj.witness->i) + ": " + fmt(maj.witness->lhs, 5) + " vs " +
              fmt(maj.witness->rhs, 5) + ")";
  return {{"ordering: iso-purity pair is AF-ordered but majorization-incomparable", pass, detail}};
}

std::vector<CheckResult> ordering_checks(const RunConfig& cfg) {
  std::vector<CheckResult> out = app_g_table(cfg);
  {
    auto pair = app_c_pair(cfg);
    out.insert(out.end(), pair.begin(), pair.end());
  }
  const auto& grid = RenyiGrid::default_grid();
  RandomStream rng = RandomStream(cfg.seed).split(0x800);

  // grid test vs pairwise oracle
  int mismatches = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    Spectrum a = dirichlet_spectrum(2 + trial % 5, rng);
    Spectrum b = dirichlet_spectrum(2 + (trial / 5) % 5, rng);
    if (trial % 3 == 1) {
      b = spectrum_tensor(a, dirichlet_spectrum(2, rng));
      a = a.padded(b.dim());
    }
    if (trial % 7 == 0) a = Spectrum::flat(1 + trial % b.dim(), b.dim());
    const OrderVerdict fast = af_compare(a, b, grid);
    const OrderVerdict oracle = af_compare_pairwise(a, b, grid);
    if (fast.relation != oracle.relation) ++mismatches;
  }
  out.push_back({"ordering: grid test equals the pairwise oracle on 1e4 pairs", mismatches == 0,
                 std::to_string(mismatches) + " mismatches"});

  // freezing and rank-obstruction sweeps
  int freezing_violations = 0, rank_violations = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int d = 2 + trial % 4;
    const double purity = 1.0 / d + (1.0 - 1.0 / d) * (0.01 + 0.99 * rng.uniform01());
    const Spectrum a = iso_purity_sample(d, purity, rng);
    const Spectrum b = iso_purity_sample(d, purity, rng);
    const Relation rel = standard_majorizes(a, b).relation;
    if ((rel == Relation::FirstDominates || rel == Relation::SecondDominates) &&
        (a.weights() - b.weights()).cwiseAbs().maxCoeff() > 1e-4)
      ++freezing_violations;
    if (!rank_obstruction_check(a, b, grid, 1e-6)) ++rank_violations;
  }
  out.push_back({"ordering: freezing of standard majorization (1e4 iso-purity pairs)",
                 freezing_violations == 0, std::to_string(freezing_violations) + " violations"});
  out.push_back({"ordering: rank obstruction sweep (1e4 pairs)", rank_violations == 0,
                 std::to_string(rank_violations) + " violations"});
  return out;
}

std::vector<CheckResult> volume_checks(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  const bool trivial = af_target_probability_binary(0.5, 2) == 1.0 &&
                       af_target_probability_binary(1.0, 4) == 1.0 &&
                       af_target_probability_binary(0.7, 2) == 0.0;
  out.push_back({"volume: binary target probabilities are {1 flat, 0 non-flat}", trivial,
                 trivial ? "exact" : "unexpected values"});

  double worst = 0.0;
  for (double l : {0.5, 0.62, 0.75, 0.88, 0.97}) {
    const double via_beta = accessible_interval_probability(l, 1.0, 2);
    const double closed = 1.0 - std::pow(2.0 * l - 1.0, 3.0);
    worst = std::max(worst, std::abs(via_beta - closed));
  }
  out.push_back({"volume: K=2 interval law equals the incomplete-beta evaluation", worst < 1e-10,
                 "max |dev| = " + fmt(worst, 3)});

  // Monte Carlo cross-check of an interval probability at K=2
  RandomStream rng = RandomStream(cfg.seed).split(0x900);
  const double lo = 0.6, hi = 0.9;
  const std::int64_t n = 100000;
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const BipartitePureState psi = haar_pure(2, 2, rng);
    const Spectrum s = schmidt_coefficients(psi);
    if (s[0] >= lo && s[0] <= hi) ++hits;
  }
  const double p_mc = static_cast<double>(hits) / n;
  const double p = accessible_interval_probability(lo, hi, 2);
  const double se = std::sqrt(p * (1.0 - p) / n);
  out.push_back({"volume: interval probability vs Haar Monte Carlo",
                 std::abs(p_mc - p) <= 3.0 * se,
                 "mc=" + fmt(p_mc) + " beta=" + fmt(p) + " sigma=" + fmt(std::abs(p_mc - p) / se, 3)});
  return out;
}

std::vector<CheckResult> rate_bound_checks(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  // saturating example
  CMat xx = CMat::Zero(4, 4);
  xx(0, 3) = xx(3, 0) = xx(1, 2) = xx(2, 1) = 1.0;
  const Hamiltonian h(std::move(xx), 2, 2);
  CVec zz = CVec::Zero(4);
  zz[0] = 1.0;
  const BipartitePureState psi0(std::move(zz), 2, 2);
  std::vector<double> times;
  for (int i = 0; i < 200; ++i) times.push_back(M_PI * i / 199.0);
  const auto report = rate_bound_report(h, psi0, times);
  double worst_gap = 0.0;
  int loose_violations = 0;
  bool all_satisfied = true;
  for (const auto& p : report) {
    worst_gap = std::max(worst_gap, std::abs(std::abs(p.dedt_commutator) - p.rhs));
    all_satisfied = all_satisfied && p.satisfied;
    if (!p.satisfied_loose) ++loose_violations;
  }
  out.push_back({"rate: XX saturation |dE/dt| = 4 sqrt(F) sqrt(Var) on 200 points",
                 worst_gap < 1e-9 && all_satisfied, "max |gap| = " + fmt(worst_gap, 3)});

  // random Hamiltonian sweeps
  RandomStream rng = RandomStream(cfg.seed).split(0xA00);
  std::vector<double> sweep_times;
  for (int i = 0; i < 100; ++i) sweep_times.push_back(M_PI * i / 99.0);
  bool sweeps_ok = true;
  int sweep_loose_violations = 0;
  bool consistent_variant_ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const int db = trial % 2 == 0 ? 2 : 4;
    const Eigen::Index dim = 2 * db;
    CMat g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = Cplx(rng.gaussian(), rng.gaussian());
    const Hamiltonian hr(0.5 * (g + g.adjoint()), 2, db);
    const BipartitePureState start = haar_pure(2, db, rng);
    const double sqrt_var = std::sqrt(hamiltonian_variance(hr, start));
    for (const auto& p : rate_bound_report(hr, start, sweep_times)) {
      sweeps_ok = sweeps_ok && p.satisfied;
      if (!p.satisfied_loose) ++sweep_loose_violations;
      if (std::abs(p.dedt_commutator) > 3.0 * std::sqrt(3.0) / 4.0 * sqrt_var + 1e-9)
        consistent_variant_ok = false;
    }
  }
  out.push_back({"rate: 100 random-H sweeps satisfy the bound at every time", sweeps_ok,
                 sweeps_ok ? "all satisfied with finite-difference slack" : "violation found"});

  // the loose 3*sqrt(3)/8 constant is checked and its violations reported;
  // the 4 sqrt(27/256) = 3 sqrt(3)/4 variant must hold
  const int total_loose = loose_violations + sweep_loose_violations;
  std::string loose_detail =
      "loose 3*sqrt(3)/8 bound exceeded at " + std::to_string(loose_violations) +
      "/200 saturation points and " + std::to_string(sweep_loose_violations) +
      " sweep points; 3*sqrt(3)/4 variant " + (consistent_variant_ok ? "holds" : "fails");
  out.push_back({"rate: loose bound checked and violations reported",
                 consistent_variant_ok && total_loose > 0, loose_detail});
  return out;
}

std::vector<CheckResult> typicality_checks(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  double prev = std::numeric_limits<double>::infinity();
  bool decreasing = true;
  std::ostringstream ratios;
  for (int m : {2, 3, 4, 5}) {
    const MCEstimate f =
        mc_estimate(HaarSpec{m, m}, Functional::F, 40000, cfg.seed + m, cfg.threads);
    const MCEstimate e =
        mc_estimate(HaarSpec{m, m}, Functional::Elin, 40000, cfg.seed + 11 * m, cfg.threads);
    const double ratio = f.mean / e.mean;
    ratios << (m > 2 ? " " : "") << fmt(ratio, 4);
    decreasing = decreasing && ratio < prev;
    prev = ratio;
  }
  out.push_back({"typicality: E[F]/E[E_lin] strictly decreasing over d_A=2..5", decreasing,
                 "ratios " + ratios.str()});

  bool bounded = true;
  std::ostringstream scaled;
  for (int m : {2, 4, 8}) {
    const double d = static_cast<double>(m) * m;
    const double v = haar_var_F(m, m) * d * d * d;
    scaled << (m > 2 ? " " : "") << fmt(v, 4);
    bounded = bounded && v < 12.0;
  }
  out.push_back({"typicality: Var[F] d^3 bounded over d in {4,16,64}", bounded,
                 "scaled variances " + scaled.str()});
  return out;
}

std::vector<CheckResult> dephasing_checks(const RunConfig&) {
  std::vector<CheckResult> out;
  // qubit-pair basis example
  const double r2 = std::sqrt(2.0);
  CMat basis = CMat::Zero(4, 4);
  basis.col(0) << 1.0 / std::sqrt(3.0), r2 / std::sqrt(3.0), 0, 0;
  basis.col(1) << (2.0 - r2) / std::sqrt(9.0 - 6.0 * r2), (1.0 - r2) / std::sqrt(9.0 - 6.0 * r2),
      0, 0;
  basis.col(2) << 0, 0, 1.0 / std::sqrt(3.0), r2 / std::sqrt(3.0);
  basis.col(3) << 0, 0, r2 / std::sqrt(3.0), -1.0 / std::sqrt(3.0);
  CMat rho00 = CMat::Zero(4, 4);
  rho00(0, 0) = 1.0;
  const Spectrum pair =
      eigen_spectrum(dephase(DensityMatrix(std::move(rho00)), OrthonormalBasis(std::move(basis))));
  const bool pair_ok =
      std::abs(pair[0] - 2.0 / 3.0) < 1e-10 && std::abs(pair[1] - 1.0 / 3.0) < 1e-10;
  out.push_back({"dephasing: qubit-pair basis yields weights (2/3, 1/3)", pair_ok,
                 "weights (" + fmt(pair[0], 10) + ", " + fmt(pair[1], 10) + ")"});

  // four-qubit stabilizer-basis example
  CMat proj = CMat::Zero(16, 16);
  for (int i = 0; i < 10; ++i) proj(i, i) = 0.1;
  CMat had = CMat::Zero(16, 16);
  const double inv_r2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < 16; ++j) {
    const int low = j & 7;
    had(low, j) = inv_r2;
    had(8 + low, j) = (j & 8) ? -inv_r2 : inv_r2;
  }
  const Spectrum stab =
      eigen_spectrum(dephase(DensityMatrix(std::move(proj)), OrthonormalBasis(std::move(had))));
  bool stab_ok = true;
  for (int i = 0; i < 4; ++i) stab_ok = stab_ok && std::abs(stab[i] - 0.1) < 1e-10;
  for (int i = 4; i < 16; ++i) stab_ok = stab_ok && std::abs(stab[i] - 0.05) < 1e-10;
  out.push_back({"dephasing: 4-qubit stabilizer basis yields {1/10 x4, 1/20 x12}", stab_ok,
                 stab_ok ? "spectrum reproduced at 1e-10" : "spectrum mismatch"});

  // dephasing the environment is invisible to the reduced state
  RandomStream rng(0xB00);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const BipartitePureState psi = haar_pure(2, 3, rng);
    const DensityMatrix full = density_from_pure(psi);
    CMat gauss(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) gauss(i, j) = Cplx(rng.gaussian(), rng.gaussian());
    const CMat v = Eigen::HouseholderQR<CMat>(gauss).householderQ();
    CMat dephased = CMat::Zero(6, 6);
    for (int b = 0; b < 3; ++b) {
      CMat proj = CMat::Zero(6, 6);
      const CMat theta = v.col(b) * v.col(b).adjoint();
      for (int a = 0; a < 2; ++a) proj.block(a * 3, a * 3, 3, 3) = theta;
      dephased += proj * full.entries() * proj;
    }
    const CMat before = partial_trace_b(full, 2, 3).entries();
    const CMat after = partial_trace_b(DensityMatrix(std::move(dephased)), 2, 3).entries();
    worst = std::max(worst, (before - after).cwiseAbs().maxCoeff());
  }
  out.push_back({"dephasing: environment dephasing leaves the reduced state fixed", worst < 1e-10,
                 "max |dev| = " + fmt(worst, 3)});
  return out;
}

}  // namespace

std::vector<std::string> reproduce_target_names() {
  return {"haar-2x2-mean", "haar-means",  "haar-2x2-pdf", "bures-hall",
          "clifford",      "maxima",      "identities",   "ordering",
          "appG-table",    "appC-pair",   "volume",       "rate-bound",
          "typicality",    "dephasing"};
}

std::vector<CheckResult> reproduce_target(const std::string& target, const RunConfig& cfg) {
  if (target == "haar-2x2-mean") return haar_2x2_mean(cfg);
  if (target == "haar-means") return haar_general_means(cfg);
  if (target == "haar-2x2-pdf") return haar_2x2_pdf(cfg);
  if (target == "bures-hall") return bures_hall_checks(cfg);
  if (target == "clifford") return clifford_checks(cfg);
  if (target == "maxima") return maxima_checks(cfg);
  if (target == "identities") return identity_checks(cfg);
  if (target == "ordering") return ordering_checks(cfg);
  if (target == "appG-table") return app_g_table(cfg);
  if (target == "appC-pair") return app_c_pair(cfg);
  if (target == "volume") return volume_checks(cfg);
  if (target == "rate-bound") return rate_bound_checks(cfg);
  if (target == "typicality") return typicality_checks(cfg);
  if (target == "dephasing") return dephasing_checks(cfg);
  throw Error("unknown reproduce target: " + target);
}

std::vector<CheckResult> reproduce_all(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  for (const char* target : {"haar-2x2-mean", "haar-means", "haar-2x2-pdf", "bures-hall",
                             "clifford", "maxima", "identities", "ordering", "volume",
                             "rate-bound", "typicality", "dephasing"}) {
    const auto results = reproduce_target(target, cfg);
    out.insert(out.end(), results.begin(), results.end());
  }
  return out;
}

}  // namespace antiflat
