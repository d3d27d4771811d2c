// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "antiflat/dynamics.hpp"
#include "antiflat/ensembles.hpp"
#include "antiflat/geometry.hpp"
#include "antiflat/io.hpp"
#include "antiflat/ordering.hpp"
#include "antiflat/quantifiers.hpp"
#include "antiflat/reproduce.hpp"

namespace {

using namespace antiflat;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

int thread_count(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("ANTIFLAT_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return 1;
}

RenyiGrid load_grid(const std::string& path) {
  if (path.empty()) return RenyiGrid::default_grid();
  return grid_from_json(load_json_file(path));
}

int cmd_measure(const std::string& in, const std::string& measures, bool bits) {
  const Spectrum s = spectrum_from_json(load_json_file(in));
  // entropic measures are computed in nats; --bits only rescales the output
  const double ln2 = std::log(2.0);
  Json out;
  out["schema"] = kSchema;
  out["units"] = bits ? "bits" : "nats";
  std::stringstream ss(measures);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "F")
      out["F"] = linear_renyi_spread(s);
    else if (item == "logL")
      out["logL"] = log_antiflatness(s) / (bits ? ln2 : 1.0);
    else if (item == "V")
      out["V"] = capacity(s) / (bits ? ln2 * ln2 : 1.0);
    else if (item == "gamma")
      out["gamma"] = gap_measure(s);
    else
      throw Error("unknown measure '" + item + "' (expected F, logL, V, gamma)");
  }
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

/// CSV of the quantifier curves along the one-large-weight jump family,
/// with grid-dominance flags.
int cmd_curves(int d, int points) {
  std::vector<double> r_grid;
  const double r_hi = static_cast<double>(d - 1) / d;
  for (int i = 0; i < points; ++i) r_grid.push_back(r_hi * i / (points - 1.0));
  std::cout << "r,F,logL,V,dominated\n";
  std::cout.precision(12);
  for (const ParetoPoint& p : pareto_scan(d, r_grid, RenyiGrid::default_grid()))
    std::cout << p.r << ',' << p.f << ',' << p.log_lambda << ',' << p.v << ','
              << (p.dominated ? 1 : 0) << '\n';
  return kExitOk;
}

int cmd_order(const std::string& a_path, const std::string& b_path, const std::string& grid_path) {
  const Spectrum a = spectrum_from_json(load_json_file(a_path));
  const Spectrum b = spectrum_from_json(load_json_file(b_path));
  const RenyiGrid grid = load_grid(grid_path);
  const Eigen::Index dim = std::max(a.dim(), b.dim());
  const Spectrum a_pad = a.padded(dim);
  const Spectrum b_pad = b.padded(dim);
  const OrderVerdict verdict = af_compare(a_pad, b_pad, grid);
  const GProfile profile = g_profile(b_pad, a_pad, grid);
  std::cout << verdict_to_json(verdict, &grid, &profile.values).dump(2) << '\n';
  return kExitOk;
}

int cmd_extremal(int d, const std::string& measure) {
  Extremum e{};
  std::string method;
  if (measure == "F") {
    e = max_linear_spread(d);
    method = "closed form";
  } else if (measure == "logL") {
    e = max_log_antiflatness(d);
    method = d <= 6 ? "closed form" : "closed form (r = 1/2 branch)";
  } else if (measure == "V") {
    e = max_capacity(d);
    method = "golden section + derivative bisection";
  } else {
    throw Error("unknown measure '" + measure + "' (expected F, logL, V)");
  }
  Json out;
  out["schema"] = kSchema;
  out["d"] = d;
  out["measure"] = measure;
  out["r_max"] = e.r_max;
  out["value"] = e.value;
  out["method"] = method;
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

EnsembleSpec parse_ensemble(const std::string& name, int d_a, int d_b, int n_qubits, int k,
                            double theta, int cut) {
  if (name == "haar") return HaarSpec{d_a, d_b};
  if (name == "bures-hall") return BuresHallSpec{d_a, d_b};
  if (name == "clifford") return CliffordDopedSpec{n_qubits, k, theta, cut};
  throw Error("unknown ensemble '" + name + "'");
}

Functional parse_functional(const std::string& name) {
  if (name == "F") return Functional::F;
  if (name == "logL") return Functional::LogL;
  if (name == "V") return Functional::V;
  if (name == "E_lin") return Functional::Elin;
  if (name == "purity") return Functional::Purity;
  throw Error("unknown functional '" + name + "'");
}

double analytic_mean(const EnsembleSpec& spec, Functional f) {
  if (const auto* haar = std::get_if<HaarSpec>(&spec)) {
    if (f == Functional::F) return haar_mean_F(haar->d_a, haar->d_b);
    if (f == Functional::Purity) return haar_mean_purity(haar->d_a, haar->d_b);
    if (f == Functional::Elin) return 1.0 - haar_mean_purity(haar->d_a, haar->d_b);
  } else if (const auto* bh = std::get_if<BuresHallSpec>(&spec)) {
    if (f == Functional::F && bh->d_a == bh->d_b) return bures_mean_F(bh->d_a * bh->d_b);
  } else if (const auto* cd = std::get_if<CliffordDopedSpec>(&spec)) {
    const int cut = cd->cut < 0 ? cd->n / 2 : cd->cut;
    if (f == Functional::F && 2 * cut == cd->n)
      return clifford_mean_F(1 << cd->n, cd->k, cd->theta);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

int cmd_sample(const EnsembleSpec& spec, Functional f, std::int64_t n, std::uint64_t seed,
               int threads) {
  const MCEstimate est = mc_estimate(spec, f, n, seed, threads);
  Json out;
  out["schema"] = kSchema;
  out["mean"] = est.mean;
  out["stderr"] = est.stderr_;
  out["n"] = est.n_samples;
  out["seed"] = est.seed;
  const double analytic = analytic_mean(spec, f);
  if (std::isfinite(analytic)) {
    out["analytic"] = analytic;
    out["sigma_distance"] =
        est.stderr_ > 0.0 ? std::abs(est.mean - analytic) / est.stderr_ : 0.0;
  } else {
    out["analytic"] = nullptr;
    out["sigma_distance"] = nullptr;
  }
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_pdf(const std::string& which, int bins, std::int64_t n, std::uint64_t seed) {
  double sup = 1.0 / 16.0;
  double (*density)(double) = nullptr;
  std::function<double(const Spectrum&)> value;
  EnsembleSpec spec = HaarSpec{2, 2};
  if (which == "F_haar2") {
    density = pdf_F_haar_binary;
    value = [](const Spectrum& s) { return linear_renyi_spread(s); };
  } else if (which == "F_bures2") {
    density = pdf_F_bures_binary;
    spec = BuresHallSpec{2, 2};
    value = [](const Spectrum& s) { return linear_renyi_spread(s); };
  } else if (which == "logL_haar2") {
    density = pdf_logl_haar_binary;
    sup = std::log2(9.0 / 8.0);
    value = [](const Spectrum& s) { return log_antiflatness(s) / std::log(2.0); };
  } else {
    throw Error("unknown pdf '" + which + "' (expected F_haar2, F_bures2, logL_haar2)");
  }

  std::vector<std::int64_t> counts(bins, 0);
  RandomStream rng(seed);
  for (std::int64_t i = 0; i < n; ++i) {
    Spectrum s = Spectrum::flat(2, 2);
    if (std::holds_alternative<HaarSpec>(spec)) {
      BipartitePureState psi = haar_pure(2, 2, rng);
      s = schmidt_coefficients(psi);
    } else {
      const double l = bures_hall_sample_binary(rng);
      s = Spectrum::from_raw({std::max(l, 1.0 - l), std::min(l, 1.0 - l)});
    }
    const double v = value(s);
    const int bin = std::min<int>(bins - 1, static_cast<int>(v / sup * bins));
    ++counts[bin >= 0 ? bin : 0];
  }

  std::cout << "value,density,empirical_density\n";
  std::cout.precision(10);
  for (int b = 0; b < bins; ++b) {
    const double mid = sup * (b + 0.5) / bins;
    const double width = sup / bins;
    const double emp = static_cast<double>(counts[b]) / (static_cast<double>(n) * width);
    std::cout << mid << ',' << density(mid) << ',' << emp << '\n';
  }
  return kExitOk;
}

int cmd_rate(const std::string& h_path, const std::string& psi_path, double t0, double t1,
             int steps) {
  const Hamiltonian h = hamiltonian_from_json(load_json_file(h_path));
  const BipartitePureState psi0 = state_from_json(load_json_file(psi_path));
  std::vector<double> times;
  for (int i = 0; i < steps; ++i)
    times.push_back(steps > 1 ? t0 + (t1 - t0) * i / (steps - 1.0) : t0);
  std::cout << "t,E_lin,dEdt,rhs,loose_rhs,satisfied\n";
  std::cout.precision(12);
  for (const RatePoint& p : rate_bound_report(h, psi0, times)) {
    std::cout << p.t << ',' << p.e_lin << ',' << p.dedt_numeric << ',' << p.rhs << ','
              << p.loose_rhs << ',' << (p.satisfied ? 1 : 0) << '\n';
  }
  return kExitOk;
}

int cmd_volume(int big_k, double lo, double hi) {
  Json out;
  out["schema"] = kSchema;
  out["prob"] = accessible_interval_probability(lo, hi, big_k);
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_geometry(const std::string& in, double eps) {
  const Spectrum s = spectrum_from_json(load_json_file(in));
  Json out;
  out["schema"] = kSchema;
  out["kl_curvature"] = escort_curvature_capacity(s, eps);
  out["capacity_direct"] = capacity(s);
  out["euclid_identity"] = euclidean_spread_identity(s);
  out["cov_identity"] = cov_unification(s);
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_reproduce(const std::string& target, bool all, std::uint64_t seed, int threads) {
  const RunConfig cfg{seed, threads};
  const std::vector<CheckResult> results =
      all ? reproduce_all(cfg) : reproduce_target(target, cfg);
  bool ok = true;
  for (const CheckResult& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " -- " << r.detail << '\n';
    ok = ok && r.pass;
  }
  return ok ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"antiflatness toolkit: spectra, orderings, ensembles, dynamics"};
  app.require_subcommand(1);

  int threads_flag = 0;
  app.add_option("--threads", threads_flag, "worker threads (0: ANTIFLAT_THREADS or 1)");

  std::string in_path, measures = "F,logL,V";
  bool measure_bits = false;
  auto* measure = app.add_subcommand("measure", "antiflatness measures of a spectrum");
  measure->add_option("--in", in_path, "spectrum JSON file")->required();
  measure->add_option("--measures", measures, "comma list from F,logL,V,gamma");
  measure->add_flag("--bits", measure_bits, "report logL in bits and V in bits^2");

  int curve_d = 2, curve_points = 201;
  auto* curves = app.add_subcommand("curves", "jump-family quantifier curves (CSV)");
  curves->add_option("--d", curve_d, "dimension")->required()->check(CLI::Range(2, 4096));
  curves->add_option("--points", curve_points, "grid points")->check(CLI::Range(2, 100000));

  std::string a_path, b_path, grid_path;
  auto* order = app.add_subcommand("order", "antiflat comparison of two spectra");
  order->add_option("--a", a_path, "first spectrum JSON")->required();
  order->add_option("--b", b_path, "second spectrum JSON")->required();
  order->add_option("--grid", grid_path, "grid JSON (default built-in grid)");

  int ext_d = 2;
  std::string ext_measure = "F";
  auto* extremal = app.add_subcommand("extremal", "maximal antiflatness over dimension d");
  extremal->add_option("--d", ext_d, "dimension")->required()->check(CLI::Range(2, 4096));
  extremal->add_option("--measure", ext_measure, "F, logL or V");

  std::string ens_name = "haar", functional_name = "F";
  int d_a = 2, d_b = 2, n_qubits = 2, doping = 0, cut = -1;
  double theta = M_PI / 4.0;
  std::int64_t n_samples = 100000;
  std::uint64_t seed = 0;
  auto* sample = app.add_subcommand("sample", "Monte Carlo ensemble estimate");
  sample->add_option("--ensemble", ens_name, "haar, bures-hall or clifford");
  sample->add_option("--dA", d_a, "subsystem A dimension");
  sample->add_option("--dB", d_b, "subsystem B dimension");
  sample->add_option("--qubits", n_qubits, "clifford: total qubits");
  sample->add_option("--k", doping, "clifford: doping count");
  sample->add_option("--theta", theta, "clifford: doping phase");
  sample->add_option("--cut", cut, "clifford: bipartition cut (default n/2)");
  sample->add_option("--functional", functional_name, "F, logL, V, E_lin or purity");
  sample->add_option("--n", n_samples, "sample count");
  sample->add_option("--seed", seed, "random seed");

  std::string pdf_which = "F_haar2";
  int pdf_bins = 200;
  std::int64_t pdf_n = 200000;
  std::uint64_t pdf_seed = 0;
  auto* pdf = app.add_subcommand("pdf", "analytic density with an empirical histogram (CSV)");
  pdf->add_option("--which", pdf_which, "F_haar2, F_bures2 or logL_haar2");
  pdf->add_option("--bins", pdf_bins, "histogram bins")->check(CLI::Range(3, 100000));
  pdf->add_option("--n", pdf_n, "sample count");
  pdf->add_option("--seed", pdf_seed, "random seed");

  std::string h_path, psi_path;
  double t0 = 0.0, t1 = M_PI;
  int steps = 200;
  auto* rate = app.add_subcommand("rate", "entanglement-rate bound along an evolution (CSV)");
  rate->add_option("--H", h_path, "Hamiltonian JSON")->required();
  rate->add_option("--psi0", psi_path, "initial state JSON")->required();
  rate->add_option("--t0", t0, "first time");
  rate->add_option("--t1", t1, "last time");
  rate->add_option("--steps", steps, "time samples")->check(CLI::Range(1, 1000000));

  int vol_k = 2;
  double vol_lo = 0.5, vol_hi = 1.0;
  auto* volume = app.add_subcommand("volume", "accessible interval probability at d_A = 2");
  volume->add_option("--K", vol_k, "environment dimension")->required();
  volume->add_option("--lo", vol_lo, "lower endpoint in [1/2, 1]");
  volume->add_option("--hi", vol_hi, "upper endpoint in [1/2, 1]");

  std::string geo_in;
  double geo_eps = 1e-3;
  auto* geometry = app.add_subcommand("geometry", "escort/Bregman identities for a spectrum");
  geometry->add_option("--in", geo_in, "spectrum JSON file")->required();
  geometry->add_option("--eps", geo_eps, "escort perturbation");

  std::string repro_target;
  bool repro_all = false;
  std::uint64_t repro_seed = 0;
  auto* reproduce = app.add_subcommand("reproduce", "run named reproduction checks");
  reproduce->add_option("target", repro_target, "target name (see --list)");
  reproduce->add_flag("--all", repro_all, "run every criterion target");
  reproduce->add_option("--seed", repro_seed, "random seed");
  bool repro_list = false;
  reproduce->add_flag("--list", repro_list, "list available targets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  const int threads = thread_count(threads_flag);
  try {
    if (measure->parsed()) return cmd_measure(in_path, measures, measure_bits);
    if (curves->parsed()) return cmd_curves(curve_d, curve_points);
    if (order->parsed()) return cmd_order(a_path, b_path, grid_path);
    if (extremal->parsed()) return cmd_extremal(ext_d, ext_measure);
    if (sample->parsed())
      return cmd_sample(parse_ensemble(ens_name, d_a, d_b, n_qubits, doping, theta, cut),
                        parse_functional(functional_name), n_samples, seed, threads);
    if (pdf->parsed()) return cmd_pdf(pdf_which, pdf_bins, pdf_n, pdf_seed);
    if (rate->parsed()) return cmd_rate(h_path, psi_path, t0, t1, steps);
    if (volume->parsed()) return cmd_volume(vol_k, vol_lo, vol_hi);
    if (geometry->parsed()) return cmd_geometry(geo_in, geo_eps);
    if (reproduce->parsed()) {
      if (repro_list) {
        for (const std::string& name : reproduce_target_names()) std::cout << name << '\n';
        return kExitOk;
      }
      if (!repro_all && repro_target.empty())
        throw Error("reproduce: give a target name or --all");
      return cmd_reproduce(repro_target, repro_all, repro_seed, threads);
    }
  } catch (const NoConvergence& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const EigenFailure& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const ChainNotConverged& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}
