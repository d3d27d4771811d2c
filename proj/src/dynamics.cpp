// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace antiflat {

namespace {

CMat reduced_gram(const BipartitePureState& psi) {
  const auto m = psi.as_matrix();
  return m * m.adjoint();
}

double reduced_f(const BipartitePureState& psi) {
  const CMat g = reduced_gram(psi);
  const CMat g2 = g * g;
  const double z2 = g2.trace().real();
  return (g2 * g).trace().real() - z2 * z2;
}

}  // namespace

Hamiltonian::Hamiltonian(CMat entries, int d_a, int d_b) : h_(std::move(entries)), d_a_(d_a), d_b_(d_b) {
  if (d_a_ < 1 || d_b_ < 1) throw BadDims("hamiltonian: dims must be >= 1");
  if (h_.rows() != h_.cols() || h_.rows() != static_cast<Eigen::Index>(d_a_) * d_b_)
    throw DimMismatch("hamiltonian: matrix must be (d_a d_b) square");
  if ((h_ - h_.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw Error("hamiltonian: not Hermitian within 1e-10");
}

Propagator::Propagator(const Hamiltonian& h) : h_(h), solver_(h.entries()) {
  if (solver_.info() != Eigen::Success) throw EigenFailure("propagator: eigendecomposition failed");
}

BipartitePureState Propagator::at(const BipartitePureState& psi0, double t) const {
  if (psi0.dim() != h_.dim()) throw DimMismatch("propagator: state dimension mismatch");
  const Eigen::VectorXd& e = solver_.eigenvalues();
  CVec coeff = solver_.eigenvectors().adjoint() * psi0.amplitudes();
  for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff[i] *= std::polar(1.0, -e[i] * t);
  CVec out = solver_.eigenvectors() * coeff;
  const double norm = out.norm();
  if (std::abs(norm - 1.0) > 1e-9) throw EigenFailure("propagator: norm drift above 1e-9");
  out /= norm;
  return BipartitePureState(std::move(out), psi0.dim_a(), psi0.dim_b());
}

BipartitePureState evolve(const Hamiltonian& h, const BipartitePureState& psi0, double t) {
  return Propagator(h).at(psi0, t);
}

double linear_entanglement(const BipartitePureState& psi) {
  const CMat g = reduced_gram(psi);
  return 1.0 - (g * g).trace().real();
}

double hamiltonian_variance(const Hamiltonian& h, const BipartitePureState& psi) {
  if (psi.dim() != h.dim()) throw DimMismatch("hamiltonian_variance: dimension mismatch");
  const CVec hpsi = h.entries() * psi.amplitudes();
  const double mean = psi.amplitudes().dot(hpsi).real();
  const double second = hpsi.squaredNorm();
  return std::max(0.0, second - mean * mean);
}

double entanglement_rate_commutator(const Hamiltonian& h, const BipartitePureState& psi) {
  if (psi.dim() != h.dim()) throw DimMismatch("entanglement_rate_commutator: dimension mismatch");
  const CMat g = reduced_gram(psi);
  const int db = psi.dim_b();
  // z = <psi| (rho_A (x) 1) H |psi>; rate = 2i (z - conj z) = -4 Im z
  const CVec hpsi = h.entries() * psi.amplitudes();
  Cplx z = 0.0;
  for (int ia = 0; ia < psi.dim_a(); ++ia)
    for (int ja = 0; ja < psi.dim_a(); ++ja)
      for (int b = 0; b < db; ++b)
        z += std::conj(psi.amplitude(ia, b)) * g(ia, ja) * hpsi[ja * db + b];
  return -4.0 * z.imag();
}

std::vector<RatePoint> rate_bound_report(const Hamiltonian& h, const BipartitePureState& psi0,
                                         const std::vector<double>& times) {
  if (!std::is_sorted(times.begin(), times.end()))
    throw Error("rate_bound_report: times must be sorted");
  const Propagator prop(h);
  const double var_h = hamiltonian_variance(h, psi0);  // conserved
  const double sqrt_var = std::sqrt(var_h);
  const double loose = 3.0 * std::sqrt(3.0) / 8.0 * sqrt_var;

  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < times.size(); ++i)
    min_gap = std::min(min_gap, times[i] - times[i - 1]);
  const double step = std::isfinite(min_gap) ? std::max(min_gap / 10.0, 1e-5) : 1e-4;

  std::vector<RatePoint> out;
  out.reserve(times.size());
  double max_curvature = 1.0;
  for (double t : times) {
    const BipartitePureState psi = prop.at(psi0, t);
    const double e_mid = linear_entanglement(psi);
    const double e_plus = linear_entanglement(prop.at(psi0, t + step));
    const double e_minus = linear_entanglement(prop.at(psi0, t - step));
    const double dedt = (e_plus - e_minus) / (2.0 * step);
    const double curve = std::abs(e_plus - 2.0 * e_mid + e_minus) / (step * step);
    max_curvature = std::max(max_curvature, curve);

    const double f = std::max(0.0, reduced_f(psi));
    RatePoint p;
    p.t = t;
    p.e_lin = e_mid;
    p.dedt_numeric = dedt;
    p.dedt_commutator = entanglement_rate_commutator(h, psi);
    p.rhs = 4.0 * std::sqrt(f) * sqrt_var;
    p.loose_rhs = loose;
    out.push_back(p);
  }
  const double slack = 10.0 * step * step * max_curvature;
  for (auto& p : out) {
    p.slack = slack;
    p.satisfied = std::abs(p.dedt_numeric) <= p.rhs + slack;
    p.satisfied_loose = std::abs(p.dedt_numeric) <= p.loose_rhs + slack;
  }
  return out;
}

}  // namespace antiflat
