// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <Eigen/Eigenvalues>
#include <vector>

#include "antiflat/states.hpp"

namespace antiflat {

/// Hermitian generator on H_A (x) H_B (1e-10 Hermiticity check).
class Hamiltonian {
 public:
  Hamiltonian(CMat entries, int d_a, int d_b);

  int dim_a() const { return d_a_; }
  int dim_b() const { return d_b_; }
  Eigen::Index dim() const { return h_.rows(); }
  const CMat& entries() const { return h_; }

 private:
  CMat h_;
  int d_a_, d_b_;
};

/// Cached eigendecomposition of H for repeated propagation.
class Propagator {
 public:
  explicit Propagator(const Hamiltonian& h);
  BipartitePureState at(const BipartitePureState& psi0, double t) const;

 private:
  const Hamiltonian& h_;
  Eigen::SelfAdjointEigenSolver<CMat> solver_;
};

/// |psi(t)> = exp(-i H t) |psi(0)> by full eigendecomposition.
BipartitePureState evolve(const Hamiltonian& h, const BipartitePureState& psi0, double t);

/// 1 - Tr(rho_A^2), in [0, 1 - 1/d_a].
double linear_entanglement(const BipartitePureState& psi);

/// <H^2> - <H>^2 (the variance itself; the rate bound takes its root).
double hamiltonian_variance(const Hamiltonian& h, const BipartitePureState& psi);

/// Exact rate of the linear entanglement, 2i <[rho_A (x) 1, H]>.
double entanglement_rate_commutator(const Hamiltonian& h, const BipartitePureState& psi);

struct RatePoint {
  double t;
  double e_lin;
  double dedt_numeric;     // central finite difference
  double dedt_commutator;  // exact cross-check
  double rhs;              // 4 sqrt(F) sqrt(Var H)
  double loose_rhs;        // (3 sqrt(3) / 8) sqrt(Var H)
  double slack;            // finite-difference allowance on the numeric rate
  bool satisfied;          // |dedt_numeric| <= rhs + slack
  bool satisfied_loose;    // |dedt_numeric| <= loose_rhs + slack
};

/// Per-time rate-bound record. The numeric rate uses a central difference
/// with step h = max(min time gap / 10, 1e-5); the slack 10 h^2 max|E''|
/// keeps discretization error from ever tripping the verdicts.
std::vector<RatePoint> rate_bound_report(const Hamiltonian& h, const BipartitePureState& psi0,
                                         const std::vector<double>& times);

}  // namespace antiflat
