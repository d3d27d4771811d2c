// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/statevector.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace antiflat {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

CVec zero_state(int n) {
  CVec psi = CVec::Zero(Eigen::Index{1} << n);
  psi[0] = 1.0;
  return psi;
}

void apply_gate(CVec& psi, const Gate& g, int n) {
  const Eigen::Index dim = psi.size();
  switch (g.op) {
    case Gate::Op::H: {
      const Eigen::Index bit = Eigen::Index{1} << (n - 1 - g.a);
      for (Eigen::Index i = 0; i < dim; ++i) {
        if (i & bit) continue;
        const Cplx lo = psi[i], hi = psi[i | bit];
        psi[i] = (lo + hi) * kInvSqrt2;
        psi[i | bit] = (lo - hi) * kInvSqrt2;
      }
      break;
    }
    case Gate::Op::S:
    case Gate::Op::Sdg: {
      const Eigen::Index bit = Eigen::Index{1} << (n - 1 - g.a);
      const Cplx f = g.op == Gate::Op::S ? Cplx(0.0, 1.0) : Cplx(0.0, -1.0);
      for (Eigen::Index i = 0; i < dim; ++i)
        if (i & bit) psi[i] *= f;
      break;
    }
    case Gate::Op::X: {
      const Eigen::Index bit = Eigen::Index{1} << (n - 1 - g.a);
      for (Eigen::Index i = 0; i < dim; ++i)
        if (!(i & bit)) std::swap(psi[i], psi[i | bit]);
      break;
    }
    case Gate::Op::Z: {
      const Eigen::Index bit = Eigen::Index{1} << (n - 1 - g.a);
      for (Eigen::Index i = 0; i < dim; ++i)
        if (i & bit) psi[i] = -psi[i];
      break;
    }
    case Gate::Op::Cnot: {
      const Eigen::Index cbit = Eigen::Index{1} << (n - 1 - g.a);
      const Eigen::Index tbit = Eigen::Index{1} << (n - 1 - g.b);
      for (Eigen::Index i = 0; i < dim; ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(psi[i], psi[i | tbit]);
      break;
    }
    case Gate::Op::Swap: {
      const Eigen::Index abit = Eigen::Index{1} << (n - 1 - g.a);
      const Eigen::Index bbit = Eigen::Index{1} << (n - 1 - g.b);
      for (Eigen::Index i = 0; i < dim; ++i)
        if ((i & abit) && !(i & bbit)) std::swap(psi[i], psi[(i & ~abit) | bbit]);
      break;
    }
    case Gate::Op::Phase: {
      apply_phase(psi, g.a, g.theta, n);
      break;
    }
  }
}

void apply_gate_inverse(CVec& psi, const Gate& g, int n) {
  Gate inv = g;
  if (g.op == Gate::Op::S)
    inv.op = Gate::Op::Sdg;
  else if (g.op == Gate::Op::Sdg)
    inv.op = Gate::Op::S;
  else if (g.op == Gate::Op::Phase)
    inv.theta = -g.theta;
  apply_gate(psi, inv, n);
}

void apply_clifford(CVec& psi, const CliffordTableau& t) {
  const std::vector<Gate> gates = t.synthesize();
  // synthesize() reduces the tableau: U = g1^dag ... gk^dag
  for (auto it = gates.rbegin(); it != gates.rend(); ++it)
    apply_gate_inverse(psi, *it, t.num_qubits());
}

void apply_phase(CVec& psi, int q, double theta, int n) {
  const Eigen::Index bit = Eigen::Index{1} << (n - 1 - q);
  const Cplx f = std::polar(1.0, theta);
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    if (i & bit) psi[i] *= f;
}

namespace {

CMat gram_across_cut(const CVec& psi, int n, int cut) {
  if (cut < 1 || cut >= n) throw BadDims("bipartition cut must satisfy 1 <= cut < n");
  const Eigen::Index da = Eigen::Index{1} << cut;
  const Eigen::Index db = Eigen::Index{1} << (n - cut);
  // qubit 0 is the MSB, so the A block is the high part of the index
  Eigen::Map<const Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      psi.data(), da, db);
  return m * m.adjoint();
}

}  // namespace

ReducedMoments reduced_moments(const CVec& psi, int n, int cut) {
  const CMat g = gram_across_cut(psi, n, cut);
  const CMat g2 = g * g;
  return {(g2).trace().real(), (g2 * g).trace().real()};
}

Spectrum reduced_spectrum_cut(const CVec& psi, int n, int cut) {
  const CMat g = gram_across_cut(psi, n, cut);
  Eigen::SelfAdjointEigenSolver<CMat> solver(g, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw EigenFailure("reduced_spectrum_cut: solver failed");
  return spectrum_from_eigenvalues(solver.eigenvalues().reverse());
}

}  // namespace antiflat
