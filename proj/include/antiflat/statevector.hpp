// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include "antiflat/clifford.hpp"
#include "antiflat/states.hpp"

namespace antiflat {

// Computational-basis convention throughout: qubit 0 is the most significant
// bit of the basis index.

/// |0...0> on n qubits.
CVec zero_state(int n);

void apply_gate(CVec& psi, const Gate& g, int n);
void apply_gate_inverse(CVec& psi, const Gate& g, int n);

/// Apply the unitary represented by the tableau (up to global phase), by
/// replaying its synthesized circuit.
void apply_clifford(CVec& psi, const CliffordTableau& t);

/// diag(1, e^{i theta}) on one qubit.
void apply_phase(CVec& psi, int q, double theta, int n);

/// Tr(rho_A^2) and Tr(rho_A^3) of the reduced state across the cut after
/// the first `cut` qubits, straight from Gram-matrix moments.
struct ReducedMoments {
  double z2;
  double z3;
};
ReducedMoments reduced_moments(const CVec& psi, int n, int cut);

/// Reduced spectrum across the same cut.
Spectrum reduced_spectrum_cut(const CVec& psi, int n, int cut);

}  // namespace antiflat
