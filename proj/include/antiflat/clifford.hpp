// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <vector>

#include "antiflat/errors.hpp"
#include "antiflat/random.hpp"

namespace antiflat {

/// Circuit element. `a` is the only qubit for one-qubit gates and the
/// control for Cnot; Phase is diag(1, e^{i theta}) on qubit a.
struct Gate {
  enum class Op { H, S, Sdg, Cnot, Swap, X, Z, Phase };
  Op op;
  int a = 0;
  int b = 0;
  double theta = 0.0;
};

/// Clifford unitary as a stabilizer tableau: row 2q holds the conjugation
/// image of X_q, row 2q+1 that of Z_q, each a signed Pauli stored as x/z
/// bitmasks over qubits (Y encoded as x = z = 1). The 2n x 2n binary part
/// is symplectic over GF(2) by construction.
class CliffordTableau {
 public:
  /// Identity tableau on n qubits (1 <= n <= 16).
  explicit CliffordTableau(int n);

  /// Uniformly random Clifford element (modulo global phase): a uniform
  /// symplectic matrix drawn by the transvection decomposition plus 2n
  /// uniform sign bits.
  static CliffordTableau random(int n, RandomStream& rng);

  int num_qubits() const { return n_; }

  bool x_bit(int row, int q) const { return (xs_[row] >> q) & 1u; }
  bool z_bit(int row, int q) const { return (zs_[row] >> q) & 1u; }
  bool sign_bit(int row) const { return (signs_ >> row) & 1u; }

  /// Symplectic-form check of the binary part: partner rows pair to 1, all
  /// other pairs to 0.
  bool is_symplectic() const;

  bool is_identity() const;

  // Conjugation updates: the represented unitary U becomes g U.
  void apply_h(int a);
  void apply_s(int a);
  void apply_cnot(int a, int b);
  void apply_swap(int a, int b);
  void apply_x(int a);
  void apply_z(int a);

  /// Circuit whose tableau equals *this (up to global phase). Obtained by
  /// reducing a copy to the identity with {H, S, Cnot, Swap} sweeps and
  /// Pauli sign fixes; the inverse word, reversed, is the circuit.
  std::vector<Gate> synthesize() const;

 private:
  int n_;
  std::vector<std::uint32_t> xs_, zs_;  // one mask per row
  std::uint64_t signs_ = 0;
};

}  // namespace antiflat
