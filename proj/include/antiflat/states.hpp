// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <Eigen/Core>
#include <complex>

#include "antiflat/spectrum.hpp"

namespace antiflat {

using Cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Pure state on H_A (x) H_B. Amplitudes are indexed row-major,
/// amp(i_a, i_b) = amplitudes[i_a * d_b + i_b], and normalized to 1e-10.
class BipartitePureState {
 public:
  BipartitePureState(CVec amplitudes, int d_a, int d_b);

  int dim_a() const { return d_a_; }
  int dim_b() const { return d_b_; }
  Eigen::Index dim() const { return amps_.size(); }
  const CVec& amplitudes() const { return amps_; }
  Cplx amplitude(int i_a, int i_b) const { return amps_[i_a * d_b_ + i_b]; }

  /// d_a x d_b matrix view of the amplitude tensor.
  Eigen::Map<const Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
  as_matrix() const;

 private:
  CVec amps_;
  int d_a_;
  int d_b_;
};

/// Hermitian (1e-10), unit-trace (1e-10), positive-semidefinite (-1e-9)
/// density matrix. All checks run at construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMat entries);

  Eigen::Index dim() const { return m_.rows(); }
  const CMat& entries() const { return m_; }

 private:
  CMat m_;
};

/// d complex column vectors, pairwise orthonormal within 1e-10.
class OrthonormalBasis {
 public:
  explicit OrthonormalBasis(CMat vectors);

  Eigen::Index dim() const { return v_.rows(); }
  const CMat& vectors() const { return v_; }

 private:
  CMat v_;
};

/// Spectrum from raw eigenvalues with bounded repair: magnitudes at or
/// below 1e-12 count as numerical zeros, dust in [-1e-9, 0) is clamped, and
/// the result is renormalized by its sum when that sum is within 1e-9 of
/// one. Anything farther off is rejected.
Spectrum spectrum_from_eigenvalues(Eigen::VectorXd values);

DensityMatrix density_from_pure(const BipartitePureState& psi);

DensityMatrix partial_trace_b(const DensityMatrix& rho, int d_a, int d_b);

/// Descending eigenvalues with bounded repair: dust in [-1e-9, 0) is clamped
/// and the spectrum renormalized by its sum when |sum - 1| <= 1e-9. Throws
/// EigenFailure when the decomposition residual exceeds 1e-8.
Spectrum eigen_spectrum(const DensityMatrix& rho);

/// Squared singular values of the amplitude matrix, padded to min(d_a, d_b).
Spectrum schmidt_coefficients(const BipartitePureState& psi);

/// Reduced state of a pure state (partial trace over B), without the
/// intermediate full density matrix.
DensityMatrix reduced_density(const BipartitePureState& psi);

/// Projective dephasing sum_k P_k rho P_k in the given basis.
DensityMatrix dephase(const DensityMatrix& rho, const OrthonormalBasis& basis);

DensityMatrix tensor(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace antiflat
