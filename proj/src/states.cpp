// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/states.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace antiflat {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-9;
constexpr double kEigenResidualTol = 1e-8;
constexpr double kSupportCut = 1e-12;  // below solver resolution

}  // namespace

BipartitePureState::BipartitePureState(CVec amplitudes, int d_a, int d_b)
    : amps_(std::move(amplitudes)), d_a_(d_a), d_b_(d_b) {
  if (d_a_ < 1 || d_b_ < 1) throw BadDims("pure state: dims must be >= 1");
  if (amps_.size() != static_cast<Eigen::Index>(d_a_) * d_b_)
    throw DimMismatch("pure state: amplitude count != d_a * d_b");
  const double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kHermTol)
    throw Error("pure state: squared norm " + std::to_string(norm2) + " is not 1 within 1e-10");
}

Eigen::Map<const Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
BipartitePureState::as_matrix() const {
  return {amps_.data(), d_a_, d_b_};
}

DensityMatrix::DensityMatrix(CMat entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw BadDims("density matrix: must be square and non-empty");
  const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermTol)
    throw Error("density matrix: not Hermitian within 1e-10");
  const Cplx tr = m_.trace();
  if (std::abs(tr - Cplx(1.0, 0.0)) > kTraceTol)
    throw Error("density matrix: trace is not 1 within 1e-10");
  Eigen::SelfAdjointEigenSolver<CMat> solver(m_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw EigenFailure("density matrix: eigenvalue check failed");
  if (solver.eigenvalues().minCoeff() < -kPsdTol)
    throw Error("density matrix: eigenvalue below -1e-9");
}

OrthonormalBasis::OrthonormalBasis(CMat vectors) : v_(std::move(vectors)) {
  if (v_.rows() != v_.cols() || v_.rows() == 0)
    throw BadDims("basis: need d vectors of dimension d");
  const CMat gram = v_.adjoint() * v_;
  const double dev = (gram - CMat::Identity(v_.rows(), v_.cols())).cwiseAbs().maxCoeff();
  if (dev > kHermTol) throw NonOrthonormalBasis("basis: Gram matrix deviates from identity");
}

Spectrum spectrum_from_eigenvalues(Eigen::VectorXd values) {
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (std::abs(values[i]) <= kSupportCut) {
      values[i] = 0.0;
    } else if (values[i] < -kPsdTol) {
      std::ostringstream os;
      os << "spectrum repair: eigenvalue " << values[i] << " below -1e-9";
      throw NotAProbabilityVector(os.str());
    } else if (values[i] < 0.0) {
      values[i] = 0.0;
    }
  }
  const double sum = values.sum();
  if (std::abs(sum - 1.0) > kPsdTol) {
    std::ostringstream os;
    os << "spectrum repair: eigenvalues sum to " << sum;
    throw NotAProbabilityVector(os.str());
  }
  values /= sum;
  return Spectrum::from_raw(std::move(values));
}

DensityMatrix density_from_pure(const BipartitePureState& psi) {
  const CVec& a = psi.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

DensityMatrix partial_trace_b(const DensityMatrix& rho, int d_a, int d_b) {
  if (rho.dim() != static_cast<Eigen::Index>(d_a) * d_b)
    throw DimMismatch("partial_trace_b: dim != d_a * d_b");
  const CMat& m = rho.entries();
  CMat out = CMat::Zero(d_a, d_a);
  for (int i = 0; i < d_a; ++i)
    for (int j = 0; j < d_a; ++j)
      for (int b = 0; b < d_b; ++b) out(i, j) += m(i * d_b + b, j * d_b + b);
  return DensityMatrix(std::move(out));
}

Spectrum eigen_spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(rho.entries());
  if (solver.info() != Eigen::Success) throw EigenFailure("eigen_spectrum: solver failed");
  const CMat recon = solver.eigenvectors() *
                     solver.eigenvalues().asDiagonal() *
                     solver.eigenvectors().adjoint();
  const double residual = (recon - rho.entries()).cwiseAbs().maxCoeff();
  if (residual > kEigenResidualTol)
    throw EigenFailure("eigen_spectrum: residual above 1e-8");
  return spectrum_from_eigenvalues(solver.eigenvalues().reverse());
}

Spectrum schmidt_coefficients(const BipartitePureState& psi) {
  Eigen::JacobiSVD<CMat> svd(psi.as_matrix());
  const Eigen::VectorXd& sv = svd.singularValues();
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (!std::isfinite(sv[i])) throw SVDFailure("schmidt_coefficients: non-finite singular value");
  Eigen::VectorXd lam = sv.array().square();
  return spectrum_from_eigenvalues(std::move(lam));
}

DensityMatrix reduced_density(const BipartitePureState& psi) {
  const auto m = psi.as_matrix();
  return DensityMatrix(m * m.adjoint());
}

DensityMatrix dephase(const DensityMatrix& rho, const OrthonormalBasis& basis) {
  if (rho.dim() != basis.dim()) throw DimMismatch("dephase: basis dimension mismatch");
  const CMat& b = basis.vectors();
  const CVec diag = (b.adjoint() * rho.entries() * b).diagonal();
  return DensityMatrix(b * diag.asDiagonal() * b.adjoint());
}

DensityMatrix tensor(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const CMat& a = rho.entries();
  const CMat& c = sigma.entries();
  CMat out(a.rows() * c.rows(), a.cols() * c.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * c.rows(), j * c.cols(), c.rows(), c.cols()) = a(i, j) * c;
  return DensityMatrix(std::move(out));
}

}  // namespace antiflat
