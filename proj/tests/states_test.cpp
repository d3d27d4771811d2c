// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/states.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>

#include "antiflat/ensembles.hpp"
#include "test_support.hpp"

using namespace antiflat;

namespace {

BipartitePureState basis_state(int index, int d_a, int d_b) {
  CVec amps = CVec::Zero(static_cast<Eigen::Index>(d_a) * d_b);
  amps[index] = 1.0;
  return BipartitePureState(std::move(amps), d_a, d_b);
}

BipartitePureState bell_state() {
  CVec amps = CVec::Zero(4);
  amps[0] = amps[3] = 1.0 / std::sqrt(2.0);
  return BipartitePureState(std::move(amps), 2, 2);
}

}  // namespace

TEST_CASE("pure state and density construction") {
  CHECK_THROWS_AS(BipartitePureState(CVec::Ones(4), 2, 2), Error);  // unnormalized
  CHECK_THROWS_AS(BipartitePureState(CVec::Ones(3), 2, 2), DimMismatch);

  const DensityMatrix rho00 = density_from_pure(basis_state(0, 2, 2));
  CHECK(rho00.entries()(0, 0).real() == doctest::Approx(1.0));
  CHECK(rho00.entries().cwiseAbs().sum() == doctest::Approx(1.0));

  const DensityMatrix bell = density_from_pure(bell_state());
  int half_entries = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(bell.entries()(i, j).real() - 0.5) < 1e-12) ++half_entries;
  CHECK(half_entries == 4);

  RandomStream rng(21);
  const BipartitePureState psi = haar_pure(3, 4, rng);
  const DensityMatrix rho = density_from_pure(psi);
  CHECK((rho.entries() * rho.entries()).trace().real() == doctest::Approx(1.0).epsilon(1e-10));

  CMat bad = CMat::Identity(2, 2);
  bad(0, 1) = Cplx(0.0, 1.0);  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix(std::move(bad)), Error);
}

TEST_CASE("partial trace") {
  const DensityMatrix rho00 = density_from_pure(basis_state(0, 2, 2));
  const DensityMatrix reduced = partial_trace_b(rho00, 2, 2);
  CHECK(reduced.entries()(0, 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(reduced.entries()(1, 1)) < 1e-14);

  const DensityMatrix bell_reduced = partial_trace_b(density_from_pure(bell_state()), 2, 2);
  CHECK((bell_reduced.entries() - 0.5 * CMat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(partial_trace_b(bell_reduced, 2, 2), DimMismatch);

  // exact product structure: Tr_B(rho (x) sigma) = rho
  RandomStream rng(22);
  const BipartitePureState a = haar_pure(2, 2, rng);
  const BipartitePureState b = haar_pure(3, 1, rng);
  const DensityMatrix rho_a = reduced_density(a);
  const DensityMatrix sigma_b = density_from_pure(b);
  const DensityMatrix prod = tensor(rho_a, sigma_b);
  const DensityMatrix back = partial_trace_b(prod, 2, 3);
  CHECK((back.entries() - rho_a.entries()).cwiseAbs().maxCoeff() < 1e-12);

  // trace and positivity are preserved
  for (int trial = 0; trial < 50; ++trial) {
    const BipartitePureState psi = haar_pure(3, 5, rng);
    const Spectrum s = eigen_spectrum(reduced_density(psi));
    CHECK(s.weights().minCoeff() >= 0.0);
    CHECK(s.weights().sum() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("eigen spectrum") {
  const DensityMatrix mixed(CMat::Identity(4, 4) / 4.0);
  CHECK(is_flat(eigen_spectrum(mixed)));

  CMat diag = CMat::Zero(4, 4);
  diag(0, 0) = 0.7;
  diag(1, 1) = 0.2;
  diag(2, 2) = 0.08;
  diag(3, 3) = 0.02;
  const Spectrum b = eigen_spectrum(DensityMatrix(std::move(diag)));
  CHECK(b[0] == doctest::Approx(0.7));
  CHECK(b[3] == doctest::Approx(0.02));

  const Spectrum bell = eigen_spectrum(partial_trace_b(density_from_pure(bell_state()), 2, 2));
  CHECK(bell[0] == doctest::Approx(0.5));
  CHECK(bell[1] == doctest::Approx(0.5));
}

TEST_CASE("schmidt coefficients") {
  // sqrt(l)|00> + sqrt(1-l)|11>
  const double l = 0.73;
  CVec amps = CVec::Zero(4);
  amps[0] = std::sqrt(l);
  amps[3] = std::sqrt(1.0 - l);
  const Spectrum s = schmidt_coefficients(BipartitePureState(std::move(amps), 2, 2));
  CHECK(s[0] == doctest::Approx(l).epsilon(1e-12));
  CHECK(s[1] == doctest::Approx(1.0 - l).epsilon(1e-12));

  const Spectrum prod = schmidt_coefficients(basis_state(2, 2, 2));
  CHECK(prod[0] == doctest::Approx(1.0));
  CHECK(prod.rank() == 1);

  // two EPR pairs across (A1 A2 | B1 B2): flat rank 4
  CVec epr = CVec::Zero(16);
  for (int j = 0; j < 4; ++j) epr[j * 4 + j] = 0.5;
  const Spectrum two_pairs = schmidt_coefficients(BipartitePureState(std::move(epr), 4, 4));
  CHECK(is_flat(two_pairs));
  CHECK(two_pairs.rank() == 4);

  // agreement with the eigendecomposition route
  RandomStream rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const int da = 2 + static_cast<int>(rng.uniform_below(3));
    const int db = 2 + static_cast<int>(rng.uniform_below(4));
    const BipartitePureState psi = haar_pure(da, db, rng);
    const Spectrum via_svd = schmidt_coefficients(psi);
    const Spectrum via_eig = eigen_spectrum(reduced_density(psi));
    const Eigen::Index n = std::min(via_svd.dim(), via_eig.dim());
    for (Eigen::Index i = 0; i < n; ++i)
      CHECK(std::abs(via_svd[i] - via_eig[i]) < 1e-9);
  }
}

TEST_CASE("dephasing") {
  // qubit-pair basis that turns |00><00| into weights (2/3, 1/3)
  const double r2 = std::sqrt(2.0);
  CMat basis = CMat::Zero(4, 4);
  basis.col(0) << 1.0 / std::sqrt(3.0), r2 / std::sqrt(3.0), 0, 0;
  basis.col(1) << (2.0 - r2) / std::sqrt(9.0 - 6.0 * r2), (1.0 - r2) / std::sqrt(9.0 - 6.0 * r2), 0, 0;
  basis.col(2) << 0, 0, 1.0 / std::sqrt(3.0), r2 / std::sqrt(3.0);
  basis.col(3) << 0, 0, r2 / std::sqrt(3.0), -1.0 / std::sqrt(3.0);
  const OrthonormalBasis onb(std::move(basis));

  const DensityMatrix rho = density_from_pure(basis_state(0, 2, 2));
  const Spectrum s = eigen_spectrum(dephase(rho, onb));
  CHECK(s[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(s[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

  // dephasing in the eigenbasis is the identity map
  RandomStream rng(24);
  const DensityMatrix mixed = reduced_density(haar_pure(4, 4, rng));
  Eigen::SelfAdjointEigenSolver<CMat> es(mixed.entries());
  const OrthonormalBasis eigbasis(es.eigenvectors());
  const DensityMatrix same = dephase(mixed, eigbasis);
  CHECK((same.entries() - mixed.entries()).cwiseAbs().maxCoeff() < 1e-10);

  // idempotence
  const DensityMatrix once = dephase(mixed, onb);
  const DensityMatrix twice = dephase(once, onb);
  CHECK((once.entries() - twice.entries()).cwiseAbs().maxCoeff() < 1e-12);

  CMat skew = CMat::Identity(4, 4);
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(OrthonormalBasis(std::move(skew)), NonOrthonormalBasis);

  const OrthonormalBasis small(CMat::Identity(2, 2));
  CHECK_THROWS_AS(dephase(rho, small), DimMismatch);
}

TEST_CASE("four-qubit stabilizer dephasing example") {
  // flat rank-10 projector over 4 qubits, dephased in the conjugated
  // computational basis C|j> with C = H on the leading qubit
  CMat rho = CMat::Zero(16, 16);
  for (int i = 0; i < 10; ++i) rho(i, i) = 0.1;
  const double inv_r2 = 1.0 / std::sqrt(2.0);
  CMat basis = CMat::Zero(16, 16);
  for (int j = 0; j < 16; ++j) {
    const int low = j & 7;  // qubit 0 is the most significant bit
    const double sign = (j & 8) ? -1.0 : 1.0;
    basis(low, j) = inv_r2;
    basis(8 + low, j) = sign * inv_r2;
  }
  const Spectrum s = eigen_spectrum(dephase(DensityMatrix(std::move(rho)), OrthonormalBasis(std::move(basis))));
  for (int i = 0; i < 4; ++i) CHECK(s[i] == doctest::Approx(0.1).epsilon(1e-10));
  for (int i = 4; i < 16; ++i) CHECK(s[i] == doctest::Approx(0.05).epsilon(1e-10));
}

TEST_CASE("dephasing the environment leaves the reduced state alone") {
  RandomStream rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const BipartitePureState psi = haar_pure(2, 3, rng);
    const DensityMatrix full = density_from_pure(psi);
    // measurement on B: Kraus projectors 1_A (x) |v_b><v_b|
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
    const DensityMatrix before = partial_trace_b(full, 2, 3);
    const DensityMatrix after = partial_trace_b(DensityMatrix(std::move(dephased)), 2, 3);
    CHECK((before.entries() - after.entries()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("tensor products of densities") {
  const DensityMatrix half(CMat::Identity(2, 2) / 2.0);
  const DensityMatrix quarter = tensor(half, half);
  CHECK((quarter.entries() - CMat::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() < 1e-14);

  RandomStream rng(26);
  const DensityMatrix a = reduced_density(haar_pure(2, 3, rng));
  const DensityMatrix b = reduced_density(haar_pure(3, 2, rng));
  const DensityMatrix ab = tensor(a, b);
  // spectrum of the product is the sorted outer product of spectra
  const Spectrum sa = eigen_spectrum(a);
  const Spectrum sb = eigen_spectrum(b);
  const Spectrum sab = eigen_spectrum(ab);
  const Spectrum oracle = spectrum_tensor(sa, sb);
  for (Eigen::Index i = 0; i < sab.dim(); ++i)
    CHECK(std::abs(sab[i] - oracle[i]) < 1e-10);

  // pure (x) pure stays pure
  const DensityMatrix p = density_from_pure(basis_state(0, 2, 1));
  const DensityMatrix pp = tensor(p, p);
  CHECK((pp.entries() * pp.entries()).trace().real() == doctest::Approx(1.0).epsilon(1e-12));
}
