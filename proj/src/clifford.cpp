// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/clifford.hpp"

#include <bit>

namespace antiflat {

namespace {

// Symplectic vectors over GF(2) in interleaved layout: bit 2q is the X
// component on qubit q, bit 2q+1 the Z component.
using SympVec = std::uint32_t;

int symplectic_inner(SympVec v, SympVec w, int nn) {
  int t = 0;
  for (int i = 0; i < nn; i += 2)
    t ^= (((v >> i) & 1u) & ((w >> (i + 1)) & 1u)) ^ (((w >> i) & 1u) & ((v >> (i + 1)) & 1u));
  return t;
}

SympVec transvect(SympVec k, SympVec v, int nn) {
  return symplectic_inner(k, v, nn) ? (v ^ k) : v;
}

/// Two transvections (either possibly trivial) carrying x to y.
void find_transvection(SympVec x, SympVec y, int nn, SympVec out[2]) {
  out[0] = out[1] = 0;
  if (x == y) return;
  if (symplectic_inner(x, y, nn)) {
    out[0] = x ^ y;
    return;
  }
  // route through an intermediate z anticommuting with both
  SympVec z = 0;
  for (int i = 0; i < nn; i += 2) {
    const unsigned xp = (x >> i) & 3u;
    const unsigned yp = (y >> i) & 3u;
    if (xp != 0 && yp != 0) {
      unsigned zp = xp ^ yp;
      if (zp == 0) {
        // same nonzero pair: pick any other nonzero pair value
        zp = 2u;  // z bit set
        if (((xp & 1u) != 0) != (((xp >> 1) & 1u) != 0)) zp |= 1u;
      }
      z = static_cast<SympVec>(zp) << i;
      out[0] = x ^ z;
      out[1] = y ^ z;
      return;
    }
  }
  // supports are disjoint: take one pair from each side
  for (int i = 0; i < nn; i += 2) {
    const unsigned xp = (x >> i) & 3u;
    if (xp != 0 && (((y >> i) & 3u) == 0)) {
      unsigned zp;
      if ((xp & 1u) == ((xp >> 1) & 1u))
        zp = 2u;
      else
        zp = ((xp & 1u) << 1) | ((xp >> 1) & 1u);  // swap components
      z |= static_cast<SympVec>(zp) << i;
      break;
    }
  }
  for (int i = 0; i < nn; i += 2) {
    const unsigned yp = (y >> i) & 3u;
    if (yp != 0 && (((x >> i) & 3u) == 0)) {
      unsigned zp;
      if ((yp & 1u) == ((yp >> 1) & 1u))
        zp = 2u;
      else
        zp = ((yp & 1u) << 1) | ((yp >> 1) & 1u);
      z |= static_cast<SympVec>(zp) << i;
      break;
    }
  }
  out[0] = x ^ z;
  out[1] = y ^ z;
}

/// Uniformly random element of Sp(2n, 2), rows in interleaved layout. Each
/// level draws the image of the first basis vector uniformly among nonzero
/// vectors and a uniform coset label, then recurses on the complement; this
/// walks the transvection decomposition of the group, so the output is
/// exactly uniform.
void random_symplectic(int n, RandomStream& rng, std::vector<SympVec>& rows) {
  const int nn = 2 * n;
  const SympVec f1 = static_cast<SympVec>(1 + rng.uniform_below((1ull << nn) - 1));
  SympVec t[2];
  find_transvection(1u, f1, nn, t);
  const std::uint64_t bits = rng.uniform_below(1ull << (nn - 1));
  SympVec eprime = 1u;
  for (int j = 2; j < nn; ++j) eprime |= static_cast<SympVec>((bits >> (j - 1)) & 1u) << j;
  SympVec h0 = transvect(t[0], eprime, nn);
  h0 = transvect(t[1], h0, nn);
  const SympVec extra = (bits & 1u) ? 0u : f1;

  if (n == 1) {
    rows.assign({1u, 2u});
  } else {
    random_symplectic(n - 1, rng, rows);
    rows.insert(rows.begin(), {1u, 2u});
    for (std::size_t r = 2; r < rows.size(); ++r) rows[r] <<= 2;
  }
  for (auto& row : rows) {
    row = transvect(t[0], row, nn);
    row = transvect(t[1], row, nn);
    row = transvect(h0, row, nn);
    if (extra) row = transvect(extra, row, nn);
  }
}

}  // namespace

CliffordTableau::CliffordTableau(int n) : n_(n) {
  if (n < 1 || n > 16) throw BadDims("CliffordTableau: need 1 <= n <= 16");
  xs_.assign(2 * n, 0);
  zs_.assign(2 * n, 0);
  for (int q = 0; q < n; ++q) {
    xs_[2 * q] = 1u << q;
    zs_[2 * q + 1] = 1u << q;
  }
}

CliffordTableau CliffordTableau::random(int n, RandomStream& rng) {
  if (n < 1 || n > 12) throw BadDims("random Clifford: need 1 <= n <= 12");
  std::vector<SympVec> rows;
  random_symplectic(n, rng, rows);
  CliffordTableau t(n);
  for (int r = 0; r < 2 * n; ++r) {
    SympVec xm = 0, zm = 0;
    for (int q = 0; q < n; ++q) {
      xm |= ((rows[r] >> (2 * q)) & 1u) << q;
      zm |= ((rows[r] >> (2 * q + 1)) & 1u) << q;
    }
    t.xs_[r] = xm;
    t.zs_[r] = zm;
  }
  t.signs_ = rng.uniform_below(1ull << (2 * n));
  return t;
}

bool CliffordTableau::is_symplectic() const {
  const int nn = 2 * n_;
  auto inner = [&](int r1, int r2) {
    return std::popcount(xs_[r1] & zs_[r2]) + std::popcount(zs_[r1] & xs_[r2]);
  };
  for (int a = 0; a < nn; ++a)
    for (int b = a + 1; b < nn; ++b) {
      const int expected = (b == a + 1 && a % 2 == 0) ? 1 : 0;
      if (inner(a, b) % 2 != expected) return false;
    }
  return true;
}

bool CliffordTableau::is_identity() const {
  if (signs_ != 0) return false;
  for (int q = 0; q < n_; ++q) {
    if (xs_[2 * q] != (1u << q) || zs_[2 * q] != 0) return false;
    if (zs_[2 * q + 1] != (1u << q) || xs_[2 * q + 1] != 0) return false;
  }
  return true;
}

void CliffordTableau::apply_h(int a) {
  const std::uint32_t bit = 1u << a;
  for (int r = 0; r < 2 * n_; ++r) {
    const bool x = xs_[r] & bit, z = zs_[r] & bit;
    if (x && z) signs_ ^= 1ull << r;
    if (x != z) {
      xs_[r] ^= bit;
      zs_[r] ^= bit;
    }
  }
}

void CliffordTableau::apply_s(int a) {
  const std::uint32_t bit = 1u << a;
  for (int r = 0; r < 2 * n_; ++r) {
    const bool x = xs_[r] & bit, z = zs_[r] & bit;
    if (x && z) signs_ ^= 1ull << r;
    if (x) zs_[r] ^= bit;
  }
}

void CliffordTableau::apply_cnot(int a, int b) {
  const std::uint32_t ca = 1u << a, cb = 1u << b;
  for (int r = 0; r < 2 * n_; ++r) {
    const bool xa = xs_[r] & ca, za = zs_[r] & ca;
    const bool xb = xs_[r] & cb, zb = zs_[r] & cb;
    if (xa && zb && (xb == za)) signs_ ^= 1ull << r;
    if (xa) xs_[r] ^= cb;
    if (zb) zs_[r] ^= ca;
  }
}

void CliffordTableau::apply_swap(int a, int b) {
  const std::uint32_t ca = 1u << a, cb = 1u << b;
  for (int r = 0; r < 2 * n_; ++r) {
    const bool xa = xs_[r] & ca, xb = xs_[r] & cb;
    const bool za = zs_[r] & ca, zb = zs_[r] & cb;
    if (xa != xb) xs_[r] ^= ca | cb;
    if (za != zb) zs_[r] ^= ca | cb;
  }
}

void CliffordTableau::apply_x(int a) {
  const std::uint32_t bit = 1u << a;
  for (int r = 0; r < 2 * n_; ++r)
    if (zs_[r] & bit) signs_ ^= 1ull << r;
}

void CliffordTableau::apply_z(int a) {
  const std::uint32_t bit = 1u << a;
  for (int r = 0; r < 2 * n_; ++r)
    if (xs_[r] & bit) signs_ ^= 1ull << r;
}

std::vector<Gate> CliffordTableau::synthesize() const {
  CliffordTableau t(*this);
  const int n = n_;
  std::vector<Gate> gates;
  auto emit_h = [&](int a) { t.apply_h(a); gates.push_back({Gate::Op::H, a}); };
  auto emit_s = [&](int a) { t.apply_s(a); gates.push_back({Gate::Op::S, a}); };
  auto emit_cx = [&](int a, int b) { t.apply_cnot(a, b); gates.push_back({Gate::Op::Cnot, a, b}); };
  auto emit_swap = [&](int a, int b) { t.apply_swap(a, b); gates.push_back({Gate::Op::Swap, a, b}); };
  auto first_bit_from = [](std::uint32_t mask, int from) {
    const std::uint32_t m = mask >> from;
    return m ? from + std::countr_zero(m) : -1;
  };

  // Gaussian sweep: after step q, rows 2q / 2q+1 are exactly +-X_q / +-Z_q
  // and untouched by later steps.
  for (int q = 0; q < n; ++q) {
    const int rx = 2 * q, rz = 2 * q + 1;
    if (first_bit_from(t.xs_[rx], q) < 0) {
      const int j = first_bit_from(t.zs_[rx], q);
      if (j < 0) throw Error("CliffordTableau::synthesize: tableau is not symplectic");
      emit_h(j);
    }
    if (!t.x_bit(rx, q)) emit_swap(q, first_bit_from(t.xs_[rx], q));
    for (int j = q + 1; j < n; ++j)
      if (t.x_bit(rx, j)) emit_cx(q, j);
    if (t.zs_[rx] >> q) {
      if (!t.z_bit(rx, q)) emit_s(q);
      for (int j = q + 1; j < n; ++j)
        if (t.z_bit(rx, j)) emit_cx(j, q);
      emit_s(q);
    }
    // stabilizer row: clear Z tail, then the X part behind an H sandwich
    for (int j = q + 1; j < n; ++j)
      if (t.z_bit(rz, j)) emit_cx(j, q);
    if (t.xs_[rz] >> q) {
      emit_h(q);
      for (int j = q + 1; j < n; ++j)
        if (t.x_bit(rz, j)) emit_cx(q, j);
      if (t.z_bit(rz, q)) emit_s(q);
      emit_h(q);
    }
  }
  for (int q = 0; q < n; ++q) {
    if (t.sign_bit(2 * q)) {
      t.apply_z(q);
      gates.push_back({Gate::Op::Z, q});
    }
    if (t.sign_bit(2 * q + 1)) {
      t.apply_x(q);
      gates.push_back({Gate::Op::X, q});
    }
  }
  if (!t.is_identity()) throw Error("CliffordTableau::synthesize: reduction failed");
  // gates g1..gk satisfy gk ... g1 U = 1, so U = g1^dag ... gk^dag; the
  // caller replays the list reversed, inverting each gate.
  return gates;
}

}  // namespace antiflat
