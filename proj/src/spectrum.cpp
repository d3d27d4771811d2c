// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace antiflat {

RenyiIndex RenyiIndex::finite(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw Error("RenyiIndex: finite order must be positive");
  if (alpha == 1.0) throw Error("RenyiIndex: use RenyiIndex::one() for the Shannon limit");
  return RenyiIndex(Kind::Finite, alpha);
}

double RenyiIndex::order_value() const {
  switch (kind_) {
    case Kind::Limit0:
      return 0.0;
    case Kind::Shannon:
      return 1.0;
    case Kind::LimitInf:
      return std::numeric_limits<double>::infinity();
    case Kind::Finite:
      return alpha_;
  }
  return alpha_;
}

std::string RenyiIndex::label() const {
  switch (kind_) {
    case Kind::Limit0:
      return "0";
    case Kind::Shannon:
      return "1";
    case Kind::LimitInf:
      return "inf";
    case Kind::Finite: {
      std::ostringstream os;
      os << alpha_;
      return os.str();
    }
  }
  return "";
}

RenyiIndex RenyiIndex::parse(const std::string& text) {
  if (text == "0") return zero();
  if (text == "1") return one();
  if (text == "inf" || text == "Inf" || text == "INF") return infinity();
  std::size_t pos = 0;
  double a = std::stod(text, &pos);
  if (pos != text.size()) throw Error("RenyiIndex: cannot parse '" + text + "'");
  if (a == 0.0) return zero();
  if (a == 1.0) return one();
  if (std::isinf(a)) return infinity();
  return finite(a);
}

RenyiGrid::RenyiGrid(std::vector<RenyiIndex> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.size() < 2) throw Error("RenyiGrid: need at least 2 indices");
  for (std::size_t i = 1; i < alphas_.size(); ++i)
    if (!(alphas_[i - 1].order_value() < alphas_[i].order_value()))
      throw Error("RenyiGrid: indices must be strictly increasing");
}

const RenyiGrid& RenyiGrid::default_grid() {
  static const RenyiGrid grid({RenyiIndex::zero(), RenyiIndex::finite(0.25),
                               RenyiIndex::finite(0.5), RenyiIndex::finite(0.75),
                               RenyiIndex::one(), RenyiIndex::finite(1.5),
                               RenyiIndex::finite(2.0), RenyiIndex::finite(3.0),
                               RenyiIndex::finite(4.0), RenyiIndex::finite(8.0),
                               RenyiIndex::finite(16.0), RenyiIndex::infinity()});
  return grid;
}

Spectrum Spectrum::from_raw(Eigen::VectorXd raw, double tol) {
  if (raw.size() == 0) throw NotAProbabilityVector("spectrum: empty weight vector");
  for (Eigen::Index i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i])) throw NotAProbabilityVector("spectrum: non-finite weight");
    if (raw[i] < -tol) {
      std::ostringstream os;
      os << "spectrum: weight " << raw[i] << " below -tol";
      throw NotAProbabilityVector(os.str());
    }
    if (raw[i] < 0.0) raw[i] = 0.0;
  }
  const double sum = raw.sum();
  if (std::abs(sum - 1.0) > tol) {
    std::ostringstream os;
    os << "spectrum: weights sum to " << sum << ", not 1 within " << tol;
    throw NotAProbabilityVector(os.str());
  }
  std::sort(raw.data(), raw.data() + raw.size(), std::greater<double>());
  return Spectrum(std::move(raw), tol);
}

Spectrum Spectrum::from_raw(std::initializer_list<double> raw, double tol) {
  return from_raw(Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(raw.begin(),
                                                                    static_cast<Eigen::Index>(raw.size()))),
                  tol);
}

Spectrum Spectrum::from_raw(const std::vector<double>& raw, double tol) {
  return from_raw(Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(raw.data(),
                                                                    static_cast<Eigen::Index>(raw.size()))),
                  tol);
}

Spectrum Spectrum::flat(Eigen::Index rank, Eigen::Index dim) {
  if (rank < 1 || dim < rank) throw BadShape("flat spectrum: need 1 <= rank <= dim");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(dim);
  w.head(rank).setConstant(1.0 / static_cast<double>(rank));
  return Spectrum(std::move(w), kValidityTol);
}

Spectrum Spectrum::pure(Eigen::Index dim) { return flat(1, dim); }

Eigen::Index Spectrum::rank() const {
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < w_.size(); ++i)
    if (w_[i] > 0.0) ++r;
  return r;
}

Spectrum Spectrum::padded(Eigen::Index dim) const {
  if (dim < w_.size()) throw BadShape("spectrum: cannot pad to a smaller dimension");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(dim);
  w.head(w_.size()) = w_;
  return Spectrum(std::move(w), tol_);
}

namespace {

double log_moment(const Eigen::VectorXd& w, double alpha) {
  double z = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] > 0.0) z += std::pow(w[i], alpha);
  return std::log(z);
}

}  // namespace

double renyi_entropy(const Spectrum& s, const RenyiIndex& alpha) {
  const Eigen::VectorXd& w = s.weights();
  switch (alpha.kind()) {
    case RenyiIndex::Kind::Limit0:
      return std::log(static_cast<double>(s.rank()));
    case RenyiIndex::Kind::Shannon: {
      double h = 0.0;
      for (Eigen::Index i = 0; i < w.size(); ++i)
        if (w[i] > 0.0) h -= w[i] * std::log(w[i]);
      return h;
    }
    case RenyiIndex::Kind::LimitInf:
      return -std::log(w[0]);
    case RenyiIndex::Kind::Finite:
      return log_moment(w, alpha.alpha()) / (1.0 - alpha.alpha());
  }
  throw Error("renyi_entropy: unreachable");
}

double renyi_entropy(const Spectrum& s, double alpha) {
  if (alpha == 0.0) return renyi_entropy(s, RenyiIndex::zero());
  if (alpha == 1.0) return renyi_entropy(s, RenyiIndex::one());
  if (std::isinf(alpha)) return renyi_entropy(s, RenyiIndex::infinity());
  return renyi_entropy(s, RenyiIndex::finite(alpha));
}

double tsallis_entropy(const Spectrum& s, double alpha) {
  if (alpha == 1.0) throw AlphaOne("tsallis_entropy: alpha = 1 is the Shannon limit");
  return (partition_function(s, alpha) - 1.0) / (1.0 - alpha);
}

double renyi_spread(const Spectrum& s, const RenyiIndex& alpha, const RenyiIndex& beta) {
  if (!(alpha.order_value() < beta.order_value()))
    throw BadIndexOrder("renyi_spread: requires alpha < beta");
  return renyi_entropy(s, alpha) - renyi_entropy(s, beta);
}

double renyi_spread(const Spectrum& s, double alpha, double beta) {
  if (!(alpha < beta)) throw BadIndexOrder("renyi_spread: requires alpha < beta");
  return renyi_entropy(s, alpha) - renyi_entropy(s, beta);
}

double partition_function(const Spectrum& s, double q) {
  if (q < 0.0) throw Error("partition_function: q must be >= 0");
  if (q == 0.0) return static_cast<double>(s.rank());
  double z = 0.0;
  const Eigen::VectorXd& w = s.weights();
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] > 0.0) z += std::pow(w[i], q);
  return z;
}

Spectrum escort(const Spectrum& s, double q) {
  if (q < 0.0) throw Error("escort: q must be >= 0");
  const Eigen::VectorXd& w = s.weights();
  Eigen::VectorXd e = Eigen::VectorXd::Zero(w.size());
  if (q == 0.0) {
    const double r = static_cast<double>(s.rank());
    for (Eigen::Index i = 0; i < w.size(); ++i)
      if (w[i] > 0.0) e[i] = 1.0 / r;
  } else {
    double z = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      if (w[i] > 0.0) {
        e[i] = std::pow(w[i], q);
        z += e[i];
      }
    }
    e /= z;
  }
  // power map is monotone, so e is already sorted descending
  return Spectrum::from_raw(std::move(e), s.tol());
}

bool is_flat(const Spectrum& s, double tol) {
  const Eigen::VectorXd& w = s.weights();
  const Eigen::Index r = s.rank();
  if (r == 0) return true;
  return w[0] - w[r - 1] <= tol;
}

GProfile g_profile(const Spectrum& sigma, const Spectrum& rho, const RenyiGrid& grid) {
  Eigen::VectorXd values(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i)
    values[static_cast<Eigen::Index>(i)] =
        renyi_entropy(sigma, grid[i]) - renyi_entropy(rho, grid[i]);
  return GProfile{grid, std::move(values)};
}

Spectrum spectrum_tensor(const Spectrum& s, const Spectrum& t) {
  Eigen::VectorXd out(s.dim() * t.dim());
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < s.dim(); ++i)
    for (Eigen::Index j = 0; j < t.dim(); ++j) out[k++] = s[i] * t[j];
  std::sort(out.data(), out.data() + out.size(), std::greater<double>());
  const double tol = std::max(s.tol(), t.tol());
  return Spectrum::from_raw(std::move(out), std::max(tol, 4.0 * kValidityTol));
}

}  // namespace antiflat
