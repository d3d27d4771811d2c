// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "antiflat/io.hpp"

#include <fstream>
#include <sstream>

namespace antiflat {

namespace {

std::vector<double> as_double_vector(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw Error(std::string("json: missing array field '") + field + "'");
  return j[field].get<std::vector<double>>();
}

CMat complex_matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols) {
  const auto re = as_double_vector(j, "re");
  const auto im = as_double_vector(j, "im");
  if (static_cast<Eigen::Index>(re.size()) != rows * cols || re.size() != im.size())
    throw DimMismatch("json: re/im length does not match the declared dimensions");
  CMat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) {
      const std::size_t k = static_cast<std::size_t>(r * cols + c);
      m(r, c) = Cplx(re[k], im[k]);
    }
  return m;
}

void complex_matrix_to_json(Json& j, const CMat& m) {
  std::vector<double> re, im;
  re.reserve(static_cast<std::size_t>(m.size()));
  im.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  j["re"] = re;
  j["im"] = im;
}

}  // namespace

Json spectrum_to_json(const Spectrum& s) {
  Json j;
  j["schema"] = kSchema;
  j["weights"] = std::vector<double>(s.weights().data(), s.weights().data() + s.dim());
  j["tol"] = s.tol();
  return j;
}

Spectrum spectrum_from_json(const Json& j) {
  const auto weights = as_double_vector(j, "weights");
  const double tol = j.value("tol", kValidityTol);
  return Spectrum::from_raw(weights, tol);
}

std::string spectrum_to_csv(const Spectrum& s) {
  std::ostringstream os;
  os.precision(17);
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  return os.str();
}

Spectrum spectrum_from_csv(const std::string& line) {
  std::vector<double> weights;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) weights.push_back(std::stod(cell));
  return Spectrum::from_raw(weights);
}

Json state_to_json(const BipartitePureState& psi) {
  Json j;
  j["schema"] = kSchema;
  j["dims"] = {psi.dim_a(), psi.dim_b()};
  std::vector<double> re, im;
  for (Eigen::Index i = 0; i < psi.dim(); ++i) {
    re.push_back(psi.amplitudes()[i].real());
    im.push_back(psi.amplitudes()[i].imag());
  }
  j["re"] = re;
  j["im"] = im;
  return j;
}

BipartitePureState state_from_json(const Json& j) {
  if (!j.contains("dims")) throw Error("state json: missing 'dims'");
  const int da = j["dims"][0].get<int>();
  const int db = j["dims"][1].get<int>();
  const CMat m = complex_matrix_from_json(j, static_cast<Eigen::Index>(da) * db, 1);
  return BipartitePureState(m.col(0), da, db);
}

Json density_to_json(const DensityMatrix& rho) {
  Json j;
  j["schema"] = kSchema;
  j["dim"] = rho.dim();
  complex_matrix_to_json(j, rho.entries());
  return j;
}

DensityMatrix density_from_json(const Json& j) {
  Eigen::Index d = 0;
  if (j.contains("dim"))
    d = j["dim"].get<Eigen::Index>();
  else if (j.contains("dims"))
    d = static_cast<Eigen::Index>(j["dims"][0].get<int>()) * j["dims"][1].get<int>();
  else
    throw Error("density json: missing 'dim'");
  return DensityMatrix(complex_matrix_from_json(j, d, d));
}

Json hamiltonian_to_json(const Hamiltonian& h) {
  Json j;
  j["schema"] = kSchema;
  j["dims"] = {h.dim_a(), h.dim_b()};
  complex_matrix_to_json(j, h.entries());
  return j;
}

Hamiltonian hamiltonian_from_json(const Json& j) {
  if (!j.contains("dims")) throw Error("hamiltonian json: missing 'dims'");
  const int da = j["dims"][0].get<int>();
  const int db = j["dims"][1].get<int>();
  const Eigen::Index d = static_cast<Eigen::Index>(da) * db;
  return Hamiltonian(complex_matrix_from_json(j, d, d), da, db);
}

Json grid_to_json(const RenyiGrid& grid) {
  Json alphas = Json::array();
  for (std::size_t i = 0; i < grid.size(); ++i) alphas.push_back(grid[i].label());
  Json j;
  j["schema"] = kSchema;
  j["alphas"] = alphas;
  return j;
}

RenyiGrid grid_from_json(const Json& j) {
  if (!j.contains("alphas")) throw Error("grid json: missing 'alphas'");
  std::vector<RenyiIndex> alphas;
  for (const auto& entry : j["alphas"]) {
    if (entry.is_string())
      alphas.push_back(RenyiIndex::parse(entry.get<std::string>()));
    else
      alphas.push_back(RenyiIndex::parse(Json(entry).dump()));
  }
  return RenyiGrid(std::move(alphas));
}

Json verdict_to_json(const OrderVerdict& verdict, const RenyiGrid* grid,
                     const Eigen::VectorXd* profile) {
  Json j;
  j["schema"] = kSchema;
  j["verdict"] = relation_name(verdict.relation);
  if (verdict.witness && grid) {
    j["witness"] = {(*grid)[verdict.witness->i].label(), (*grid)[verdict.witness->j].label()};
  } else if (verdict.witness) {
    j["witness"] = {verdict.witness->i, verdict.witness->j};
  } else {
    j["witness"] = nullptr;
  }
  if (profile)
    j["G"] = std::vector<double>(profile->data(), profile->data() + profile->size());
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace antiflat
