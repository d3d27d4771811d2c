// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <json.hpp>
#include <string>

#include "antiflat/dynamics.hpp"
#include "antiflat/ordering.hpp"
#include "antiflat/spectrum.hpp"
#include "antiflat/states.hpp"

namespace antiflat {

inline constexpr const char* kSchema = "antiflat/1";

using Json = nlohmann::json;

// Spectrum: {"schema": "antiflat/1", "weights": [...], "tol": 1e-10}
Json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);

/// CSV form: the weights on a single comma-separated row.
std::string spectrum_to_csv(const Spectrum& s);
Spectrum spectrum_from_csv(const std::string& line);

// Pure state: {"schema", "dims": [dA, dB], "re": [...], "im": [...]},
// row-major amplitude index i_a * d_b + i_b.
Json state_to_json(const BipartitePureState& psi);
BipartitePureState state_from_json(const Json& j);

// Density matrix: {"schema", "dim": d, "re": [d*d...], "im": [d*d...]},
// row-major entries.
Json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j);

// Hamiltonian: {"schema", "dims": [dA, dB], "re": [...], "im": [...]},
// row-major (dA dB)^2 entries.
Json hamiltonian_to_json(const Hamiltonian& h);
Hamiltonian hamiltonian_from_json(const Json& j);

// Grid: {"alphas": [...]} where entries are positive numbers or the strings
// "0", "1", "inf".
Json grid_to_json(const RenyiGrid& grid);
RenyiGrid grid_from_json(const Json& j);

Json verdict_to_json(const OrderVerdict& verdict, const RenyiGrid* grid,
                     const Eigen::VectorXd* profile);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace antiflat
