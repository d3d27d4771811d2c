// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace antiflat {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunConfig {
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Names accepted by reproduce_target(), in report order.
std::vector<std::string> reproduce_target_names();

/// Run one named reproduction target; several targets bundle more than one
/// check line. Unknown names throw Error.
std::vector<CheckResult> reproduce_target(const std::string& target, const RunConfig& config);

/// All criterion-level targets in order (the full acceptance sweep).
std::vector<CheckResult> reproduce_all(const RunConfig& config);

}  // namespace antiflat
