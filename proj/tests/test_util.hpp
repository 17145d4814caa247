// Copyright 2026 The momenta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "momenta/scenario.hpp"

namespace momenta::testing {

inline std::string config_path(const std::string& name) { return std::string(MOMENTA_CONFIG_DIR) + "/" + name; }

inline Scenario load_scenario(const std::string& name, double canonical_sign = 1.0) {
  return build_scenario(load_config(config_path(name)), canonical_sign);
}

inline ExactMatrix rational_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  ExactMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = ExactScalar(x);
    ++i;
  }
  return m;
}

}  // namespace momenta::testing
