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

#include <cstddef>
#include <string>

namespace momenta {

/// Outcome of one invariant check. passed == (max_error <= tolerance).
struct CheckReport {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::size_t sample_count = 0;
  std::string notes;

  static CheckReport make(std::string name, double max_error, double tolerance, std::size_t samples,
                          std::string notes = {}) {
    return {std::move(name), max_error, tolerance, max_error <= tolerance, samples, std::move(notes)};
  }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

}  // namespace momenta
