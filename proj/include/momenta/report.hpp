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

#include <optional>
#include <string>
#include <vector>

#include "momenta/check_report.hpp"
#include "momenta/checks.hpp"
#include "momenta/scenario.hpp"

namespace momenta {

/// Exact entries (scalars and integers) are kept as strings, columns as
/// inner vectors.
using StringMatrix = std::vector<std::vector<std::string>>;

struct DeckGroupEntry {
  /// "zero", "gamma0" or "configured".
  std::string gamma_n;
  std::string invariants;
  bool symplectomorphism = false;

  friend bool operator==(const DeckGroupEntry&, const DeckGroupEntry&) = default;
};

struct MuReduction {
  std::size_t index = 0;
  /// Basis of Gamma_mu in loop coordinates; empty with a note when unsupported.
  std::optional<StringMatrix> gamma_mu;
  std::vector<DeckGroupEntry> deck_groups;
  std::vector<std::string> notes;

  friend bool operator==(const MuReduction&, const MuReduction&) = default;
};

struct MuOrbit {
  std::size_t index = 0;
  std::vector<double> mu;
  std::string kind;
  std::string descriptor;
  double max_membership_error = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;

  friend bool operator==(const MuOrbit&, const MuOrbit&) = default;
};

struct AnalysisReport {
  /// Only field that varies between identical runs.
  std::string generated_at;

  std::string scenario;
  std::string group;
  std::size_t dim = 0;
  std::string radicand;
  StringMatrix theta;

  StringMatrix holonomy_generators;
  bool holonomy_closed = true;
  std::size_t rational_rank = 0;
  std::size_t real_rank = 0;
  StringMatrix closure_subspace;
  StringMatrix closure_lattice;

  StringMatrix gamma0;
  StringMatrix gamma_n;
  bool hamiltonian_cover = true;
  std::string cover;
  std::string cover_simplified;
  StringMatrix cover_basis;
  std::vector<std::string> flags;

  bool reduction_suppressed = false;
  std::vector<MuReduction> reduction;

  std::vector<MuOrbit> orbits;
  std::vector<CheckReport> checks;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  std::optional<std::uint64_t> seed;
  bool parallel = true;
  bool run_checks = true;
  double canonical_sign = 1.0;
};

AnalysisReport analyze(const ScenarioConfig& config, const AnalyzeOptions& options = {});

/// JSON with sections "header", "exact" and "numeric", indented by two.
std::string serialize_report(const AnalysisReport& report);

/// Inverse of serialize_report. Throws std::invalid_argument on malformed input.
AnalysisReport parse_report(const std::string& text);

bool all_checks_passed(const AnalysisReport& report);

}  // namespace momenta
