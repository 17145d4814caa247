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

#include "momenta/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>

#include <json.hpp>

#include "momenta/reduction.hpp"

namespace momenta {

namespace {

using nlohmann::json;

StringMatrix columns_of(const IntMatrix& m) {
  StringMatrix out;
  for (const IntVector& c : m.columns()) {
    std::vector<std::string> col;
    for (const mpz_class& x : c) col.push_back(x.get_str());
    out.push_back(std::move(col));
  }
  return out;
}

StringMatrix columns_of(const std::vector<ExactVector>& vs) {
  StringMatrix out;
  for (const ExactVector& v : vs) {
    std::vector<std::string> col;
    for (const ExactScalar& x : v) col.push_back(x.to_string());
    out.push_back(std::move(col));
  }
  return out;
}

StringMatrix columns_of(const ExactMatrix& m) {
  std::vector<ExactVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return columns_of(cols);
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Gamma_0 pushed from loop coordinates into Z^n.
LatticeSubgroup embedded_gamma0(const Scenario& s) {
  std::vector<IntVector> gens;
  for (const IntVector& c : s.gamma0.basis().columns()) {
    IntVector v(s.dim(), 0);
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t k = 0; k < c.size(); ++k) v[i] += s.loop_directions(i, k) * c[k];
    gens.push_back(std::move(v));
  }
  return LatticeSubgroup::generated_by(gens, s.dim());
}

MuReduction reduce_at(const Scenario& s, std::size_t index, const DualVector& mu, bool hamiltonian) {
  MuReduction r;
  r.index = index;
  LatticeSubgroup gm;
  try {
    gm = gamma_mu(s, mu);
  } catch (const CapabilityError& e) {
    r.notes.push_back(std::string("capability: ") + e.what());
    return r;
  }
  r.gamma_mu = columns_of(gm.basis());
  auto add = [&](const std::string& label, const LatticeSubgroup& gn) {
    const DeckGroup d = deck_group_of_reduced_cover(s, mu, gn);
    r.deck_groups.push_back({label, d.invariants.to_string(), d.symplectomorphism()});
  };
  add("zero", LatticeSubgroup::zero(s.loop_rank()));
  add("gamma0", s.gamma0);
  if (!s.config.gamma_n.empty()) {
    if (hamiltonian) {
      add("configured", s.gamma_n);
    } else {
      r.notes.push_back("configured Gamma_N is not contained in Gamma_0; no reduced cover");
    }
  }
  return r;
}

// JSON helpers. Non-finite errors travel as null.

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double number_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

json to_json(const CheckReport& c) {
  return {{"name", c.name},           {"maxError", number(c.max_error)}, {"tolerance", c.tolerance},
          {"passed", c.passed},       {"sampleCount", c.sample_count},   {"notes", c.notes}};
}

CheckReport check_from(const json& j) {
  return {j.at("name").get<std::string>(), number_from(j.at("maxError")), j.at("tolerance").get<double>(),
          j.at("passed").get<bool>(),     j.at("sampleCount").get<std::size_t>(), j.at("notes").get<std::string>()};
}

}  // namespace

AnalysisReport analyze(const ScenarioConfig& config, const AnalyzeOptions& options) {
  const Scenario s = build_scenario(config, options.canonical_sign);
  AnalysisReport r;
  r.generated_at = utc_now();
  r.scenario = config.name;
  r.group = to_string(config.group);
  r.dim = s.dim();
  r.radicand = config.radicand;
  r.theta = columns_of(s.model->theta().matrix());

  r.holonomy_generators = columns_of(s.holonomy);
  r.holonomy_closed = s.holonomy_closed();
  r.rational_rank = s.closure.rational_rank;
  r.real_rank = s.closure.real_rank;
  r.closure_subspace = columns_of(s.closure.subspace_basis);
  r.closure_lattice = columns_of(s.closure.lattice_basis);

  r.gamma0 = columns_of(s.gamma0.basis());
  r.gamma_n = columns_of(s.gamma_n.basis());
  r.hamiltonian_cover = subgroup_is_hamiltonian(s.gamma_n, s.gamma0);
  const CoverClassification cover = classify_cover(embedded_gamma0(s), s.dim());
  r.cover = cover.descriptor();
  r.cover_simplified = cover.simplified();
  r.cover_basis = columns_of(cover.basis);

  if (!r.holonomy_closed) {
    r.flags.push_back("non-closed holonomy");
    r.flags.push_back("closure decomposition computed by exact rank comparison");
  }
  if (!r.hamiltonian_cover) r.flags.push_back("configured Gamma_N is not Hamiltonian");

  const std::vector<DualVector> mus = s.mus();
  const std::uint64_t seed = options.seed.value_or(config.verify.seed);
  r.reduction_suppressed = !r.holonomy_closed;
  for (std::size_t i = 0; i < mus.size(); ++i) {
    if (!r.reduction_suppressed) r.reduction.push_back(reduce_at(s, i, mus[i], r.hamiltonian_cover));
    const OrbitDescriptor d = orbit_descriptor(s, mus[i], seed + i, config.verify.sample_count);
    r.orbits.push_back({i, std::vector<double>(mus[i].vec().data(), mus[i].vec().data() + mus[i].size()),
                        to_string(d.kind), d.to_string(), d.max_membership_error, config.verify.tolerance,
                        d.samples});
  }

  if (options.run_checks) {
    CheckContext ctx;
    ctx.samples = config.verify.sample_count;
    ctx.seed = seed;
    ctx.tolerance = config.verify.tolerance;
    r.checks = run_checks(s, ctx, options.parallel);
  }
  return r;
}

std::string serialize_report(const AnalysisReport& r) {
  json reduction;
  if (r.reduction_suppressed) {
    reduction = {{"suppressed", true}, {"reason", "non-closed holonomy"}};
  } else {
    json per_mu = json::array();
    for (const MuReduction& m : r.reduction) {
      json decks = json::array();
      for (const DeckGroupEntry& d : m.deck_groups) {
        decks.push_back({{"gammaN", d.gamma_n},
                         {"invariants", d.invariants},
                         {"symplectomorphism", d.symplectomorphism},
                         {"statement", d.symplectomorphism ? "symplectomorphism" : "covering with deck group " + d.invariants}});
      }
      per_mu.push_back({{"index", m.index},
                        {"gammaMu", m.gamma_mu ? json(*m.gamma_mu) : json(nullptr)},
                        {"deckGroups", decks},
                        {"notes", m.notes}});
    }
    reduction = {{"suppressed", false}, {"perMu", per_mu}};
  }

  json orbits = json::array();
  for (const MuOrbit& o : r.orbits) {
    orbits.push_back({{"index", o.index},
                      {"mu", o.mu},
                      {"kind", o.kind},
                      {"descriptor", o.descriptor},
                      {"maxMembershipError", number(o.max_membership_error)},
                      {"tolerance", o.tolerance},
                      {"samples", o.samples}});
  }
  json checks = json::array();
  for (const CheckReport& c : r.checks) checks.push_back(to_json(c));

  const json doc = {
      {"header", {{"generatedAt", r.generated_at}}},
      {"exact",
       {{"scenario", r.scenario},
        {"group", r.group},
        {"dim", r.dim},
        {"radicand", r.radicand},
        {"theta", r.theta},
        {"holonomy",
         {{"generators", r.holonomy_generators},
          {"closed", r.holonomy_closed},
          {"rationalRank", r.rational_rank},
          {"realRank", r.real_rank},
          {"closureSubspace", r.closure_subspace},
          {"closureLattice", r.closure_lattice}}},
        {"gamma0", r.gamma0},
        {"gammaN", r.gamma_n},
        {"hamiltonianCover", r.hamiltonian_cover},
        {"cover", {{"descriptor", r.cover}, {"simplified", r.cover_simplified}, {"basis", r.cover_basis}}},
        {"flags", r.flags},
        {"reduction", reduction}}},
      {"numeric", {{"orbits", orbits}, {"checks", checks}}},
  };
  return doc.dump(2) + "\n";
}

AnalysisReport parse_report(const std::string& text) {
  try {
    const json doc = json::parse(text);
    const json& ex = doc.at("exact");
    const json& hol = ex.at("holonomy");
    AnalysisReport r;
    r.generated_at = doc.at("header").at("generatedAt").get<std::string>();
    r.scenario = ex.at("scenario").get<std::string>();
    r.group = ex.at("group").get<std::string>();
    r.dim = ex.at("dim").get<std::size_t>();
    r.radicand = ex.at("radicand").get<std::string>();
    r.theta = ex.at("theta").get<StringMatrix>();
    r.holonomy_generators = hol.at("generators").get<StringMatrix>();
    r.holonomy_closed = hol.at("closed").get<bool>();
    r.rational_rank = hol.at("rationalRank").get<std::size_t>();
    r.real_rank = hol.at("realRank").get<std::size_t>();
    r.closure_subspace = hol.at("closureSubspace").get<StringMatrix>();
    r.closure_lattice = hol.at("closureLattice").get<StringMatrix>();
    r.gamma0 = ex.at("gamma0").get<StringMatrix>();
    r.gamma_n = ex.at("gammaN").get<StringMatrix>();
    r.hamiltonian_cover = ex.at("hamiltonianCover").get<bool>();
    r.cover = ex.at("cover").at("descriptor").get<std::string>();
    r.cover_simplified = ex.at("cover").at("simplified").get<std::string>();
    r.cover_basis = ex.at("cover").at("basis").get<StringMatrix>();
    r.flags = ex.at("flags").get<std::vector<std::string>>();

    const json& red = ex.at("reduction");
    r.reduction_suppressed = red.at("suppressed").get<bool>();
    if (!r.reduction_suppressed) {
      for (const json& m : red.at("perMu")) {
        MuReduction mr;
        mr.index = m.at("index").get<std::size_t>();
        if (!m.at("gammaMu").is_null()) mr.gamma_mu = m.at("gammaMu").get<StringMatrix>();
        for (const json& d : m.at("deckGroups")) {
          mr.deck_groups.push_back({d.at("gammaN").get<std::string>(), d.at("invariants").get<std::string>(),
                                    d.at("symplectomorphism").get<bool>()});
        }
        mr.notes = m.at("notes").get<std::vector<std::string>>();
        r.reduction.push_back(std::move(mr));
      }
    }

    const json& num = doc.at("numeric");
    for (const json& o : num.at("orbits")) {
      r.orbits.push_back({o.at("index").get<std::size_t>(), o.at("mu").get<std::vector<double>>(),
                          o.at("kind").get<std::string>(), o.at("descriptor").get<std::string>(),
                          number_from(o.at("maxMembershipError")), o.at("tolerance").get<double>(),
                          o.at("samples").get<std::size_t>()});
    }
    for (const json& c : num.at("checks")) r.checks.push_back(check_from(c));
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

bool all_checks_passed(const AnalysisReport& report) {
  return std::all_of(report.checks.begin(), report.checks.end(), [](const CheckReport& c) { return c.passed; });
}

}  // namespace momenta
