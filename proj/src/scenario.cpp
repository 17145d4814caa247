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

#include "momenta/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace momenta {

namespace {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    const std::string top = field.substr(0, field.find('['));
    std::size_t line = 0;
    if (!top.empty()) {
      const auto pos = text_.find("\"" + top + "\"");
      if (pos != std::string_view::npos) line = line_of_offset(text_, pos);
    }
    throw ConfigError(field, line, message);
  }

  std::string scalar_string(const json& v, const std::string& field) const {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    fail(field, "exact scalars must be strings such as \"1/2+1/3*al\" or integers");
  }

  long integer(const json& v, const std::string& field) const {
    if (!v.is_number_integer()) fail(field, "expected an integer");
    return v.get<long>();
  }

  double real(const json& v, const std::string& field) const {
    if (!v.is_number()) fail(field, "expected a number");
    return v.get<double>();
  }

  const json& array(const json& v, const std::string& field) const {
    if (!v.is_array()) fail(field, "expected an array");
    return v;
  }

 private:
  std::string_view text_;
};

}  // namespace

ConfigError::ConfigError(std::string field, std::size_t line, const std::string& message)
    : std::runtime_error((field.empty() ? std::string() : field + ": ") + message +
                         (line ? " (line " + std::to_string(line) + ")" : std::string())),
      field_(std::move(field)),
      line_(line) {}

std::string to_string(ScenarioGroup g) {
  switch (g) {
    case ScenarioGroup::Torus: return "torus";
    case ScenarioGroup::Heisenberg: return "heisenberg";
    case ScenarioGroup::CentralExtension: return "centralExtension";
  }
  return "unknown";
}

ScenarioConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("", line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  Parser p(text);
  if (!doc.is_object()) p.fail("", "top level must be an object");

  static const std::set<std::string> known{"name", "group", "dim", "radicand", "theta", "sigma", "mu", "gammaN",
                                           "verify"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) p.fail(key, "unknown field");
  }

  ScenarioConfig cfg;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) p.fail("name", "expected a string");
    cfg.name = doc["name"].get<std::string>();
  }

  if (!doc.contains("group") || !doc["group"].is_string()) p.fail("group", "required string field");
  const std::string group = doc["group"].get<std::string>();
  if (group == "torus") cfg.group = ScenarioGroup::Torus;
  else if (group == "heisenberg") cfg.group = ScenarioGroup::Heisenberg;
  else if (group == "centralExtension") cfg.group = ScenarioGroup::CentralExtension;
  else p.fail("group", "must be one of torus, heisenberg, centralExtension");

  if (doc.contains("radicand")) cfg.radicand = p.scalar_string(doc["radicand"], "radicand");
  QuadraticField field{2};
  try {
    field = QuadraticField(parse_rational(cfg.radicand));
  } catch (const std::exception& e) {
    p.fail("radicand", e.what());
  }

  auto check_scalar = [&](const std::string& s, const std::string& where) {
    try {
      (void)parse_exact_scalar(s, field);
    } catch (const std::exception& e) {
      p.fail(where, e.what());
    }
  };

  if (cfg.group == ScenarioGroup::Torus) {
    if (doc.contains("sigma")) p.fail("sigma", "only valid for the Heisenberg groups");
    if (!doc.contains("dim")) p.fail("dim", "required for the torus");
    const long d = p.integer(doc["dim"], "dim");
    if (d < 1 || d > 64) p.fail("dim", "must be between 1 and 64");
    cfg.dim = static_cast<std::size_t>(d);
    if (!doc.contains("theta")) p.fail("theta", "required for the torus");
    const json& rows = p.array(doc["theta"], "theta");
    if (rows.size() != cfg.dim) p.fail("theta", "expected " + std::to_string(cfg.dim) + " rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string ri = "theta[" + std::to_string(i) + "]";
      const json& row = p.array(rows[i], ri);
      if (row.size() != cfg.dim) p.fail(ri, "expected " + std::to_string(cfg.dim) + " entries");
      std::vector<std::string> out;
      for (std::size_t j = 0; j < row.size(); ++j) {
        const std::string where = ri + "[" + std::to_string(j) + "]";
        out.push_back(p.scalar_string(row[j], where));
        check_scalar(out.back(), where);
      }
      cfg.theta.push_back(std::move(out));
    }
    for (std::size_t i = 0; i < cfg.dim; ++i)
      for (std::size_t j = i; j < cfg.dim; ++j) {
        if (!(parse_exact_scalar(cfg.theta[i][j], field) + parse_exact_scalar(cfg.theta[j][i], field)).is_zero()) {
          p.fail("theta[" + std::to_string(i) + "][" + std::to_string(j) + "]", "theta not antisymmetric");
        }
      }
  } else {
    if (doc.contains("theta")) p.fail("theta", "the Heisenberg groups take sigma instead of theta");
    if (doc.contains("dim") && p.integer(doc["dim"], "dim") != 3) p.fail("dim", "the Heisenberg groups have dimension 3");
    cfg.dim = 3;
    if (!doc.contains("sigma")) p.fail("sigma", "required for the Heisenberg groups");
    const json& s = p.array(doc["sigma"], "sigma");
    if (s.size() != 2) p.fail("sigma", "expected two entries");
    for (std::size_t i = 0; i < 2; ++i) {
      const std::string where = "sigma[" + std::to_string(i) + "]";
      cfg.sigma[i] = p.scalar_string(s[i], where);
      check_scalar(cfg.sigma[i], where);
    }
  }

  if (doc.contains("mu")) {
    const json& mus = p.array(doc["mu"], "mu");
    for (std::size_t k = 0; k < mus.size(); ++k) {
      const std::string mk = "mu[" + std::to_string(k) + "]";
      const json& m = p.array(mus[k], mk);
      if (m.size() != cfg.dim) p.fail(mk, "expected " + std::to_string(cfg.dim) + " entries");
      std::vector<double> v;
      for (std::size_t j = 0; j < m.size(); ++j) v.push_back(p.real(m[j], mk + "[" + std::to_string(j) + "]"));
      cfg.mu_list.push_back(std::move(v));
    }
  }
  if (cfg.mu_list.empty()) cfg.mu_list.push_back(std::vector<double>(cfg.dim, 0.0));

  const std::size_t loop_rank = cfg.group == ScenarioGroup::Torus ? cfg.dim : 1;
  if (doc.contains("gammaN")) {
    const json& gens = p.array(doc["gammaN"], "gammaN");
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::string gk = "gammaN[" + std::to_string(k) + "]";
      const json& g = p.array(gens[k], gk);
      if (g.size() != loop_rank) p.fail(gk, "expected " + std::to_string(loop_rank) + " integer entries");
      std::vector<long> v;
      for (std::size_t j = 0; j < g.size(); ++j) v.push_back(p.integer(g[j], gk + "[" + std::to_string(j) + "]"));
      cfg.gamma_n.push_back(std::move(v));
    }
  }

  if (doc.contains("verify")) {
    const json& v = doc["verify"];
    if (!v.is_object()) p.fail("verify", "expected an object");
    for (const auto& [key, _] : v.items()) {
      if (key != "tolerance" && key != "sampleCount" && key != "seed") p.fail("verify." + key, "unknown field");
    }
    if (v.contains("tolerance")) {
      cfg.verify.tolerance = p.real(v["tolerance"], "verify.tolerance");
      if (!(cfg.verify.tolerance > 0.0)) p.fail("verify.tolerance", "must be positive");
    }
    if (v.contains("sampleCount")) {
      const long n = p.integer(v["sampleCount"], "verify.sampleCount");
      if (n < 1 || n > 100000) p.fail("verify.sampleCount", "must be between 1 and 100000");
      cfg.verify.sample_count = static_cast<std::size_t>(n);
    }
    if (v.contains("seed")) {
      const long s = p.integer(v["seed"], "verify.seed");
      if (s < 0) p.fail("verify.seed", "must be nonnegative");
      cfg.verify.seed = static_cast<std::uint64_t>(s);
    }
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", 0, "cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

GroupPath Scenario::loop(const std::vector<long>& k) const {
  if (k.size() != loop_rank()) throw std::invalid_argument("loop: expected " + std::to_string(loop_rank()) + " entries");
  AlgebraVector dir(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < loop_rank(); ++j) dir[i] += static_cast<double>(k[j]) * loop_directions(i, j).get_d();
  return GroupPath::straight(model->group(), dir);
}

ExactVector Scenario::holonomy_of(const std::vector<long>& k) const {
  if (k.size() != loop_rank()) throw std::invalid_argument("holonomy_of: wrong length");
  ExactVector x;
  for (long v : k) x.emplace_back(v);
  return holonomy.apply(x);
}

std::vector<DualVector> Scenario::mus() const {
  std::vector<DualVector> out;
  for (const auto& m : config.mu_list) out.emplace_back(Eigen::Map<const Eigen::VectorXd>(m.data(), static_cast<Eigen::Index>(m.size())));
  return out;
}

Scenario build_scenario(const ScenarioConfig& config, double canonical_sign) {
  Scenario s;
  s.config = config;
  s.field = QuadraticField(parse_rational(config.radicand));
  const std::size_t n = config.dim;

  GroupModel group = GroupModel::torus(1);
  std::optional<CocycleTheta> theta;
  if (config.group == ScenarioGroup::Torus) {
    group = GroupModel::torus(n);
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_exact_scalar(config.theta[i][j], s.field);
    theta = CocycleTheta::from_matrix(m);
    s.loop_directions = IntMatrix::identity(n);
  } else {
    group = GroupModel::central_extension();
    theta = CocycleTheta::heisenberg(parse_exact_scalar(config.sigma[0], s.field),
                                     parse_exact_scalar(config.sigma[1], s.field));
    s.loop_directions = IntMatrix(3, 1);
    s.loop_directions(0, 0) = 1;
  }
  s.model = std::make_shared<const MagneticCotangent>(
      MagneticCotangent(group, *theta).with_canonical_sign(canonical_sign));

  const std::size_t r = s.loop_directions.cols();
  s.holonomy = ExactMatrix(n, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t l = 0; l < n; ++l)
        if (s.loop_directions(l, k) != 0) s.holonomy(i, k) += theta->matrix()(i, l) * ExactScalar(mpq_class(s.loop_directions(l, k)));

  std::vector<ExactVector> gens;
  for (std::size_t k = 0; k < r; ++k) gens.push_back(s.holonomy.column(k));
  s.closure = is_closed(GeneratedSubgroup(gens, n));
  s.gamma0 = kernel_lattice(s.holonomy);

  std::vector<IntVector> gn;
  for (const auto& v : config.gamma_n) {
    IntVector x;
    for (long e : v) x.emplace_back(e);
    gn.push_back(std::move(x));
  }
  s.gamma_n = gn.empty() ? LatticeSubgroup::zero(r) : LatticeSubgroup::generated_by(gn, r);
  s.cylinder = std::make_shared<const CylinderGeometry>(s.closure);
  return s;
}

}  // namespace momenta
