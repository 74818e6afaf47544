#pragma once
// JSON readers and writers for every data type that crosses the CLI.
// Each top-level document written here carries a "schema" member naming a
// versioned schema under docs/schemas.

#include "cobord/error.hpp"
#include "cobord/expr.hpp"
#include "cobord/homology.hpp"
#include "cobord/kink.hpp"
#include "cobord/lorentz.hpp"
#include "cobord/manifold.hpp"
#include "cobord/selection.hpp"
#include "cobord/witness.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cobord::io {

using nlohmann::json;

namespace schema {
inline constexpr const char* invariants = "cobord.invariants/1";
inline constexpr const char* verdict = "cobord.verdict/1";
inline constexpr const char* recipe = "cobord.recipe/1";
inline constexpr const char* kink = "cobord.kink/1";
inline constexpr const char* classification = "cobord.classification/1";
inline constexpr const char* metric = "cobord.metric/1";
inline constexpr const char* homology = "cobord.homology/1";
inline constexpr const char* error = "cobord.error/1";
} // namespace schema

// ---------------------------------------------------------------------------
// Reading

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::malformed_input, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::malformed_input, "'" + path + "' is not valid JSON: " + e.what());
  }
}

namespace detail {

template <class T>
T get(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw Error(Errc::malformed_input, what + ": missing '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::malformed_input, what + ": bad '" + key + "': " + e.what());
  }
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get<T>(j, key, what);
}

inline Integer to_integer(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(Errc::malformed_input, "matrix entries must be integers (or decimal strings)");
}

} // namespace detail

/// {"dim": n, "boundaries": [D_1, ..., D_n], "ranks": [...]?}. D_k is a list
/// of rows, one per (k-1)-cell. A matrix with no rows does not record its
/// column count, so "ranks" is needed when a neighbouring map cannot supply it.
inline ChainComplex chain_complex_from_json(const json& j) {
  const std::string what = "chain complex";
  const int n = detail::get<int>(j, "dim", what);
  if (n < 0) throw Error(Errc::malformed_input, "chain complex dimension must be >= 0");
  const json ds = j.contains("boundaries") ? j.at("boundaries") : json::array();
  if (!ds.is_array() || static_cast<int>(ds.size()) != n)
    throw Error(Errc::malformed_input,
                "chain complex of dim " + std::to_string(n) + " needs " + std::to_string(n) +
                    " boundary matrices");
  std::vector<std::optional<std::size_t>> ranks(static_cast<std::size_t>(n + 1));
  if (auto given = detail::get_optional<std::vector<std::size_t>>(j, "ranks", what)) {
    if (given->size() != ranks.size())
      throw Error(Errc::malformed_input, "'ranks' must have dim+1 entries");
    for (std::size_t k = 0; k < ranks.size(); ++k) ranks[k] = (*given)[k];
  }
  auto settle = [&](std::size_t k, std::size_t value) {
    if (ranks[k] && *ranks[k] != value)
      throw Error(Errc::malformed_input, "inconsistent size for chain group C_" + std::to_string(k));
    ranks[k] = value;
  };
  std::vector<std::vector<std::vector<Integer>>> rows(static_cast<std::size_t>(n));
  for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
    const json& d = ds[k - 1];
    if (!d.is_array()) throw Error(Errc::malformed_input, "D_" + std::to_string(k) + " must be a list of rows");
    for (const auto& r : d) {
      if (!r.is_array()) throw Error(Errc::malformed_input, "D_" + std::to_string(k) + " rows must be lists");
      std::vector<Integer> row;
      for (const auto& v : r) row.push_back(detail::to_integer(v));
      if (!rows[k - 1].empty() && row.size() != rows[k - 1].front().size())
        throw Error(Errc::malformed_input, "D_" + std::to_string(k) + " is ragged");
      rows[k - 1].push_back(std::move(row));
    }
    settle(k - 1, rows[k - 1].size());
    if (!rows[k - 1].empty()) settle(k, rows[k - 1].front().size());
  }
  if (n == 0 && !ranks[0]) ranks[0] = 1;
  std::vector<std::size_t> r;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    if (!ranks[k])
      throw Error(Errc::malformed_input,
                  "size of C_" + std::to_string(k) + " cannot be inferred; supply \"ranks\"");
    r.push_back(*ranks[k]);
  }
  std::vector<IntegerMatrix> mats;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k)
    mats.push_back(IntegerMatrix::from_rows(rows[k - 1], r[k]));
  return ChainComplex(std::move(r), std::move(mats));
}

inline json chain_complex_to_json(const ChainComplex& c) {
  json ds = json::array();
  for (int k = 1; k <= c.dim(); ++k) {
    const auto& d = c.boundary(k);
    json m = json::array();
    for (std::size_t i = 0; i < d.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < d.cols(); ++j) row.push_back(d(i, j).convert_to<std::int64_t>());
      m.push_back(std::move(row));
    }
    ds.push_back(std::move(m));
  }
  return {{"dim", c.dim()}, {"ranks", c.chain_ranks()}, {"boundaries", std::move(ds)}};
}

/// Catalog-extension record. Missing "components" means connected.
inline ManifoldDescriptor descriptor_from_json(const json& j) {
  const std::string what = "descriptor";
  ManifoldDescriptor m;
  m.name = detail::get<std::string>(j, "name", what);
  const std::string w = what + " '" + m.name + "'";
  m.dim = detail::get<int>(j, "dim", w);
  m.betti_q = detail::get<std::vector<std::int64_t>>(j, "betti_q", w);
  m.betti_z2 = detail::get<std::vector<std::int64_t>>(j, "betti_z2", w);
  m.orientable = detail::get<bool>(j, "orientable", w);
  m.spin = detail::get<bool>(j, "spin", w);
  m.stably_parallelizable = detail::get_optional<bool>(j, "stably_parallelizable", w);
  m.signature = detail::get_optional<std::int64_t>(j, "signature", w);
  m.components = detail::get_optional<std::int64_t>(j, "components", w).value_or(1);
  m.connected = m.components == 1;
  m.builtin = false;
  m.validate();
  return m;
}

inline json descriptor_to_json(const ManifoldDescriptor& m) {
  json j = {{"name", m.name},
            {"dim", m.dim},
            {"betti_q", m.betti_q},
            {"betti_z2", m.betti_z2},
            {"orientable", m.orientable},
            {"spin", m.spin},
            {"stably_parallelizable", nullptr},
            {"signature", nullptr},
            {"connected", m.connected},
            {"components", m.components}};
  if (m.stably_parallelizable) j["stably_parallelizable"] = *m.stably_parallelizable;
  if (m.signature) j["signature"] = *m.signature;
  return j;
}

/// A single descriptor object, an array of them, or {"manifolds": [...]}.
inline Catalog catalog_from_json(const json& j) {
  Catalog c;
  const json* list = &j;
  if (j.is_object() && j.contains("manifolds")) list = &j.at("manifolds");
  if (list->is_array())
    for (const auto& d : *list) c.add(descriptor_from_json(d));
  else
    c.add(descriptor_from_json(*list));
  return c;
}

/// Catalog named by COBORD_CATALOG, or an empty one when the variable is unset.
inline Catalog catalog_from_environment() {
  const char* path = std::getenv("COBORD_CATALOG");
  if (!path || !*path) return {};
  return catalog_from_json(read_file(path));
}

inline ManifoldDescriptor boundary_entry(const json& v, const Catalog* user) {
  if (v.is_string()) return evaluate(v.get<std::string>(), user);
  if (v.is_object()) return descriptor_from_json(v);
  throw Error(Errc::malformed_input, "boundary entries are expression strings or descriptor objects");
}

/// {"dim", "euler", "incoming": [...], "outgoing": [...], "spin",
///  "stably_parallelizable"?}; entries are expressions or descriptors.
inline CobordismDescriptor cobordism_from_json(const json& j, const Catalog* user = nullptr) {
  const std::string what = "cobordism";
  CobordismDescriptor c;
  c.dim = detail::get<int>(j, "dim", what);
  c.euler = detail::get<std::int64_t>(j, "euler", what);
  c.spin = detail::get_optional<bool>(j, "spin", what).value_or(false);
  c.stably_parallelizable = detail::get_optional<bool>(j, "stably_parallelizable", what);
  for (const char* side : {"incoming", "outgoing"}) {
    if (!j.contains(side)) continue;
    if (!j.at(side).is_array())
      throw Error(Errc::malformed_input, std::string("'") + side + "' must be a list");
    auto& dst = std::string_view(side) == "incoming" ? c.incoming : c.outgoing;
    for (const auto& v : j.at(side)) dst.push_back(boundary_entry(v, user));
  }
  c.validate();
  return c;
}

inline json cobordism_to_json(const CobordismDescriptor& c) {
  json in = json::array(), out = json::array();
  for (const auto& b : c.incoming) in.push_back(b.name);
  for (const auto& b : c.outgoing) out.push_back(b.name);
  json j = {{"dim", c.dim}, {"euler", c.euler}, {"incoming", in}, {"outgoing", out},
            {"spin", c.spin}, {"stably_parallelizable", nullptr}};
  if (c.stably_parallelizable) j["stably_parallelizable"] = *c.stably_parallelizable;
  return j;
}

inline Eigen::MatrixXd matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw Error(Errc::malformed_input, what + " must be a nonempty list of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) throw Error(Errc::malformed_input, what + " rows must be lists");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& r = j[static_cast<std::size_t>(i)];
    if (!r.is_array() || static_cast<Eigen::Index>(r.size()) != cols)
      throw Error(Errc::malformed_input, what + " is ragged");
    for (Eigen::Index k = 0; k < cols; ++k) {
      if (!r[static_cast<std::size_t>(k)].is_number())
        throw Error(Errc::malformed_input, what + " entries must be numbers");
      m(i, k) = r[static_cast<std::size_t>(k)].get<double>();
    }
  }
  return m;
}

inline Eigen::VectorXd vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw Error(Errc::malformed_input, what + " must be a nonempty list");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw Error(Errc::malformed_input, what + " entries must be numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

// ---------------------------------------------------------------------------
// Writing

inline json tristate(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

inline json invariants_to_json(const ManifoldDescriptor& m) {
  json j = descriptor_to_json(m);
  j["schema"] = schema::invariants;
  j["euler"] = m.euler();
  j["semi_characteristic"] = nullptr;
  if (m.dim % 2 == 1)
    j["semi_characteristic"] = {{"Q", semi_characteristic(m, Field::Q)},
                                {"Z2", semi_characteristic(m, Field::Z2)}};
  j["builtin"] = m.builtin;
  return j;
}

inline json recipe_to_json(const WitnessRecipe& r) {
  json counts = json::array();
  for (const auto& c : r.counts) counts.push_back({{"summand", c.summand}, {"k", c.k}});
  return {{"dim", r.dim},
          {"base_chi", r.base_chi},
          {"target", r.target},
          {"counts", std::move(counts)},
          {"resulting_euler", r.resulting_euler}};
}

inline WitnessRecipe recipe_from_json(const json& j) {
  const std::string what = "recipe";
  WitnessRecipe r;
  r.dim = detail::get_optional<int>(j, "dim", what).value_or(0);
  r.base_chi = detail::get<std::int64_t>(j, "base_chi", what);
  r.target = detail::get<std::int64_t>(j, "target", what);
  r.resulting_euler = detail::get<std::int64_t>(j, "resulting_euler", what);
  if (!j.at("counts").is_array()) throw Error(Errc::malformed_input, "recipe counts must be a list");
  for (const auto& c : j.at("counts"))
    r.counts.push_back({detail::get<std::string>(c, "summand", what), detail::get<std::int64_t>(c, "k", what)});
  return r;
}

inline json menu_to_json(const SummandMenu& menu) {
  json out = json::array();
  for (const auto& e : menu.entries)
    out.push_back({{"summand", e.manifold.name},
                   {"dim", e.manifold.dim},
                   {"euler", e.manifold.euler()},
                   {"delta", e.delta},
                   {"spin", e.manifold.spin}});
  return out;
}

inline json witness_template_to_json(const WitnessTemplate& t) {
  return {{"boundary_dim", t.boundary_dim},
          {"dim", t.menu.dim},
          {"spin", t.spin},
          {"menu", menu_to_json(t.menu)},
          {"parity_modulus", t.parity_modulus},
          {"parity_residue", t.parity_residue},
          {"base", t.base_description},
          {"instance", t.instance ? recipe_to_json(*t.instance) : json(nullptr)}};
}

inline json verdict_to_json(const Verdict& v, const std::string& mode, const std::string& left,
                            const std::string& right) {
  json j = {{"schema", schema::verdict},
            {"mode", mode},
            {"left", left},
            {"right", right},
            {"answer", std::string(answer_name(v.answer))},
            {"rule", v.rule},
            {"obstruction", nullptr},
            {"checks", v.checks},
            {"reason", v.reason},
            {"witness", nullptr}};
  if (v.obstruction)
    j["obstruction"] = {{"invariant", v.obstruction->invariant},
                        {"left", v.obstruction->left},
                        {"right", v.obstruction->right},
                        {"detail", v.obstruction->detail}};
  if (v.witness) j["witness"] = witness_template_to_json(*v.witness);
  return j;
}

inline std::string group_symbol(int n) { return "Ω^{Spin₀}_{1," + std::to_string(n) + "}"; }

inline json classification_to_json(const GroupClassification& g, const std::string& expression) {
  return {{"schema", schema::classification},
          {"expression", expression},
          {"n", g.n},
          {"symbol", group_symbol(g.n)},
          {"group", g.group},
          {"invariant_tuple", g.invariant_tuple},
          {"invariant_names", g.invariant_names}};
}

inline json kink_to_json(const KinkReport& r) {
  return {{"schema", schema::kink},
          {"kink", r.kink},
          {"formula_used", std::string(kink_formula_name(r.formula_used))},
          {"parity_ok", tristate(r.parity_ok)}};
}

inline json matrix_to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    out.push_back(std::move(row));
  }
  return out;
}

inline json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

inline json inertia_to_json(const Inertia& in) {
  return {{"negative", in.negative}, {"zero", in.zero}, {"positive", in.positive}};
}

inline json homology_to_json(const HomologySummary& h, const ChainComplex& c) {
  json torsion = json::array();
  for (const auto& t : h.torsion) {
    json deg = json::array();
    for (const auto& d : t) deg.push_back(d.str());
    torsion.push_back(std::move(deg));
  }
  return {{"schema", schema::homology},
          {"dim", c.dim()},
          {"chain_ranks", c.chain_ranks()},
          {"betti_q", h.betti_q},
          {"betti_z2", h.betti_z2},
          {"torsion", std::move(torsion)},
          {"euler", euler_characteristic_of_complex(c)}};
}

inline json error_to_json(const Error& e) {
  json j = {{"schema", schema::error},
            {"error", std::string(errc_name(e.code()))},
            {"message", e.what()},
            {"position", nullptr}};
  if (const auto* p = dynamic_cast<const PositionedError*>(&e)) j["position"] = p->position();
  if (const auto* ns = dynamic_cast<const NoSolution*>(&e)) {
    j["modulus"] = ns->modulus();
    j["residue"] = ns->residue();
  }
  return j;
}

} // namespace cobord::io
