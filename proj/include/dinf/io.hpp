#ifndef DINF_IO_HPP
#define DINF_IO_HPP

// JSON forms of posets, towers, step paths and conversion proofs.

#include <cstddef>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dinf/error.hpp"
#include "dinf/lambda.hpp"
#include "dinf/order.hpp"
#include "dinf/step_path.hpp"
#include "dinf/tower.hpp"

namespace dinf::io {

using json = nlohmann::json;

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(2) << "\n";
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Posets: {"name", "elements": [...], "leq": [[a, b], ...]}; the relation
// must be listed in full (reflexive pairs may be omitted).

inline json to_json(const Poset& p, const std::string& name = "") {
  json j;
  if (!name.empty()) j["name"] = name;
  j["elements"] = p.labels();
  json rel = json::array();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.lt(a, b)) rel.push_back({p.label(a), p.label(b)});
  j["leq"] = rel;
  return j;
}

inline Poset poset_from_json(const json& j) {
  auto elements = field<std::vector<std::string>>(j, "elements");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : field<json>(j, "leq")) {
    if (!e.is_array() || e.size() != 2) throw FormatError("leq entries are [a, b] pairs");
    pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Poset::certify(std::move(elements), pairs);
}

/// Certified c.p.o. with its Scott opens; the least element is found.
inline ScottSpace scott_space_of(const Poset& p) {
  auto bottom = p.least();
  if (!bottom) throw NotACpo("no least element");
  return scott_opens(Cpo::certify(p, *bottom));
}

// ---------------------------------------------------------------------------
// Towers

inline json to_json(const Tower& t) {
  json j;
  j["k"] = t.k();
  j["N"] = t.depth();
  j["sizes"] = t.sizes();
  json levels = json::array();
  for (std::size_t n = 0; n <= t.depth(); ++n) {
    const auto& p = t.level(n).cpo.poset();
    levels.push_back({{"level", n}, {"elements", p.labels()}, {"covers", json::array()}});
    for (auto [a, b] : p.covers()) levels.back()["covers"].push_back({p.label(a), p.label(b)});
  }
  j["levels"] = levels;
  json phi = json::array(), psi = json::array();
  for (std::size_t n = 0; n < t.depth(); ++n) {
    phi.push_back(t.phi(n));
    psi.push_back(t.psi(n));
  }
  j["phi"] = phi;
  j["psi"] = psi;
  return j;
}

/// Rebuilds from (k, N) and insists the stored sizes and maps match.
inline TowerPtr tower_from_json(const json& j) {
  auto t = Tower::build(field<std::size_t>(j, "k"), field<std::size_t>(j, "N"));
  if (j.contains("sizes") && j["sizes"].get<std::vector<std::size_t>>() != t->sizes())
    throw FormatError("stored tower sizes do not match a rebuild");
  if (j.contains("phi"))
    for (std::size_t n = 0; n < t->depth(); ++n)
      if (j["phi"].at(n).get<std::vector<std::size_t>>() != t->phi(n) ||
          j["psi"].at(n).get<std::vector<std::size_t>>() != t->psi(n))
        throw FormatError("stored projection pair does not match a rebuild");
  return t;
}

// ---------------------------------------------------------------------------
// Step paths: {"space": poset, "dim", "breaks": [["0", "1/2", "1"], ...],
// "values": nested arrays of labels over the doubled grid}

template <std::size_t Dim>
json to_json(const StepPath<Dim>& p) {
  json j;
  j["space"] = to_json(p.space().poset());
  j["dim"] = Dim;
  json breaks = json::array();
  for (const auto& axis : p.breaks()) {
    json a = json::array();
    for (const auto& q : axis) a.push_back(to_string(q));
    breaks.push_back(a);
  }
  j["breaks"] = breaks;
  const auto& sp = p.space().poset();
  if constexpr (Dim == 1) {
    json v = json::array();
    for (auto x : p.values()) v.push_back(sp.label(x));
    j["values"] = v;
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < p.extent(0); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < p.extent(1); ++k) row.push_back(sp.label(p.at({i, k})));
      rows.push_back(row);
    }
    j["values"] = rows;
  }
  return j;
}

template <std::size_t Dim>
StepPath<Dim> path_from_json(const json& j, SpacePtr space = nullptr) {
  static_assert(Dim == 1 || Dim == 2);
  if (field<std::size_t>(j, "dim") != Dim) throw FormatError("expected a " + std::to_string(Dim) + "-path");
  if (!space) space = share(scott_space_of(poset_from_json(field<json>(j, "space"))));
  const auto& sp = space->poset();
  typename StepPath<Dim>::Breaks breaks;
  auto raw = field<std::vector<std::vector<std::string>>>(j, "breaks");
  if (raw.size() != Dim) throw FormatError("one breakpoint list per axis");
  for (std::size_t a = 0; a < Dim; ++a)
    for (const auto& s : raw[a]) breaks[a].push_back(parse_rational(s));
  std::vector<std::size_t> values;
  const auto& v = field<json>(j, "values");
  if constexpr (Dim == 1) {
    for (const auto& x : v) values.push_back(sp.index_of(x.get<std::string>()));
  } else {
    for (const auto& row : v)
      for (const auto& x : row) values.push_back(sp.index_of(x.get<std::string>()));
  }
  return StepPath<Dim>::make(std::move(space), std::move(breaks), std::move(values));
}

// ---------------------------------------------------------------------------
// Conversion proofs: {"name", "steps": [{"kind": "start", "term": "..."}, ...]}

inline json to_json(const ConversionProof& p, const std::string& name = "") {
  json j;
  if (!name.empty()) j["name"] = name;
  json steps = json::array();
  for (const auto& s : p.steps()) steps.push_back({{"kind", to_string(s.kind)}, {"term", to_string(s.term)}});
  j["steps"] = steps;
  return j;
}

inline ConversionProof proof_from_json(const json& j) {
  std::vector<ProofStep> steps;
  for (const auto& s : field<json>(j, "steps"))
    steps.push_back({parse(field<std::string>(s, "term")), step_kind_from_string(field<std::string>(s, "kind"))});
  return ConversionProof::make(std::move(steps));
}

inline std::vector<std::pair<std::string, ConversionProof>> proofs_from_json(const json& j) {
  std::vector<std::pair<std::string, ConversionProof>> out;
  for (const auto& p : field<json>(j, "proofs")) out.emplace_back(field<std::string>(p, "name"), proof_from_json(p));
  return out;
}

}  // namespace dinf::io

#endif
