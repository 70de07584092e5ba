#pragma once

#include <json.hpp>

#include "vdist/distance.hpp"
#include "vdist/groups.hpp"
#include "vdist/lattice.hpp"
#include "vdist/semilattice.hpp"
#include "vdist/wurp.hpp"

namespace vdist {

using json = nlohmann::json;

// --- semilattices -----------------------------------------------------------

inline json semilattice_to_json(const FiniteSemilattice& s) {
  json rows = json::array();
  for (int x = 0; x < s.n; ++x) {
    json row = json::array();
    for (int y = 0; y < s.n; ++y) row.push_back(s.join(x, y));
    rows.push_back(std::move(row));
  }
  return json{{"size", s.n}, {"join", std::move(rows)}};
}

/// Accepts { "size": n, "join": [[..]] } or the compact { "powerset": k }.
inline SemilatticePtr semilattice_from_json(const json& j) {
  require(j.is_object(), "semilattice: expected an object");
  if (j.contains("powerset")) return powerset_semilattice(j.at("powerset").get<int>());
  auto join = j.at("join").get<std::vector<std::vector<int>>>();
  if (j.contains("size"))
    require(j.at("size").get<int>() == static_cast<int>(join.size()),
            "semilattice: size does not match the table");
  return make_semilattice(join);
}

inline SemilatticeHom hom_from_json(const json& j) {
  auto dom = semilattice_from_json(j.at("dom"));
  auto cod = semilattice_from_json(j.at("cod"));
  auto map = j.at("map").get<std::vector<int32_t>>();
  return make_hom(std::move(dom), std::move(cod), std::move(map));
}

// --- lattices ---------------------------------------------------------------

inline json lattice_to_json(const FiniteLattice& l,
                            const std::map<std::string, int>* names = nullptr) {
  json join = json::array(), meet = json::array();
  for (int x = 0; x < l.n; ++x) {
    json jr = json::array(), mr = json::array();
    for (int y = 0; y < l.n; ++y) {
      jr.push_back(l.join(x, y));
      mr.push_back(l.meet(x, y));
    }
    join.push_back(std::move(jr));
    meet.push_back(std::move(mr));
  }
  json out{{"size", l.n}, {"join", std::move(join)}, {"meet", std::move(meet)}};
  if (names && !names->empty()) out["names"] = *names;
  return out;
}

/// Accepts { "size", "join", "meet", "names"? } or { "builtin": name }.
inline std::pair<LatticePtr, std::map<std::string, int>> lattice_from_json(
    const json& j) {
  require(j.is_object(), "lattice: expected an object");
  if (j.contains("builtin")) {
    const auto& b = builtin_lattice(j.at("builtin").get<std::string>());
    return {b.lattice, b.names};
  }
  auto join = j.at("join").get<std::vector<std::vector<int>>>();
  auto meet = j.at("meet").get<std::vector<std::vector<int>>>();
  std::map<std::string, int> names;
  if (j.contains("names")) names = j.at("names").get<std::map<std::string, int>>();
  return {make_lattice(join, meet), std::move(names)};
}

// --- distances --------------------------------------------------------------

inline json distance_to_json(const Distance& d) {
  json rows = json::array();
  for (int x = 0; x < d.points; ++x) {
    json row = json::array();
    for (int y = 0; y < d.points; ++y) row.push_back(d.at(x, y));
    rows.push_back(std::move(row));
  }
  return json{{"points", d.points},
              {"semilattice", semilattice_to_json(*d.s)},
              {"value", std::move(rows)}};
}

inline Distance distance_from_json(const json& j) {
  auto s = semilattice_from_json(j.at("semilattice"));
  auto value = j.at("value").get<std::vector<std::vector<int>>>();
  int points = j.contains("points") ? j.at("points").get<int>()
                                    : static_cast<int>(value.size());
  return make_distance(points, std::move(s), value);
}

// --- groups -----------------------------------------------------------------

/// Accepts { "order", "mult" }, { "degree", "perm_generators" } or
/// { "builtin": name }.
inline GroupPtr group_from_json(const json& j) {
  require(j.is_object(), "group: expected an object");
  if (j.contains("builtin")) return builtin_group(j.at("builtin").get<std::string>());
  if (j.contains("perm_generators"))
    return group_from_permutations(
        j.at("degree").get<int>(),
        j.at("perm_generators").get<std::vector<std::vector<int>>>());
  auto mult = j.at("mult").get<std::vector<std::vector<int>>>();
  if (j.contains("order"))
    require(j.at("order").get<int>() == static_cast<int>(mult.size()),
            "group: order does not match the table");
  return make_group_from_table(mult);
}

// --- refinement instances and witnesses --------------------------------------

inline WurpInstance wurp_instance_from_json(const json& j) {
  auto s = semilattice_from_json(j.at("semilattice"));
  return make_wurp_instance(std::move(s), j.at("e").get<int>(),
                            j.at("a").get<std::vector<int>>(),
                            j.at("b").get<std::vector<int>>());
}

inline json wurp_instance_to_json(const WurpInstance& inst) {
  return json{{"semilattice", semilattice_to_json(*inst.s)},
              {"e", inst.e},
              {"a", inst.a},
              {"b", inst.b}};
}

inline json witness_to_json(const WurpWitness& w) {
  return json{{"m", w.m}, {"cover", w.cover}, {"c", w.c}};
}

inline WurpWitness witness_from_json(const json& j) {
  WurpWitness w;
  w.m = j.at("m").get<int>();
  w.cover = j.at("cover").get<std::vector<std::vector<int>>>();
  w.c = j.at("c").get<std::vector<std::vector<int>>>();
  return w;
}

}  // namespace vdist
