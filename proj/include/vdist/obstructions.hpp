#pragma once

#include <map>
#include <optional>
#include <string>

#include "vdist/distance.hpp"
#include "vdist/lattice.hpp"
#include "vdist/semilattice.hpp"

namespace vdist {

// ---------------------------------------------------------------------------
// Finite diagrams of semilattices
// ---------------------------------------------------------------------------

struct DiagramArrow {
  std::string name;
  std::string src;
  std::string dst;
  SemilatticeHom hom;
};

/// A finite labeled acyclic multigraph of semilattices and homomorphisms.
struct SemilatticeDiagram {
  std::map<std::string, SemilatticePtr> nodes;
  std::vector<DiagramArrow> arrows;

  const SemilatticePtr& node(const std::string& name) const {
    auto it = nodes.find(name);
    require(it != nodes.end(), "unknown diagram node: " + name);
    return it->second;
  }
};

struct CommutesFailure {
  std::string src, dst;
  std::vector<std::string> path_a, path_b;  // arrow names
  int witness;                              // element of src with different images
};

struct CommutesResult {
  bool ok = true;
  std::optional<CommutesFailure> failure;
};

/// All parallel composite maps must agree. Paths are enumerated by DFS;
/// the diagram must be acyclic.
inline CommutesResult verify_commutes(const SemilatticeDiagram& diag) {
  for (const auto& a : diag.arrows) {
    require(same_semilattice(*diag.node(a.src), *a.hom.dom),
            "arrow " + a.name + ": dom mismatch");
    require(same_semilattice(*diag.node(a.dst), *a.hom.cod),
            "arrow " + a.name + ": cod mismatch");
  }
  // acyclicity via DFS coloring over node names
  {
    std::map<std::string, int> color;  // 0 new, 1 active, 2 done
    std::function<void(const std::string&)> dfs = [&](const std::string& v) {
      color[v] = 1;
      for (const auto& a : diag.arrows)
        if (a.src == v) {
          int c = color[a.dst];
          require(c != 1, "diagram has a directed cycle through " + a.dst);
          if (c == 0) dfs(a.dst);
        }
      color[v] = 2;
    };
    for (const auto& [name, s] : diag.nodes)
      if (color[name] == 0) dfs(name);
  }

  // collect composite maps per (src, dst)
  struct Path {
    std::vector<std::string> names;
    std::vector<int32_t> map;
  };
  CommutesResult res;
  for (const auto& [src, s] : diag.nodes) {
    std::map<std::string, std::vector<Path>> reached;
    std::function<void(const std::string&, const Path&)> walk =
        [&](const std::string& at, const Path& p) {
          for (const auto& a : diag.arrows) {
            if (a.src != at) continue;
            Path q;
            q.names = p.names;
            q.names.push_back(a.name);
            q.map.resize(p.map.size());
            for (std::size_t x = 0; x < p.map.size(); ++x)
              q.map[x] = a.hom(p.map[x]);
            reached[a.dst].push_back(q);
            walk(a.dst, q);
          }
        };
    Path start;
    start.map.resize(s->n);
    std::iota(start.map.begin(), start.map.end(), 0);
    walk(src, start);
    for (const auto& [dst, paths] : reached)
      for (std::size_t i = 1; i < paths.size(); ++i)
        if (paths[i].map != paths[0].map) {
          int x = 0;
          while (paths[i].map[x] == paths[0].map[x]) ++x;
          res.ok = false;
          res.failure = {src, dst, paths[0].names, paths[i].names, x};
          return res;
        }
  }
  return res;
}

// ---------------------------------------------------------------------------
// The powerset cube
// ---------------------------------------------------------------------------

namespace detail {

/// Hom between powerset semilattices from atom images, extended by union.
inline SemilatticeHom atom_map_hom(SemilatticePtr dom, SemilatticePtr cod,
                                   const std::vector<int>& atom_images) {
  std::vector<int32_t> map(dom->n, 0);
  for (int m = 0; m < dom->n; ++m) {
    int v = 0;
    for (std::size_t i = 0; i < atom_images.size(); ++i)
      if (m >> i & 1) v = cod->join(v, atom_images[i]);
    map[m] = v;
  }
  return make_hom(std::move(dom), std::move(cod), std::move(map));
}

}  // namespace detail

/// Atom images of the six inner maps and the three top maps of the cube.
/// f, g: P(2) -> P(4); h0, h1, h2: P(4) -> P(8). Values are bitmasks.
struct CubeTables {
  std::vector<int> f{0b0011, 0b1100};
  std::vector<int> g{0b0101, 0b1010};
  std::vector<int> h0{0b10010001, 0b01101000, 0b01100100, 0b10010010};
  std::vector<int> h1{0b10110001, 0b11010010, 0b11100100, 0b01111000};
  std::vector<int> h2{0b01010001, 0b10100010, 0b10101000, 0b01010100};
};

/// The commutative cube: 2 at the bottom, three P(2), three P(4) (indexed to
/// match the receiving side), P(8) on top. Arrows: e into each P(2); f and g
/// wired so that P2_0 -f-> P4_2, P4_1; P2_1 -g-> P4_2, -f-> P4_0;
/// P2_2 -g-> P4_1, P4_0; h_i: P4_i -> P8.
inline SemilatticeDiagram build_powerset_cube() {
  CubeTables t;
  SemilatticeDiagram d;
  auto two = powerset_semilattice(1);
  auto p2 = powerset_semilattice(2);
  auto p4 = powerset_semilattice(4);
  auto p8 = powerset_semilattice(8);
  d.nodes["2"] = two;
  for (int i = 0; i < 3; ++i) {
    d.nodes["P2_" + std::to_string(i)] = p2;
    d.nodes["P4_" + std::to_string(i)] = p4;
  }
  d.nodes["P8"] = p8;

  for (int i = 0; i < 3; ++i)
    d.arrows.push_back({"e" + std::to_string(i), "2", "P2_" + std::to_string(i),
                        detail::atom_map_hom(two, p2, {0b11})});
  auto add = [&](const std::string& name, int src, int dst,
                 const std::vector<int>& atoms) {
    d.arrows.push_back({name, "P2_" + std::to_string(src),
                        "P4_" + std::to_string(dst),
                        detail::atom_map_hom(p2, p4, atoms)});
  };
  add("f02", 0, 2, t.f);
  add("f01", 0, 1, t.f);
  add("g12", 1, 2, t.g);
  add("f10", 1, 0, t.f);
  add("g21", 2, 1, t.g);
  add("g20", 2, 0, t.g);
  d.arrows.push_back({"h0", "P4_0", "P8", detail::atom_map_hom(p4, p8, t.h0)});
  d.arrows.push_back({"h1", "P4_1", "P8", detail::atom_map_hom(p4, p8, t.h1)});
  d.arrows.push_back({"h2", "P4_2", "P8", detail::atom_map_hom(p4, p8, t.h2)});
  return d;
}

// ---------------------------------------------------------------------------
// The eight-case forced-value derivation
// ---------------------------------------------------------------------------

/// One midpoint orientation per level-1 node: true = the midpoint sits at
/// distance {0} from x (P), false = at distance {1} (Q).
struct CaseAssignment {
  std::array<bool, 3> p;  // p[i] = P(i)

  std::string label() const {
    std::string s;
    for (bool b : p) s += b ? 'P' : 'Q';
    return s;
  }
};

/// Forced values (as bitmasks) and the element violating the triangle law
/// after lifting to P(8).
struct CaseReport {
  CaseAssignment assignment;
  int mu2_z0z1 = 0, mu1_z0z2 = 0, mu0_z1z2 = 0;  // P(4) masks
  int mu_z0z1 = 0, mu_z0z2 = 0, mu_z1z2 = 0;     // P(8) masks
  int violator = -1;  // least element of mu(z0,z2) \ (mu(z0,z1) u mu(z1,z2))
};

namespace detail {

inline int apply_atoms(const std::vector<int>& atoms, int mask) {
  int v = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (mask >> i & 1) v |= atoms[i];
  return v;
}

/// Forced value of the midpoint pair at one P(4) node. The two midpoints
/// enter by f and g; both triangle routes (through x and through y) bound
/// the value above, the reverse triangles bound it below, and the bounds
/// must meet.
inline int forced_pair_value(int f_x, int g_x, int f_y, int g_y) {
  const int upper = (f_x | g_x) & (f_y | g_y);
  const int lower = (f_x & ~g_x) | (g_x & ~f_x) | (f_y & ~g_y) | (g_y & ~f_y);
  require(upper == lower, "case derivation did not pin a unique value");
  return upper;
}

}  // namespace detail

/// Reproduces the forced-value computation for one orientation assignment.
/// Level-1 values are {0}/{1} by orientation; each P(4) node pins its
/// midpoint-pair value; the h maps lift to P(8), where the triangle law
/// fails. Throws if any step fails to force a unique value or if no
/// violating element exists.
inline CaseReport derive_case(const CaseAssignment& ca) {
  CubeTables t;
  CaseReport rep;
  rep.assignment = ca;
  // lam_x[i] = lambda_i(x, z_i), lam_y[i] = lambda_i(z_i, y), P(2) masks
  std::array<int, 3> lam_x, lam_y;
  for (int i = 0; i < 3; ++i) {
    lam_x[i] = ca.p[i] ? 0b01 : 0b10;
    lam_y[i] = ca.p[i] ? 0b10 : 0b01;
  }
  auto f = [&](int m) { return detail::apply_atoms(t.f, m); };
  auto g = [&](int m) { return detail::apply_atoms(t.g, m); };

  // node P4_2 hosts (z0, z1): z0 by f, z1 by g; similarly P4_1: (z0, z2),
  // P4_0: (z1, z2)
  rep.mu2_z0z1 =
      detail::forced_pair_value(f(lam_x[0]), g(lam_x[1]), f(lam_y[0]), g(lam_y[1]));
  rep.mu1_z0z2 =
      detail::forced_pair_value(f(lam_x[0]), g(lam_x[2]), f(lam_y[0]), g(lam_y[2]));
  rep.mu0_z1z2 =
      detail::forced_pair_value(f(lam_x[1]), g(lam_x[2]), f(lam_y[1]), g(lam_y[2]));

  rep.mu_z0z1 = detail::apply_atoms(t.h2, rep.mu2_z0z1);
  rep.mu_z0z2 = detail::apply_atoms(t.h1, rep.mu1_z0z2);
  rep.mu_z1z2 = detail::apply_atoms(t.h0, rep.mu0_z1z2);

  const int diff = rep.mu_z0z2 & ~(rep.mu_z0z1 | rep.mu_z1z2);
  require(diff != 0, "case derivation found no triangle violation");
  rep.violator = 0;
  while (!(diff >> rep.violator & 1)) ++rep.violator;
  return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive five-point constraint search
// ---------------------------------------------------------------------------

struct CspModel {
  std::array<int, 3> lam_x, lam_y;  // P(2) masks
  std::array<int, 3> pair_value;    // P(4) masks for the three midpoint pairs
};

struct CspResult {
  long long models = 0;
  std::optional<CspModel> first_model;
};

namespace detail {

/// All triangle instances on a small value matrix of bitmasks (union joins).
inline bool triangles_hold(const std::vector<std::vector<int>>& v) {
  const int n = static_cast<int>(v.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if ((v[x][z] & ~(v[x][y] | v[y][z])) != 0) return false;
  return true;
}

}  // namespace detail

/// Independent refutation: enumerate every distance assignment on the point
/// configuration {x, y, z0, z1, z2} across the cube levels, constrained by
/// the morphism identities along the arrows and the distance axioms, with
/// lambda(x,y) = 1 at the bottom. With the type-3/2 requirement at level 1
/// the search must be empty; without it, models exist.
inline CspResult cube_lifting_csp(bool with_type32) {
  CubeTables t;
  auto f = [&](int m) { return detail::apply_atoms(t.f, m); };
  auto g = [&](int m) { return detail::apply_atoms(t.g, m); };
  auto h = [&](int k, int m) {
    const std::vector<int>& a = (k == 0) ? t.h0 : (k == 1) ? t.h1 : t.h2;
    return detail::apply_atoms(a, m);
  };

  CspResult res;
  // level-1 candidate pairs (lambda_i(x,z_i), lambda_i(z_i,y))
  std::vector<std::pair<int, int>> level1;
  for (int lx = 0; lx < 4; ++lx)
    for (int ly = 0; ly < 4; ++ly) {
      // triangle on {x, y, z_i} with lambda_i(x,y) = e(1) = {0,1}
      std::vector<std::vector<int>> v = {{0, 3, lx}, {3, 0, ly}, {lx, ly, 0}};
      if (!detail::triangles_hold(v)) continue;
      if (with_type32) {
        bool ok = false;
        for (int z = 0; z < 3 && !ok; ++z) {
          // distances from x and to y for candidate midpoints x, y, z_i
          const int dxz = (z == 0) ? 0 : (z == 1) ? 3 : lx;
          const int dzy = (z == 0) ? 3 : (z == 1) ? 0 : ly;
          if (((dxz & ~0b01) == 0 && (dzy & ~0b10) == 0) ||
              ((dxz & ~0b10) == 0 && (dzy & ~0b01) == 0))
            ok = true;
        }
        if (!ok) continue;
      }
      level1.emplace_back(lx, ly);
    }

  // the three midpoint pairs and the maps each midpoint enters by:
  // node P4_2 hosts (z0 via f, z1 via g), P4_1 (z0 via f, z2 via g),
  // P4_0 (z1 via f, z2 via g)
  constexpr int host_a[3] = {0, 0, 1};  // first midpoint index at node 2,1,0
  constexpr int host_b[3] = {1, 2, 2};  // second midpoint index

  for (const auto& [lx0, ly0] : level1)
    for (const auto& [lx1, ly1] : level1)
      for (const auto& [lx2, ly2] : level1) {
        const std::array<int, 3> lam_x{lx0, lx1, lx2}, lam_y{ly0, ly1, ly2};
        // level-2 fixed values per node
        std::array<int, 3> fx, gx, fy, gy;
        bool consistent = true;
        for (int node = 0; node < 3; ++node) {
          const int za = host_a[2 - node];  // hosted pair of node P4_(node)
          const int zb = host_b[2 - node];
          fx[node] = f(lam_x[za]);
          gx[node] = g(lam_x[zb]);
          fy[node] = f(lam_y[za]);
          gy[node] = g(lam_y[zb]);
          if (f(3) != g(3)) consistent = false;  // mu(x,y) via both routes
        }
        if (!consistent) continue;

        for (int v2 = 0; v2 < 16; ++v2) {
          {  // level-2 triangles at node P4_2
            std::vector<std::vector<int>> m = {{0, 15, fx[2], gx[2]},
                                               {15, 0, fy[2], gy[2]},
                                               {fx[2], fy[2], 0, v2},
                                               {gx[2], gy[2], v2, 0}};
            if (!detail::triangles_hold(m)) continue;
          }
          for (int v1 = 0; v1 < 16; ++v1) {
            {
              std::vector<std::vector<int>> m = {{0, 15, fx[1], gx[1]},
                                                 {15, 0, fy[1], gy[1]},
                                                 {fx[1], fy[1], 0, v1},
                                                 {gx[1], gy[1], v1, 0}};
              if (!detail::triangles_hold(m)) continue;
            }
            for (int v0 = 0; v0 < 16; ++v0) {
              {
                std::vector<std::vector<int>> m = {{0, 15, fx[0], gx[0]},
                                                   {15, 0, fy[0], gy[0]},
                                                   {fx[0], fy[0], 0, v0},
                                                   {gx[0], gy[0], v0, 0}};
                if (!detail::triangles_hold(m)) continue;
              }
              // level 3: all five points; lift values through the h maps.
              // mu(x,z_i) exists along two routes; they must agree.
              std::array<int, 3> mxz, mzy;
              bool lift_ok = true;
              for (int i = 0; i < 3 && lift_ok; ++i) {
                // z_i is hosted at the two nodes other than P4_i
                int routes_x[2], routes_y[2], r = 0;
                for (int node = 0; node < 3; ++node) {
                  const int za = host_a[2 - node], zb = host_b[2 - node];
                  if (za == i) {
                    routes_x[r] = h(node, fx[node]);
                    routes_y[r] = h(node, fy[node]);
                    ++r;
                  } else if (zb == i) {
                    routes_x[r] = h(node, gx[node]);
                    routes_y[r] = h(node, gy[node]);
                    ++r;
                  }
                }
                if (routes_x[0] != routes_x[1] || routes_y[0] != routes_y[1])
                  lift_ok = false;
                mxz[i] = routes_x[0];
                mzy[i] = routes_y[0];
              }
              if (!lift_ok) continue;
              const int m01 = h(2, v2), m02 = h(1, v1), m12 = h(0, v0);
              const int mxy = h(2, 15);
              std::vector<std::vector<int>> m = {
                  {0, mxy, mxz[0], mxz[1], mxz[2]},
                  {mxy, 0, mzy[0], mzy[1], mzy[2]},
                  {mxz[0], mzy[0], 0, m01, m02},
                  {mxz[1], mzy[1], m01, 0, m12},
                  {mxz[2], mzy[2], m02, m12, 0}};
              if (!detail::triangles_hold(m)) continue;
              ++res.models;
              if (!res.first_model)
                res.first_model = CspModel{lam_x, lam_y, {v2, v1, v0}};
            }
          }
        }
      }
  return res;
}

struct LiftingRefutation {
  std::array<CaseReport, 8> cases;  // P/Q assignments in PPP..QQQ order
  bool all_cases_violate = true;
  long long models_with_type32 = 0;
  long long models_without_type32 = 0;
};

/// Runs the eight-case derivation and the independent constraint search.
inline LiftingRefutation refute_all_liftings() {
  LiftingRefutation out;
  for (int bits = 0; bits < 8; ++bits) {
    // P exactly where the bit is clear, reading i = 0,1,2 from the top bit
    CaseAssignment ca;
    ca.p = {!(bits >> 2 & 1), !(bits >> 1 & 1), !(bits & 1)};
    out.cases[bits] = derive_case(ca);
    if (out.cases[bits].violator < 0) out.all_cases_violate = false;
  }
  out.models_with_type32 = cube_lifting_csp(true).models;
  out.models_without_type32 = cube_lifting_csp(false).models;
  return out;
}

// ---------------------------------------------------------------------------
// The lattice-D interval obstruction
// ---------------------------------------------------------------------------

struct DecorationReport {
  std::string target;  // "M3_decorated" or "N5_decorated"
  std::array<bool, 8> inequalities{};
  bool non_inequality = false;       // y2 is NOT below x2 v y0
  std::array<bool, 3> sublattices_distributive{};
  bool ok = false;
};

/// The eight decoration inequalities, the required failure, and the three
/// distributive 4-generator sublattices, for both decorated targets.
inline std::vector<DecorationReport> decoration_checks() {
  std::vector<DecorationReport> out;
  for (const char* name : {"M3_decorated", "N5_decorated"}) {
    const auto& dec = builtin_lattice(name);
    const auto& m = *dec.lattice;
    const int x0 = dec.names.at("x0"), y0 = dec.names.at("y0");
    const int x1 = dec.names.at("x1"), y1 = dec.names.at("y1");
    const int x2 = dec.names.at("x2"), y2 = dec.names.at("y2");
    DecorationReport r;
    r.target = name;
    r.inequalities = {
        m.leq(m.meet(x0, y1), x1), m.leq(y1, m.join(x1, y0)),
        m.leq(m.meet(x1, y0), x0), m.leq(y0, m.join(x0, y1)),
        m.leq(m.meet(x1, y2), x2), m.leq(y2, m.join(x2, y1)),
        m.leq(m.meet(x2, y1), x1), m.leq(y1, m.join(x1, y2)),
    };
    r.non_inequality = !m.leq(y2, m.join(x2, y0));
    const std::array<std::array<int, 4>, 3> gens = {{
        {x1, x2, y1, y2},
        {x0, x2, y0, y2},
        {x0, x1, y0, y1},
    }};
    for (int i = 0; i < 3; ++i) {
      auto sub = sublattice_generated(m, {gens[i].begin(), gens[i].end()});
      r.sublattices_distributive[i] = is_distributive_sublattice(m, sub);
    }
    r.ok = r.non_inequality;
    for (bool b : r.inequalities) r.ok = r.ok && b;
    for (bool b : r.sublattices_distributive) r.ok = r.ok && b;
    out.push_back(std::move(r));
  }
  return out;
}

struct IntervalTargetReport {
  std::string target;
  bool phi_homs_exist = false;
  bool phi0_eplus_zero = false;
  bool phi2_eplus_zero = false;
  bool phi1_eminus_nonzero = false;
  bool no_triple_survives = false;  // no (d0,d1,d2) in [e-,e+]^3 satisfies
                                    // image(d1) <= image(d0) v image(d2)
  bool ok = false;
};

struct IntervalObstructionReport {
  bool conc_d_boolean = false;
  int atom_count = 0;
  bool atoms_match_displayed = false;  // the seven displayed congruences are
                                       // exactly the cover-based atoms
  bool e_minus_is_atom_join = false;   // e- = u0' v v1 as atoms
  int interval_size = 0;
  std::vector<IntervalTargetReport> targets;
  bool ok = false;
};

/// Verifies the finite core of the non-representability argument: Conc D is
/// Boolean with the seven displayed atoms, e- and e+ bound the candidate
/// congruences, the three generator homomorphisms into each decorated target
/// collapse the interval endpoints as required, and no interval triple
/// survives the pushed containment d1 <= d0 v d2.
inline IntervalObstructionReport d_interval_obstruction_checks() {
  IntervalObstructionReport rep;
  const auto& db = builtin_lattice("D");
  auto D = db.lattice;
  const int u0 = db.names.at("u0"), u1 = db.names.at("u1");
  const int v0 = db.names.at("v0"), v1 = db.names.at("v1");

  auto cc = conc(D);
  const auto& S = *cc.semilattice;
  auto batoms = boolean_atoms(S);
  rep.conc_d_boolean = batoms.has_value();
  rep.atom_count = batoms ? static_cast<int>(batoms->size()) : 0;

  // the seven displayed congruences
  std::map<std::string, Congruence> displayed;
  displayed.emplace("u0", theta_plus(D, u0, v1));
  displayed.emplace("u1", theta_plus(D, u1, v0));
  displayed.emplace("v0", theta_plus(D, v0, D->join(u0, v1)));
  displayed.emplace("v1", theta_plus(D, v1, D->join(u1, v0)));
  displayed.emplace("u0'", theta_plus(D, D->meet(u0, v1), u1));
  displayed.emplace("u1'", theta_plus(D, D->meet(u1, v0), u0));
  displayed.emplace("w", principal_congruence(
                             D, D->join(D->meet(u0, v1), D->meet(u1, v0)),
                             D->meet(v0, v1)));

  // they must coincide with the cover-based atoms T(p_*, p), p in J(D)
  rep.atoms_match_displayed = true;
  {
    auto ji = join_irreducibles(*D);
    std::map<int, std::string> ji_name;
    for (const char* nm : {"u0", "u1", "v0", "v1", "u0'", "u1'", "w"})
      ji_name[db.names.at(nm)] = nm;
    if (ji.size() != 7 || displayed.size() != 7) rep.atoms_match_displayed = false;
    for (const auto& j : ji) {
      auto it = ji_name.find(j.element);
      if (it == ji_name.end()) {
        rep.atoms_match_displayed = false;
        break;
      }
      auto cover_atom = principal_congruence(D, j.lower_cover, j.element);
      if (!(cover_atom == displayed.at(it->second)))
        rep.atoms_match_displayed = false;
    }
    if (batoms) {
      std::vector<int> displayed_idx;
      for (const auto& [nm, c] : displayed) displayed_idx.push_back(cc.index_of(c));
      std::sort(displayed_idx.begin(), displayed_idx.end());
      if (displayed_idx != *batoms) rep.atoms_match_displayed = false;
    }
  }

  // e- and e+
  auto e_minus_c = congruence_join(theta_plus(D, D->meet(u0, v1), u1),
                                   theta_plus(D, v1, D->join(u1, v0)));
  auto e_plus_c = congruence_join(
      congruence_join(e_minus_c, theta_plus(D, D->meet(u1, v0), u0)),
      theta_plus(D, v0, D->join(u0, v1)));
  const int e_minus = cc.index_of(e_minus_c);
  const int e_plus = cc.index_of(e_plus_c);
  rep.e_minus_is_atom_join =
      e_minus ==
      cc.index_of(congruence_join(displayed.at("u0'"), displayed.at("v1")));

  std::vector<int> interval;
  for (int v = 0; v < S.n; ++v)
    if (S.leq(e_minus, v) && S.leq(v, e_plus)) interval.push_back(v);
  rep.interval_size = static_cast<int>(interval.size());

  for (const char* name : {"M3_decorated", "N5_decorated"}) {
    const auto& dec = builtin_lattice(name);
    IntervalTargetReport tr;
    tr.target = name;
    auto ccm = conc(dec.lattice);
    std::array<std::optional<SemilatticeHom>, 3> ch;
    tr.phi_homs_exist = true;
    for (int i = 0; i < 3; ++i) {
      const int ip = (i == 0) ? 1 : 0;
      const int ipp = (i == 2) ? 1 : 2;
      auto phi = hom_from_generators(
          D, dec.lattice,
          {{u0, dec.names.at("x" + std::to_string(ip))},
           {v0, dec.names.at("y" + std::to_string(ip))},
           {u1, dec.names.at("x" + std::to_string(ipp))},
           {v1, dec.names.at("y" + std::to_string(ipp))}});
      if (!phi) {
        tr.phi_homs_exist = false;
        break;
      }
      ch[i] = conc_hom(*phi, cc, ccm);
    }
    if (tr.phi_homs_exist) {
      tr.phi0_eplus_zero = (*ch[0])(e_plus) == 0;
      tr.phi2_eplus_zero = (*ch[2])(e_plus) == 0;
      tr.phi1_eminus_nonzero = (*ch[1])(e_minus) != 0;
      tr.no_triple_survives = true;
      const auto& SM = *ccm.semilattice;
      for (int d0 : interval)
        for (int d1 : interval)
          for (int d2 : interval)
            if (SM.leq((*ch[1])(d1), SM.join((*ch[0])(d0), (*ch[2])(d2))))
              tr.no_triple_survives = false;
    }
    tr.ok = tr.phi_homs_exist && tr.phi0_eplus_zero && tr.phi2_eplus_zero &&
            tr.phi1_eminus_nonzero && tr.no_triple_survives;
    rep.targets.push_back(std::move(tr));
  }

  rep.ok = rep.conc_d_boolean && rep.atom_count == 7 &&
           rep.atoms_match_displayed && rep.e_minus_is_atom_join;
  for (const auto& t : rep.targets) rep.ok = rep.ok && t.ok;
  return rep;
}

}  // namespace vdist
