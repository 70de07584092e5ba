#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "vdist/core.hpp"
#include "vdist/semilattice.hpp"

namespace vdist {

/// A finite lattice given by full join and meet tables. Bottom and top are
/// computed at construction.
struct FiniteLattice {
  int n = 0;
  std::vector<int32_t> join_tab;
  std::vector<int32_t> meet_tab;
  int bottom = 0;
  int top = 0;

  int size() const { return n; }
  int join(int x, int y) const { return join_tab[x * n + y]; }
  int meet(int x, int y) const { return meet_tab[x * n + y]; }
  bool leq(int x, int y) const { return join(x, y) == y; }
  bool in_range(int x) const { return 0 <= x && x < n; }
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

enum class LatticeAxiom {
  JoinSemilattice,   // idempotence/commutativity/associativity of v
  MeetSemilattice,   // same for ^
  Absorption,
};

struct LatticeViolation {
  LatticeAxiom axiom;
  std::array<int, 3> witness;
};

struct LatticeValidation {
  bool ok = true;
  std::vector<LatticeViolation> violations;
};

inline LatticeValidation validate_lattice_tables(
    const std::vector<std::vector<int>>& join,
    const std::vector<std::vector<int>>& meet) {
  const int n = static_cast<int>(join.size());
  require(n >= 1, "lattice must be nonempty");
  require(static_cast<int>(meet.size()) == n, "meet table size mismatch");
  for (const auto* tab : {&join, &meet})
    for (const auto& row : *tab) {
      require(static_cast<int>(row.size()) == n, "table is not n-by-n");
      for (int v : row) require(0 <= v && v < n, "table entry out of range");
    }

  LatticeValidation out;
  auto report = [&](LatticeAxiom a, int x, int y, int z) {
    for (const auto& v : out.violations)
      if (v.axiom == a) return;
    out.ok = false;
    out.violations.push_back({a, {x, y, z}});
  };

  auto semilattice_ok = [&](const std::vector<std::vector<int>>& t) {
    for (int x = 0; x < n; ++x)
      if (t[x][x] != x) return std::optional<std::array<int, 3>>({x, -1, -1});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (t[x][y] != t[y][x]) return std::optional<std::array<int, 3>>({x, y, -1});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (t[t[x][y]][z] != t[x][t[y][z]])
            return std::optional<std::array<int, 3>>({x, y, z});
    return std::optional<std::array<int, 3>>();
  };

  if (auto w = semilattice_ok(join)) report(LatticeAxiom::JoinSemilattice, (*w)[0], (*w)[1], (*w)[2]);
  if (auto w = semilattice_ok(meet)) report(LatticeAxiom::MeetSemilattice, (*w)[0], (*w)[1], (*w)[2]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (meet[x][join[x][y]] != x || join[x][meet[x][y]] != x) {
        report(LatticeAxiom::Absorption, x, y, -1);
        x = n;
        break;
      }
  return out;
}

inline LatticePtr make_lattice(const std::vector<std::vector<int>>& join,
                               const std::vector<std::vector<int>>& meet) {
  auto v = validate_lattice_tables(join, meet);
  if (!v.ok) throw Error("tables do not define a lattice");
  auto l = std::make_shared<FiniteLattice>();
  l->n = static_cast<int>(join.size());
  for (const auto& row : join)
    for (int x : row) l->join_tab.push_back(x);
  for (const auto& row : meet)
    for (int x : row) l->meet_tab.push_back(x);
  int bot = 0, top = 0;
  for (int x = 0; x < l->n; ++x) {
    bot = l->meet(bot, x);
    top = l->join(top, x);
  }
  l->bottom = bot;
  l->top = top;
  return l;
}

/// Row-major pairing product of two lattices.
inline LatticePtr product_lattice(const FiniteLattice& a, const FiniteLattice& b) {
  const int n = a.n * b.n;
  std::vector<std::vector<int>> join(n, std::vector<int>(n)), meet(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xa = x / b.n, xb = x % b.n, ya = y / b.n, yb = y % b.n;
      join[x][y] = a.join(xa, ya) * b.n + b.join(xb, yb);
      meet[x][y] = a.meet(xa, ya) * b.n + b.meet(xb, yb);
    }
  return make_lattice(join, meet);
}

// ---------------------------------------------------------------------------
// Congruences
// ---------------------------------------------------------------------------

/// An operation-compatible partition in canonical form: block ids appear in
/// first-occurrence order, so equality of congruences is vector equality.
struct Congruence {
  LatticePtr lattice;
  std::vector<int> block;

  bool same(int x, int y) const { return block[x] == block[y]; }
  int num_blocks() const { return block_count(block); }
  bool is_identity() const { return num_blocks() == lattice->n; }
  bool is_full() const { return num_blocks() == 1; }

  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.block == b.block;
  }
};

namespace detail {

/// Merge-and-close: unify the seed pairs, then repeatedly close under
/// z -> (z v r, z ^ r) compatibility until stable.
inline std::vector<int> congruence_closure(
    const FiniteLattice& l, const std::vector<std::pair<int, int>>& seeds) {
  UnionFind uf(l.n);
  std::deque<std::pair<int, int>> work;
  for (auto [x, y] : seeds)
    if (uf.unite(x, y)) work.emplace_back(x, y);
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    for (int r = 0; r < l.n; ++r) {
      int a = l.join(p, r), b = l.join(q, r);
      if (uf.unite(a, b)) work.emplace_back(a, b);
      a = l.meet(p, r);
      b = l.meet(q, r);
      if (uf.unite(a, b)) work.emplace_back(a, b);
    }
  }
  return uf.blocks();
}

}  // namespace detail

/// Least congruence identifying x and y.
inline Congruence principal_congruence(LatticePtr l, int x, int y) {
  require(l->in_range(x) && l->in_range(y), "element out of range");
  return {l, detail::congruence_closure(*l, {{x, y}})};
}

/// Theta-plus: the least congruence identifying x^y with x.
inline Congruence theta_plus(LatticePtr l, int x, int y) {
  return principal_congruence(l, l->meet(x, y), x);
}

inline Congruence identity_congruence(LatticePtr l) {
  std::vector<int> b(l->n);
  std::iota(b.begin(), b.end(), 0);
  return {l, std::move(b)};
}

inline Congruence congruence_join(const Congruence& a, const Congruence& b) {
  require(a.lattice == b.lattice || (a.lattice && b.lattice &&
                                     a.lattice->join_tab == b.lattice->join_tab &&
                                     a.lattice->meet_tab == b.lattice->meet_tab),
          "congruence join: lattice mismatch");
  std::vector<std::pair<int, int>> seeds;
  const int n = a.lattice->n;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (a.same(x, y) || b.same(x, y)) seeds.emplace_back(x, y);
  return {a.lattice, detail::congruence_closure(*a.lattice, seeds)};
}

/// Common refinement; the intersection of congruences is a congruence.
inline Congruence congruence_meet(const Congruence& a, const Congruence& b) {
  require(a.lattice == b.lattice || (a.lattice && b.lattice &&
                                     a.lattice->join_tab == b.lattice->join_tab &&
                                     a.lattice->meet_tab == b.lattice->meet_tab),
          "congruence meet: lattice mismatch");
  const int n = a.lattice->n;
  const int nb = block_count(b.block);
  std::vector<int> raw(n);
  for (int x = 0; x < n; ++x) raw[x] = a.block[x] * nb + b.block[x];
  return {a.lattice, canonical_blocks(raw)};
}

inline bool congruence_leq(const Congruence& a, const Congruence& b) {
  for (int x = 0; x < a.lattice->n; ++x)
    for (int y = x + 1; y < a.lattice->n; ++y)
      if (a.same(x, y) && !b.same(x, y)) return false;
  return true;
}

/// Full compatibility check, for validating externally supplied partitions.
inline bool is_congruence(const FiniteLattice& l, const std::vector<int>& block) {
  if (static_cast<int>(block.size()) != l.n) return false;
  for (int x = 0; x < l.n; ++x)
    for (int y = 0; y < l.n; ++y) {
      if (block[x] != block[y]) continue;
      for (int r = 0; r < l.n; ++r) {
        if (block[l.join(x, r)] != block[l.join(y, r)]) return false;
        if (block[l.meet(x, r)] != block[l.meet(y, r)]) return false;
      }
    }
  return true;
}

/// The semilattice of all congruences (all are compact for a finite lattice),
/// plus the congruence list aligned with element indices. Index 0 is the
/// identity congruence; the rest are ordered by decreasing block count, then
/// lexicographically by block vector.
struct ConcLattice {
  SemilatticePtr semilattice;
  LatticePtr lattice;
  std::vector<Congruence> congruences;
  std::map<std::vector<int>, int> index;

  int index_of(const Congruence& c) const {
    auto it = index.find(c.block);
    require(it != index.end(), "congruence not in Conc index");
    return it->second;
  }
};

inline ConcLattice conc(LatticePtr l) {
  const int n = l->n;
  // generators: distinct principal congruences
  std::vector<Congruence> gens;
  std::map<std::vector<int>, int> seen;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      auto c = principal_congruence(l, x, y);
      if (seen.emplace(c.block, 0).second) gens.push_back(c);
    }
  // close under join
  std::vector<Congruence> all{identity_congruence(l)};
  std::map<std::vector<int>, int> have;
  have.emplace(all[0].block, 0);
  std::deque<int> work{0};
  while (!work.empty()) {
    int i = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      auto j = congruence_join(all[i], g);
      if (have.emplace(j.block, static_cast<int>(all.size())).second) {
        all.push_back(j);
        work.push_back(static_cast<int>(all.size()) - 1);
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const Congruence& a, const Congruence& b) {
    int na = a.num_blocks(), nb = b.num_blocks();
    if (na != nb) return na > nb;
    return a.block < b.block;
  });

  ConcLattice out;
  out.lattice = l;
  out.congruences = std::move(all);
  for (int i = 0; i < static_cast<int>(out.congruences.size()); ++i)
    out.index.emplace(out.congruences[i].block, i);

  const int k = static_cast<int>(out.congruences.size());
  std::vector<std::vector<int>> join(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      int v = out.index.at(
          congruence_join(out.congruences[i], out.congruences[j]).block);
      join[i][j] = v;
      join[j][i] = v;
    }
  out.semilattice = make_semilattice(join);
  return out;
}

// ---------------------------------------------------------------------------
// Lattice homomorphisms
// ---------------------------------------------------------------------------

struct LatticeHom {
  LatticePtr dom;
  LatticePtr cod;
  std::vector<int32_t> map;

  int operator()(int x) const { return map[x]; }
};

inline std::optional<std::pair<int, int>> lattice_hom_violation(
    const FiniteLattice& dom, const FiniteLattice& cod,
    const std::vector<int32_t>& map) {
  require(static_cast<int>(map.size()) == dom.n, "hom map length != dom size");
  for (int v : map) require(cod.in_range(v), "hom map entry out of range");
  for (int x = 0; x < dom.n; ++x)
    for (int y = 0; y < dom.n; ++y) {
      if (map[dom.join(x, y)] != cod.join(map[x], map[y])) return std::make_pair(x, y);
      if (map[dom.meet(x, y)] != cod.meet(map[x], map[y])) return std::make_pair(x, y);
    }
  return std::nullopt;
}

inline LatticeHom make_lattice_hom(LatticePtr dom, LatticePtr cod,
                                   std::vector<int32_t> map) {
  if (auto bad = lattice_hom_violation(*dom, *cod, map))
    throw Error("not a lattice homomorphism (witness pair " +
                std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
  return {std::move(dom), std::move(cod), std::move(map)};
}

inline LatticeHom identity_lattice_hom(LatticePtr l) {
  std::vector<int32_t> map(l->n);
  std::iota(map.begin(), map.end(), 0);
  return {l, l, std::move(map)};
}

inline bool preserves_bounds(const LatticeHom& f) {
  return f.map[f.dom->bottom] == f.cod->bottom && f.map[f.dom->top] == f.cod->top;
}

/// Image congruence: the congruence of cod generated by all pairs
/// (f(x), f(y)) with x = y mod alpha.
inline Congruence push_congruence(const LatticeHom& f, const Congruence& alpha) {
  std::vector<std::pair<int, int>> seeds;
  const int n = f.dom->n;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (alpha.same(x, y)) seeds.emplace_back(f(x), f(y));
  return {f.cod, detail::congruence_closure(*f.cod, seeds)};
}

/// The semilattice homomorphism Conc f between congruence semilattices.
/// Join- and zero-preservation are re-validated on construction.
inline SemilatticeHom conc_hom(const LatticeHom& f, const ConcLattice& conc_dom,
                               const ConcLattice& conc_cod) {
  std::vector<int32_t> map(conc_dom.congruences.size());
  for (std::size_t i = 0; i < conc_dom.congruences.size(); ++i)
    map[i] = conc_cod.index_of(push_congruence(f, conc_dom.congruences[i]));
  return make_hom(conc_dom.semilattice, conc_cod.semilattice, std::move(map));
}

// ---------------------------------------------------------------------------
// Birkhoff downsets, generation, distributivity
// ---------------------------------------------------------------------------

struct DownsetLattice {
  LatticePtr lattice;
  std::vector<uint32_t> masks;  // masks[i] = down-set of element i, ascending
};

/// Lattice of down-sets of a poset, given as a reflexive-transitive order
/// matrix on at most 20 points. Joins are unions, meets intersections;
/// element order is ascending mask order, so bottom (empty set) is index 0.
inline DownsetLattice downset_lattice(const std::vector<std::vector<char>>& leq) {
  const int k = static_cast<int>(leq.size());
  require(k >= 0 && k <= 20, "poset too large");
  for (const auto& row : leq)
    require(static_cast<int>(row.size()) == k, "order matrix is not square");
  for (int i = 0; i < k; ++i) require(leq[i][i], "order not reflexive");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (leq[i][j] && leq[j][i] && i != j) throw Error("order not antisymmetric");
      if (!leq[i][j]) continue;
      for (int m = 0; m < k; ++m)
        if (leq[j][m] && !leq[i][m]) throw Error("order not transitive");
    }

  std::vector<uint32_t> down(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (leq[j][i]) down[i] |= (1u << j);

  std::vector<uint32_t> masks;
  for (uint32_t m = 0; m < (1u << k); ++m) {
    bool closed = true;
    for (int i = 0; i < k && closed; ++i)
      if ((m >> i) & 1u)
        if ((down[i] & m) != down[i]) closed = false;
    if (closed) masks.push_back(m);
  }
  std::map<uint32_t, int> idx;
  for (int i = 0; i < static_cast<int>(masks.size()); ++i) idx[masks[i]] = i;

  const int n = static_cast<int>(masks.size());
  std::vector<std::vector<int>> join(n, std::vector<int>(n)), meet(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      join[x][y] = idx.at(masks[x] | masks[y]);
      meet[x][y] = idx.at(masks[x] & masks[y]);
    }
  return {make_lattice(join, meet), std::move(masks)};
}

/// Closure of `subset` under joins and meets. The empty set generates the
/// empty sublattice.
inline std::vector<int> sublattice_generated(const FiniteLattice& l,
                                             const std::vector<int>& subset) {
  std::vector<char> in(l.n, 0);
  for (int x : subset) {
    require(l.in_range(x), "subset element out of range");
    in[x] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < l.n; ++x) {
      if (!in[x]) continue;
      for (int y = 0; y < l.n; ++y) {
        if (!in[y]) continue;
        for (int z : {l.join(x, y), l.meet(x, y)})
          if (!in[z]) {
            in[z] = 1;
            grew = true;
          }
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < l.n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

inline bool is_distributive_lattice(const FiniteLattice& l) {
  for (int x = 0; x < l.n; ++x)
    for (int y = 0; y < l.n; ++y)
      for (int z = 0; z < l.n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return false;
  return true;
}

inline bool is_distributive_sublattice(const FiniteLattice& l,
                                       const std::vector<int>& elements) {
  for (int x : elements)
    for (int y : elements)
      for (int z : elements)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return false;
  return true;
}

/// The identity T+(a,b) ^ T+(a',b') = T+(a ^ a', b v b') for one quadruple.
inline bool check_principal_meet_identity(LatticePtr l, int a, int b, int a2, int b2) {
  auto lhs = congruence_meet(theta_plus(l, a, b), theta_plus(l, a2, b2));
  auto rhs = theta_plus(l, l->meet(a, a2), l->join(b, b2));
  return lhs == rhs;
}

/// Nonzero elements with a unique lower cover, plus that cover.
struct JoinIrreducible {
  int element;
  int lower_cover;  // join of all strictly smaller elements
};

inline std::vector<JoinIrreducible> join_irreducibles(const FiniteLattice& l) {
  std::vector<JoinIrreducible> out;
  for (int x = 0; x < l.n; ++x) {
    if (x == l.bottom) continue;
    int below = l.bottom;
    for (int y = 0; y < l.n; ++y)
      if (y != x && l.leq(y, x)) below = l.join(below, y);
    if (below != x) out.push_back({x, below});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms from generator images
// ---------------------------------------------------------------------------

/// Extends a partial map on a generating set to a full lattice homomorphism
/// if one exists. Forced images are propagated through joins and meets; a
/// forcing conflict or a failed final verification yields nullopt. Throws if
/// the partial map's domain does not generate.
inline std::optional<LatticeHom> hom_from_generators(
    LatticePtr dom, LatticePtr cod,
    const std::vector<std::pair<int, int>>& partial) {
  std::vector<int> keys;
  for (auto [k, v] : partial) {
    require(dom->in_range(k) && cod->in_range(v), "generator image out of range");
    keys.push_back(k);
  }
  {
    auto gen = sublattice_generated(*dom, keys);
    if (static_cast<int>(gen.size()) != dom->n)
      throw Error("partial map domain does not generate the lattice");
  }

  std::vector<int> img(dom->n, -1);
  for (auto [k, v] : partial) {
    if (img[k] >= 0 && img[k] != v) return std::nullopt;  // contradictory input
    img[k] = v;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < dom->n; ++x) {
      if (img[x] < 0) continue;
      for (int y = 0; y < dom->n; ++y) {
        if (img[y] < 0) continue;
        struct Forced {
          int elem, value;
        } forced[2] = {{dom->join(x, y), cod->join(img[x], img[y])},
                       {dom->meet(x, y), cod->meet(img[x], img[y])}};
        for (const auto& f : forced) {
          if (img[f.elem] < 0) {
            img[f.elem] = f.value;
            grew = true;
          } else if (img[f.elem] != f.value) {
            return std::nullopt;
          }
        }
      }
    }
  }
  std::vector<int32_t> map(img.begin(), img.end());
  if (lattice_hom_violation(*dom, *cod, map)) return std::nullopt;
  return LatticeHom{dom, cod, std::move(map)};
}

// ---------------------------------------------------------------------------
// Builtin catalog
// ---------------------------------------------------------------------------

struct BuiltinLattice {
  LatticePtr lattice;
  std::map<std::string, int> names;
  // All decorations surviving the search, as (x0,y0,...,x2,y2); only for the
  // decorated entries. The adopted one is the lexicographically least.
  std::vector<std::array<int, 6>> decoration_candidates;
};

namespace detail {

inline LatticePtr chain_lattice(int n) {
  std::vector<std::vector<int>> join(n, std::vector<int>(n)), meet(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      join[x][y] = std::max(x, y);
      meet[x][y] = std::min(x, y);
    }
  return make_lattice(join, meet);
}

// 0 = bottom, 1..3 = atoms, 4 = top.
inline LatticePtr m3_lattice() {
  const int n = 5;
  std::vector<std::vector<int>> join(n, std::vector<int>(n)), meet(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) {
        join[x][y] = x;
        meet[x][y] = x;
      } else if (x == 0 || y == 4) {
        join[x][y] = y;
        meet[x][y] = x;
      } else if (y == 0 || x == 4) {
        join[x][y] = x;
        meet[x][y] = y;
      } else {
        join[x][y] = 4;
        meet[x][y] = 0;
      }
    }
  return make_lattice(join, meet);
}

// 0 = bottom, 1 = a, 2 = c, 3 = b, 4 = top, with a < c and b incomparable.
inline LatticePtr n5_lattice() {
  auto leq_tab = [](int x, int y) {
    if (x == y || x == 0 || y == 4) return true;
    if (x == 1 && y == 2) return true;
    return false;
  };
  const int n = 5;
  std::vector<std::vector<int>> join(n, std::vector<int>(n)), meet(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int j = -1, m = -1;
      for (int z = 0; z < n; ++z) {
        if (leq_tab(x, z) && leq_tab(y, z) && (j < 0 || leq_tab(z, j))) j = z;
        if (leq_tab(z, x) && leq_tab(z, y) && (m < 0 || leq_tab(m, z))) m = z;
      }
      join[x][y] = j;
      meet[x][y] = m;
    }
  return make_lattice(join, meet);
}

// Join-irreducible poset of the free distributive product of two 2-chains
// u0 < v0 and u1 < v1: points u0', u1', u0, u1, w, v0, v1.
inline DownsetLattice d_lattice() {
  enum { U0P, U1P, U0, U1, W, V0, V1, NPTS };
  std::vector<std::vector<char>> leq(NPTS, std::vector<char>(NPTS, 0));
  for (int i = 0; i < NPTS; ++i) leq[i][i] = 1;
  auto lt = [&](int a, int b) { leq[a][b] = 1; };
  lt(U0P, U0);
  lt(U0P, W);
  lt(U1P, U1);
  lt(U1P, W);
  lt(W, V0);
  lt(W, V1);
  lt(U0, V0);
  lt(U1, V1);
  for (int m = 0; m < NPTS; ++m)  // transitive closure
    for (int i = 0; i < NPTS; ++i)
      for (int j = 0; j < NPTS; ++j)
        if (leq[i][m] && leq[m][j]) leq[i][j] = 1;
  return downset_lattice(leq);
}

// Search all triples of 2-chains (x_i < y_i) in M for the decoration
// constraints: the eight inequalities, the one non-inequality, and
// distributivity of the three 4-generator sublattices.
inline std::vector<std::array<int, 6>> decoration_candidates(const FiniteLattice& m) {
  std::vector<std::pair<int, int>> chains;
  for (int x = 0; x < m.n; ++x)
    for (int y = 0; y < m.n; ++y)
      if (x != y && m.leq(x, y)) chains.emplace_back(x, y);

  std::vector<std::array<int, 6>> found;
  for (auto [x0, y0] : chains)
    for (auto [x1, y1] : chains)
      for (auto [x2, y2] : chains) {
        auto le = [&](int a, int b) { return m.leq(a, b); };
        if (!le(m.meet(x0, y1), x1)) continue;
        if (!le(y1, m.join(x1, y0))) continue;
        if (!le(m.meet(x1, y0), x0)) continue;
        if (!le(y0, m.join(x0, y1))) continue;
        if (!le(m.meet(x1, y2), x2)) continue;
        if (!le(y2, m.join(x2, y1))) continue;
        if (!le(m.meet(x2, y1), x1)) continue;
        if (!le(y1, m.join(x1, y2))) continue;
        if (le(y2, m.join(x2, y0))) continue;  // the required failure
        bool dist = true;
        const std::array<std::array<int, 4>, 3> gens = {{
            {x1, x2, y1, y2},  // i = 0
            {x0, x2, y0, y2},  // i = 1
            {x0, x1, y0, y1},  // i = 2
        }};
        for (const auto& g : gens) {
          auto sub = sublattice_generated(m, {g.begin(), g.end()});
          if (!is_distributive_sublattice(m, sub)) {
            dist = false;
            break;
          }
        }
        if (!dist) continue;
        found.push_back({x0, y0, x1, y1, x2, y2});
      }
  return found;
}

inline BuiltinLattice build_decorated(LatticePtr base,
                                      const std::map<std::string, int>& base_names) {
  auto cands = decoration_candidates(*base);
  require(!cands.empty(), "decoration search found no candidate");
  BuiltinLattice out;
  out.lattice = base;
  out.names = base_names;
  out.decoration_candidates = cands;
  const auto& d = cands.front();  // lexicographically least
  const char* keys[6] = {"x0", "y0", "x1", "y1", "x2", "y2"};
  for (int i = 0; i < 6; ++i) out.names[keys[i]] = d[i];
  return out;
}

}  // namespace detail

/// Catalog of named lattices: chainN (N = 1..12), M3, N5, D, M3_decorated,
/// N5_decorated, chain3xchain3. Decorations are found by exhaustive search;
/// the lexicographically least candidate is adopted and all candidates are
/// kept for reporting.
inline const BuiltinLattice& builtin_lattice(const std::string& name) {
  static const std::map<std::string, BuiltinLattice>* catalog = [] {
    auto* c = new std::map<std::string, BuiltinLattice>;
    for (int n = 1; n <= 12; ++n) {
      BuiltinLattice b;
      b.lattice = detail::chain_lattice(n);
      for (int i = 0; i < n; ++i) b.names[std::to_string(i)] = i;
      (*c)["chain" + std::to_string(n)] = std::move(b);
    }
    {
      BuiltinLattice b;
      b.lattice = detail::m3_lattice();
      b.names = {{"bot", 0}, {"a", 1}, {"b", 2}, {"c", 3}, {"top", 4}};
      (*c)["M3"] = b;
      (*c)["M3_decorated"] = detail::build_decorated(b.lattice, b.names);
    }
    {
      BuiltinLattice b;
      b.lattice = detail::n5_lattice();
      b.names = {{"bot", 0}, {"a", 1}, {"c", 2}, {"b", 3}, {"top", 4}};
      (*c)["N5"] = b;
      (*c)["N5_decorated"] = detail::build_decorated(b.lattice, b.names);
    }
    {
      auto ds = detail::d_lattice();
      BuiltinLattice b;
      b.lattice = ds.lattice;
      auto find_mask = [&](uint32_t mask) {
        for (int i = 0; i < static_cast<int>(ds.masks.size()); ++i)
          if (ds.masks[i] == mask) return i;
        throw Error("D construction: named down-set missing");
      };
      // bit order of the join-irreducible poset: u0',u1',u0,u1,w,v0,v1
      b.names["u0'"] = find_mask(0b0000001);
      b.names["u1'"] = find_mask(0b0000010);
      b.names["u0"] = find_mask(0b0000101);
      b.names["u1"] = find_mask(0b0001010);
      b.names["w"] = find_mask(0b0010011);
      b.names["v0"] = find_mask(0b0110111);
      b.names["v1"] = find_mask(0b1011011);
      b.names["bot"] = b.lattice->bottom;
      b.names["top"] = b.lattice->top;
      (*c)["D"] = std::move(b);
    }
    {
      auto c3 = detail::chain_lattice(3);
      BuiltinLattice b;
      b.lattice = product_lattice(*c3, *c3);
      (*c)["chain3xchain3"] = std::move(b);
    }
    return c;
  }();
  auto it = catalog->find(name);
  if (it == catalog->end()) throw Error("unknown builtin lattice: " + name);
  return it->second;
}

inline std::vector<std::string> builtin_lattice_names() {
  std::vector<std::string> out;
  for (int n = 1; n <= 12; ++n) out.push_back("chain" + std::to_string(n));
  for (const char* s : {"M3", "N5", "M3_decorated", "N5_decorated", "D", "chain3xchain3"})
    out.push_back(s);
  return out;
}

}  // namespace vdist
