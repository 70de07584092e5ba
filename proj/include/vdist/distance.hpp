#pragma once

#include <boost/dynamic_bitset.hpp>
#include <map>
#include <optional>

#include "vdist/core.hpp"
#include "vdist/lattice.hpp"
#include "vdist/semilattice.hpp"

namespace vdist {

// ---------------------------------------------------------------------------
// Equivalence relations on a finite point set
// ---------------------------------------------------------------------------

/// Canonical block vector (first-occurrence block ids).
using Partition = std::vector<int>;

inline Partition identity_partition(int n) {
  Partition p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Partition full_partition(int n) { return Partition(n, 0); }

inline Partition partition_meet(const Partition& a, const Partition& b) {
  const int nb = block_count(b);
  Partition raw(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) raw[x] = a[x] * nb + b[x];
  return canonical_blocks(raw);
}

inline Partition partition_join(const Partition& a, const Partition& b) {
  UnionFind uf(static_cast<int>(a.size()));
  std::vector<int> rep_a(block_count(a), -1), rep_b(block_count(b), -1);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (rep_a[a[x]] < 0) rep_a[a[x]] = static_cast<int>(x);
    else uf.unite(rep_a[a[x]], static_cast<int>(x));
    if (rep_b[b[x]] < 0) rep_b[b[x]] = static_cast<int>(x);
    else uf.unite(rep_b[b[x]], static_cast<int>(x));
  }
  return uf.blocks();
}

inline bool partition_leq(const Partition& a, const Partition& b) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y)
      if (a[x] == a[y] && b[x] != b[y]) return false;
  return true;
}

using Rel = std::vector<boost::dynamic_bitset<>>;

inline Rel partition_relation(const Partition& p) {
  const int n = static_cast<int>(p.size());
  Rel r(n, boost::dynamic_bitset<>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p[x] == p[y]) r[x].set(y);
  return r;
}

inline Rel rel_compose(const Rel& a, const Rel& b) {
  const int n = static_cast<int>(a.size());
  Rel out(n, boost::dynamic_bitset<>(n));
  for (int x = 0; x < n; ++x)
    for (int y = a[x].find_first(); y != boost::dynamic_bitset<>::npos;
         y = a[x].find_next(y))
      out[x] |= b[y];
  return out;
}

/// n-permutability of two equivalences: the two alternating relation
/// products with n factors coincide (n = 2 is plain permutability).
inline bool n_permutable(const Partition& alpha, const Partition& beta, int n) {
  require(alpha.size() == beta.size(), "point set mismatch");
  require(n >= 1, "n must be positive");
  Rel ra = partition_relation(alpha), rb = partition_relation(beta);
  Rel lhs = ra, rhs = rb;
  for (int k = 1; k < n; ++k) {
    lhs = rel_compose(lhs, (k % 2 == 1) ? rb : ra);
    rhs = rel_compose(rhs, (k % 2 == 1) ? ra : rb);
  }
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Semilattice-valued distances
// ---------------------------------------------------------------------------

/// A symmetric, zero-diagonal matrix of semilattice values subject to the
/// triangle law d(x,z) <= d(x,y) v d(y,z).
struct Distance {
  int points = 0;
  SemilatticePtr s;
  std::vector<uint16_t> value;  // points*points, row-major

  int at(int x, int y) const { return value[static_cast<std::size_t>(x) * points + y]; }
  void set(int x, int y, int v) {
    value[static_cast<std::size_t>(x) * points + y] = static_cast<uint16_t>(v);
  }
};

inline Distance make_distance(int points, SemilatticePtr s,
                              const std::vector<std::vector<int>>& matrix) {
  require(points >= 1, "distance needs at least one point");
  require(s->n <= 65535, "semilattice too large for distance storage");
  require(static_cast<int>(matrix.size()) == points, "matrix is not points-by-points");
  Distance d;
  d.points = points;
  d.s = std::move(s);
  d.value.resize(static_cast<std::size_t>(points) * points);
  for (int x = 0; x < points; ++x) {
    require(static_cast<int>(matrix[x].size()) == points, "matrix is not square");
    for (int y = 0; y < points; ++y) {
      require(d.s->in_range(matrix[x][y]), "distance value out of range");
      d.set(x, y, matrix[x][y]);
    }
  }
  return d;
}

enum class DistanceAxiom { ZeroDiagonal, Symmetry, Triangle };

inline const char* to_string(DistanceAxiom a) {
  switch (a) {
    case DistanceAxiom::ZeroDiagonal: return "zero-diagonal";
    case DistanceAxiom::Symmetry: return "symmetry";
    case DistanceAxiom::Triangle: return "triangle";
  }
  return "?";
}

struct DistanceViolation {
  DistanceAxiom axiom;
  std::array<int, 3> witness;
};

struct DistanceValidation {
  bool ok = true;
  std::vector<DistanceViolation> violations;
};

namespace detail {

/// Ball matrix: rows x -> { y : d(x,y) <= bound }.
inline Rel ball_relation(const Distance& d, int bound) {
  Rel r(d.points, boost::dynamic_bitset<>(d.points));
  for (int x = 0; x < d.points; ++x)
    for (int y = 0; y < d.points; ++y)
      if (d.s->leq(d.at(x, y), bound)) r[x].set(y);
  return r;
}

// Triangle check via per-value relation composition; returns the least
// failing x, or -1. Quadratic scan inside one x keeps witnesses exact.
inline int triangle_first_bad_row(const Distance& d) {
  std::vector<char> used(d.s->n, 0);
  for (auto v : d.value) used[v] = 1;
  std::vector<int> vals;
  for (int v = 0; v < d.s->n; ++v)
    if (used[v]) vals.push_back(v);

  std::map<int, Rel> exact;
  for (int v : vals) {
    Rel r(d.points, boost::dynamic_bitset<>(d.points));
    for (int x = 0; x < d.points; ++x)
      for (int y = 0; y < d.points; ++y)
        if (d.at(x, y) == v) r[x].set(y);
    exact.emplace(v, std::move(r));
  }
  std::map<int, Rel> ball;
  auto get_ball = [&](int bound) -> const Rel& {
    auto it = ball.find(bound);
    if (it == ball.end()) it = ball.emplace(bound, ball_relation(d, bound)).first;
    return it->second;
  };

  int bad = -1;
  for (int v1 : vals)
    for (int v2 : vals) {
      const Rel& b = get_ball(d.s->join(v1, v2));
      const Rel& e1 = exact.at(v1);
      const Rel& e2 = exact.at(v2);
      for (int x = 0; x < d.points; ++x) {
        if (bad >= 0 && x >= bad) break;
        boost::dynamic_bitset<> reach(d.points);
        for (auto y = e1[x].find_first(); y != boost::dynamic_bitset<>::npos;
             y = e1[x].find_next(y))
          reach |= e2[y];
        if (!reach.is_subset_of(b[x])) bad = x;
      }
    }
  return bad;
}

}  // namespace detail

/// Checks the three distance axioms, reporting one lexicographically least
/// witness per violated axiom.
inline DistanceValidation validate_distance(const Distance& d) {
  DistanceValidation out;
  for (int x = 0; x < d.points; ++x)
    if (d.at(x, x) != 0) {
      out.ok = false;
      out.violations.push_back({DistanceAxiom::ZeroDiagonal, {x, -1, -1}});
      break;
    }
  for (int x = 0; x < d.points && out.violations.size() < 2; ++x)
    for (int y = x + 1; y < d.points; ++y)
      if (d.at(x, y) != d.at(y, x)) {
        out.ok = false;
        out.violations.push_back({DistanceAxiom::Symmetry, {x, y, -1}});
        x = d.points;
        break;
      }

  int bad_row;
  if (d.points <= 600) {
    bad_row = -1;
    for (int x = 0; x < d.points && bad_row < 0; ++x)
      for (int y = 0; y < d.points && bad_row < 0; ++y)
        for (int z = 0; z < d.points; ++z)
          if (!d.s->leq(d.at(x, z), d.s->join(d.at(x, y), d.at(y, z)))) {
            bad_row = x;
            break;
          }
  } else {
    bad_row = detail::triangle_first_bad_row(d);
  }
  if (bad_row >= 0) {
    for (int y = 0; y < d.points; ++y)
      for (int z = 0; z < d.points; ++z)
        if (!d.s->leq(d.at(bad_row, z), d.s->join(d.at(bad_row, y), d.at(y, z)))) {
          out.ok = false;
          out.violations.push_back({DistanceAxiom::Triangle, {bad_row, y, z}});
          return out;
        }
  }
  return out;
}

/// Pairs at distance zero. Transitivity comes from the triangle law.
inline Partition kernel(const Distance& d) {
  UnionFind uf(d.points);
  for (int x = 0; x < d.points; ++x)
    for (int y = x + 1; y < d.points; ++y)
      if (d.at(x, y) == 0) uf.unite(x, y);
  return uf.blocks();
}

/// A distance morphism <f, fh>: fh(lambda(x,y)) = mu(f(x), f(y)).
struct DistanceMorphism {
  std::vector<int32_t> point_map;
  SemilatticeHom hom;
};

inline std::optional<std::pair<int, int>> morphism_violation(
    const Distance& dom, const Distance& cod, const DistanceMorphism& m) {
  require(static_cast<int>(m.point_map.size()) == dom.points, "point map size");
  for (int x = 0; x < dom.points; ++x)
    for (int y = 0; y < dom.points; ++y)
      if (m.hom(dom.at(x, y)) != cod.at(m.point_map[x], m.point_map[y]))
        return std::make_pair(x, y);
  return std::nullopt;
}

struct QuotientResult {
  Distance quotient;
  DistanceMorphism projection;  // identity hom, block map on points
};

/// Distance on kernel classes; well defined by the triangle law.
inline QuotientResult quotient_by_kernel(const Distance& d) {
  auto ker = kernel(d);
  const int m = block_count(ker);
  std::vector<int> rep(m, -1);
  for (int x = 0; x < d.points; ++x)
    if (rep[ker[x]] < 0) rep[ker[x]] = x;
  Distance q;
  q.points = m;
  q.s = d.s;
  q.value.resize(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) q.set(a, b, d.at(rep[a], rep[b]));
  DistanceMorphism proj{std::vector<int32_t>(ker.begin(), ker.end()),
                        identity_hom(d.s)};
  return {std::move(q), std::move(proj)};
}

// ---------------------------------------------------------------------------
// V-conditions
// ---------------------------------------------------------------------------

/// Which V-condition to check: some finite alternating chain (general), a
/// single midpoint in either orientation (type 3/2), or an alternating chain
/// of exactly n+1 steps starting with an a-step (type n).
struct VType {
  enum class Kind { General, Type32, TypeN } kind;
  int n = 0;

  static VType general() { return {Kind::General, 0}; }
  static VType type32() { return {Kind::Type32, 0}; }
  static VType type_n(int n) {
    require(n >= 1, "V-condition type must be >= 1");
    return {Kind::TypeN, n};
  }
};

struct VTypeResult {
  bool holds = true;
  std::optional<std::array<int, 4>> counterexample;  // (x, y, a, b)
};

/// Decides the chosen V-condition for every pair (x,y) and every split
/// d(x,y) <= a v b. Reachability is computed with ball-relation products;
/// the zero diagonal makes the layers monotone, so padding is implicit.
/// When a v b equals a or b the problem is solved by a one- or two-step
/// chain, so only incomparable splits need the product computation.
/// Returns the lexicographically least failing (x, y, a, b), if any.
inline VTypeResult check_v_type(const Distance& d, VType t) {
  const auto& S = *d.s;
  std::optional<std::array<int, 4>> best;
  auto consider = [&](int x, int y, int a, int b) {
    std::array<int, 4> cand{x, y, a, b};
    if (!best || cand < *best) best = cand;
  };

  std::map<int, Rel> balls;
  auto ball = [&](int bound) -> const Rel& {
    auto it = balls.find(bound);
    if (it == balls.end())
      it = balls.emplace(bound, detail::ball_relation(d, bound)).first;
    return it->second;
  };

  for (int a = 0; a < S.n; ++a)
    for (int b = 0; b < S.n; ++b) {
      const int ab = S.join(a, b);
      if (ab == a || ab == b) continue;  // solved by a padded short chain
      const Rel& target = ball(ab);
      Rel reach;
      switch (t.kind) {
        case VType::Kind::TypeN: {
          reach = ball(a);
          for (int k = 1; k <= t.n; ++k)
            reach = rel_compose(reach, (k % 2 == 1) ? ball(b) : ball(a));
          break;
        }
        case VType::Kind::Type32: {
          reach = rel_compose(ball(a), ball(b));
          Rel other = rel_compose(ball(b), ball(a));
          for (int x = 0; x < d.points; ++x) reach[x] |= other[x];
          break;
        }
        case VType::Kind::General: {
          reach = rel_compose(ball(a), ball(b));  // n = 1 (two steps)
          int stable = 0;
          for (int k = 2; stable < 2 && k <= 2 * d.points + 2; ++k) {
            Rel next = rel_compose(reach, (k % 2 == 1) ? ball(b) : ball(a));
            stable = (next == reach) ? stable + 1 : 0;
            reach = std::move(next);
          }
          break;
        }
      }
      for (int x = 0; x < d.points; ++x) {
        if (target[x].is_subset_of(reach[x])) continue;
        auto diff = target[x] & ~reach[x];
        consider(x, static_cast<int>(diff.find_first()), a, b);
        break;  // least x for this (a,b); later x are lex-greater
      }
    }
  if (!best) return {};
  return {false, best};
}

/// phi(a) = { (x,y) : d(x,y) <= a }; an equivalence by the triangle law.
inline Partition induced_partition(const Distance& d, int a) {
  require(d.s->in_range(a), "value index out of range");
  UnionFind uf(d.points);
  for (int x = 0; x < d.points; ++x)
    for (int y = x + 1; y < d.points; ++y)
      if (d.s->leq(d.at(x, y), a)) uf.unite(x, y);
  return uf.blocks();
}

/// Report for the induced map phi from S into the equivalence lattice:
/// (i) meets preserved, (ii) joins preserved when the general V-condition
/// holds, (iii) order embedding when the range join-generates, (iv) pairwise
/// (n+1)-permutability of the range when type n holds.
struct PartitionMapReport {
  bool v_general = false;
  bool v_type32 = false;
  std::optional<int> least_type_n;  // least n <= 2|X|+2 with type n, if any

  bool meets_ok = true;
  std::optional<std::pair<int, int>> meets_witness;

  std::optional<bool> joins_ok;  // set iff v_general
  std::optional<std::pair<int, int>> joins_witness;

  bool range_join_generates = false;
  std::optional<bool> embedding_ok;  // set iff range_join_generates

  std::optional<bool> permutability_ok;  // set iff least_type_n
};

inline PartitionMapReport check_partition_correspondence(const Distance& d) {
  const auto& S = *d.s;
  PartitionMapReport rep;
  rep.v_general = check_v_type(d, VType::general()).holds;
  rep.v_type32 = check_v_type(d, VType::type32()).holds;
  if (rep.v_general) {
    for (int n = 1; n <= 2 * d.points + 2; ++n)
      if (check_v_type(d, VType::type_n(n)).holds) {
        rep.least_type_n = n;
        break;
      }
  }

  std::vector<Partition> phi(S.n);
  for (int a = 0; a < S.n; ++a) phi[a] = induced_partition(d, a);

  for (int a = 0; a < S.n && rep.meets_ok; ++a)
    for (int b = 0; b < S.n; ++b)
      if (phi[S.meet(a, b)] != partition_meet(phi[a], phi[b])) {
        rep.meets_ok = false;
        rep.meets_witness = {a, b};
        break;
      }

  if (rep.v_general) {
    rep.joins_ok = true;
    for (int a = 0; a < S.n && *rep.joins_ok; ++a)
      for (int b = 0; b < S.n; ++b)
        if (phi[S.join(a, b)] != partition_join(phi[a], phi[b])) {
          rep.joins_ok = false;
          rep.joins_witness = {a, b};
          break;
        }
  }

  {
    std::vector<int> range;
    for (int x = 0; x < d.points; ++x)
      for (int y = 0; y < d.points; ++y) range.push_back(d.at(x, y));
    std::sort(range.begin(), range.end());
    range.erase(std::unique(range.begin(), range.end()), range.end());
    rep.range_join_generates = is_join_generating(S, range);
  }
  if (rep.range_join_generates) {
    rep.embedding_ok = true;
    for (int a = 0; a < S.n && *rep.embedding_ok; ++a)
      for (int b = 0; b < S.n; ++b)
        if (partition_leq(phi[a], phi[b]) && !S.leq(a, b)) {
          rep.embedding_ok = false;
          break;
        }
  }

  if (rep.least_type_n) {
    rep.permutability_ok = true;
    for (int a = 0; a < S.n && *rep.permutability_ok; ++a)
      for (int b = 0; b < S.n; ++b)
        if (!n_permutable(phi[a], phi[b], *rep.least_type_n + 1)) {
          rep.permutability_ok = false;
          break;
        }
  }
  return rep;
}

/// The principal-congruence distance of a finite lattice, valued in Conc.
inline Distance congruence_distance(const ConcLattice& cc) {
  const auto& l = *cc.lattice;
  Distance d;
  d.points = l.n;
  d.s = cc.semilattice;
  require(cc.semilattice->n <= 65535, "Conc too large for distance storage");
  d.value.resize(static_cast<std::size_t>(l.n) * l.n);
  for (int x = 0; x < l.n; ++x)
    for (int y = x; y < l.n; ++y) {
      int v = cc.index_of(principal_congruence(cc.lattice, x, y));
      d.set(x, y, v);
      d.set(y, x, v);
    }
  return d;
}

}  // namespace vdist
