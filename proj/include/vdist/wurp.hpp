#pragma once

#include <functional>
#include <optional>

#include "vdist/distance.hpp"

namespace vdist {

/// A uniform refinement instance: an element e and families (a_i), (b_i)
/// with e <= a_i v b_i for every i.
struct WurpInstance {
  SemilatticePtr s;
  int e = 0;
  std::vector<int> a, b;

  int size() const { return static_cast<int>(a.size()); }
};

inline WurpInstance make_wurp_instance(SemilatticePtr s, int e,
                                       std::vector<int> a, std::vector<int> b) {
  require(s->in_range(e), "e out of range");
  require(a.size() == b.size(), "family length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    require(s->in_range(a[i]) && s->in_range(b[i]), "family value out of range");
    require(s->leq(e, s->join(a[i], b[i])),
            "instance requires e <= a_i v b_i (index " + std::to_string(i) + ")");
  }
  return {std::move(s), e, std::move(a), std::move(b)};
}

/// A candidate witness: a cover of the index set by m (possibly overlapping,
/// possibly empty) blocks and an I-by-I matrix of refinement values.
struct WurpWitness {
  int m = 1;
  std::vector<std::vector<int>> cover;  // m sorted subsets of {0..I-1}
  std::vector<std::vector<int>> c;      // I x I semilattice indices

  friend bool operator==(const WurpWitness&, const WurpWitness&) = default;
};

struct WitnessViolation {
  // 0 = cover does not union to I; 1..3 = the three witness clauses
  int clause;
  std::vector<int> indices;
};

struct WitnessVerification {
  bool ok = true;
  std::vector<WitnessViolation> violations;
};

/// Checks, in order: the cover unions to I; (1) c_ij <= a_i v a_j and
/// c_ij <= b_i v b_j for same-block pairs; (2) e <= a_j v b_i v c_ij for
/// same-block pairs; (3) c_ik <= c_ij v c_jk for all triples. One witnessing
/// index tuple is reported per violated clause.
inline WitnessVerification verify_witness(const WurpInstance& inst,
                                          const WurpWitness& wit) {
  const auto& S = *inst.s;
  const int I = inst.size();
  require(static_cast<int>(wit.cover.size()) == wit.m, "cover size != m");
  require(static_cast<int>(wit.c.size()) == I, "c matrix height != I");
  for (const auto& row : wit.c) {
    require(static_cast<int>(row.size()) == I, "c matrix width != I");
    for (int v : row) require(S.in_range(v), "c entry out of range");
  }

  WitnessVerification out;
  auto report = [&](int clause, std::vector<int> idx) {
    for (const auto& v : out.violations)
      if (v.clause == clause) return;
    out.ok = false;
    out.violations.push_back({clause, std::move(idx)});
  };

  std::vector<char> covered(I, 0);
  for (const auto& block : wit.cover)
    for (int i : block) {
      require(0 <= i && i < I, "cover index out of range");
      covered[i] = 1;
    }
  for (int i = 0; i < I; ++i)
    if (!covered[i]) {
      report(0, {i});
      break;
    }

  for (int u = 0; u < wit.m; ++u)
    for (int i : wit.cover[u])
      for (int j : wit.cover[u]) {
        if (!S.leq(wit.c[i][j], S.join(inst.a[i], inst.a[j])) ||
            !S.leq(wit.c[i][j], S.join(inst.b[i], inst.b[j])))
          report(1, {u, i, j});
        if (!S.leq(inst.e, S.join(inst.a[j], S.join(inst.b[i], wit.c[i][j]))))
          report(2, {u, i, j});
      }

  for (int i = 0; i < I; ++i)
    for (int j = 0; j < I; ++j)
      for (int k = 0; k < I; ++k)
        if (!S.leq(wit.c[i][k], S.join(wit.c[i][j], wit.c[j][k]))) {
          report(3, {i, j, k});
          return out;
        }
  return out;
}

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

struct WitnessSearchResult {
  std::optional<WurpWitness> witness;  // lexicographically least, if any
  bool pool_is_full_semilattice = false;
  long long covers_tried = 0;
  long long assignments_tried = 0;
};

constexpr int kSearchMaxIndices = 4;
constexpr int kSearchMaxSemilattice = 16;

/// Depth-first search over canonical covers (blocks sorted ascending as
/// bitmasks) and c-matrices with entries drawn from `pool` (ascending).
/// Diagonal entries are fixed to zero: any witness stays valid with a zero
/// diagonal, and zero is the least choice. Exhaustion is certified relative
/// to the pool; it is absolute when the pool is all of S.
inline WitnessSearchResult search_witness(const WurpInstance& inst, int m,
                                          std::vector<int> pool = {},
                                          bool override_bounds = false) {
  const auto& S = *inst.s;
  const int I = inst.size();
  require(m >= 1, "m must be positive");
  if (!override_bounds) {
    require(I <= kSearchMaxIndices, "instance too large for full search");
    require(S.n <= kSearchMaxSemilattice || !pool.empty(),
            "semilattice too large for full search without a pool");
  }
  if (pool.empty())
    for (int v = 0; v < S.n; ++v) pool.push_back(v);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  for (int v : pool) require(S.in_range(v), "pool value out of range");

  WitnessSearchResult res;
  res.pool_is_full_semilattice = static_cast<int>(pool.size()) == S.n;

  // same_block[i][j] for the current cover
  std::vector<std::vector<char>> same(I, std::vector<char>(I, 0));
  std::vector<std::vector<int>> c(I, std::vector<int>(I, -1));
  for (int i = 0; i < I; ++i) c[i][i] = 0;

  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < I; ++i)
    for (int j = 0; j < I; ++j)
      if (i != j) cells.emplace_back(i, j);

  auto entry_ok = [&](int i, int j) {
    const int v = c[i][j];
    if (same[i][j]) {
      if (!S.leq(v, S.join(inst.a[i], inst.a[j]))) return false;
      if (!S.leq(v, S.join(inst.b[i], inst.b[j]))) return false;
      if (!S.leq(inst.e, S.join(inst.a[j], S.join(inst.b[i], v)))) return false;
    }
    for (int k = 0; k < I; ++k) {
      // triples with (i,j) on either side, all entries assigned
      if (c[i][k] >= 0 && c[k][j] >= 0 && !S.leq(v, S.join(c[i][k], c[k][j])))
        return false;
      if (c[i][k] >= 0 && c[j][k] >= 0 && !S.leq(c[i][k], S.join(v, c[j][k])))
        return false;
      if (c[k][j] >= 0 && c[k][i] >= 0 && !S.leq(c[k][j], S.join(c[k][i], v)))
        return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t cell) -> bool {
    if (cell == cells.size()) return true;
    auto [i, j] = cells[cell];
    for (int v : pool) {
      ++res.assignments_tried;
      c[i][j] = v;
      if (entry_ok(i, j) && assign(cell + 1)) return true;
    }
    c[i][j] = -1;
    return false;
  };

  // enumerate covers: nondecreasing m-tuples of subset bitmasks with union I
  const int full = (1 << I) - 1;
  std::vector<int> blocks(m, 0);
  std::function<bool(int, int, int)> covers = [&](int pos, int least,
                                                  int uni) -> bool {
    if (pos == m) {
      if (uni != full) return false;
      ++res.covers_tried;
      for (int i = 0; i < I; ++i)
        for (int j = 0; j < I; ++j) {
          same[i][j] = 0;
          for (int u = 0; u < m; ++u)
            if ((blocks[u] >> i & 1) && (blocks[u] >> j & 1)) same[i][j] = 1;
        }
      return assign(0);
    }
    for (int bm = least; bm <= full; ++bm) {
      blocks[pos] = bm;
      if (covers(pos + 1, bm, uni | bm)) return true;
    }
    return false;
  };

  if (covers(0, 0, 0)) {
    WurpWitness w;
    w.m = m;
    w.cover.resize(m);
    for (int u = 0; u < m; ++u)
      for (int i = 0; i < I; ++i)
        if (blocks[u] >> i & 1) w.cover[u].push_back(i);
    w.c = c;
    res.witness = std::move(w);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Constructive builders
// ---------------------------------------------------------------------------

/// Point pairs whose distances join to e.
using EDecomposition = std::vector<std::pair<int, int>>;

/// Greedy cover of e by range values: repeatedly add the pair giving the
/// largest join (measured by how many elements it dominates), preferring the
/// lexicographically least pair on ties.
inline EDecomposition greedy_join_decomposition(const Distance& d, int e) {
  const auto& S = *d.s;
  require(S.in_range(e), "e out of range");
  EDecomposition out;
  int cur = 0;
  while (cur != e) {
    int best_gain = -1;
    std::pair<int, int> best{-1, -1};
    for (int x = 0; x < d.points; ++x)
      for (int y = x + 1; y < d.points; ++y) {
        if (!S.leq(d.at(x, y), e)) continue;
        int j = S.join(cur, d.at(x, y));
        if (j == cur) continue;
        int gain = count_leq(S, j);
        if (gain > best_gain) {
          best_gain = gain;
          best = {x, y};
        }
      }
    if (best_gain < 0)
      throw Error("e is not a join of range values below e");
    out.push_back(best);
    cur = S.join(cur, d.at(best.first, best.second));
  }
  return out;
}

namespace detail {

struct MidpointTable {
  std::vector<std::vector<int>> z;        // z[i][l]
  std::vector<std::vector<char>> took_p;  // orientation chosen
};

/// For every i and l, the least z satisfying either orientation of the
/// midpoint condition for the split d(x_l, y_l) <= a_i v b_i. P is preferred
/// when both hold. `require_p` restricts to the P orientation (type 1).
inline MidpointTable find_midpoints(const Distance& d, const EDecomposition& pairs,
                                    const WurpInstance& inst, bool require_p) {
  const auto& S = *d.s;
  const int I = inst.size();
  const int n = static_cast<int>(pairs.size());
  MidpointTable t;
  t.z.assign(I, std::vector<int>(n, -1));
  t.took_p.assign(I, std::vector<char>(n, 0));
  for (int i = 0; i < I; ++i)
    for (int l = 0; l < n; ++l) {
      auto [x, y] = pairs[l];
      for (int z = 0; z < d.points && t.z[i][l] < 0; ++z) {
        if (S.leq(d.at(x, z), inst.a[i]) && S.leq(d.at(z, y), inst.b[i])) {
          t.z[i][l] = z;
          t.took_p[i][l] = 1;
        } else if (!require_p && S.leq(d.at(x, z), inst.b[i]) &&
                   S.leq(d.at(z, y), inst.a[i])) {
          t.z[i][l] = z;
          t.took_p[i][l] = 0;
        }
      }
      if (t.z[i][l] < 0)
        throw Error("midpoint not found: the distance does not satisfy the "
                    "required V-condition for split " + std::to_string(l) +
                    ", index " + std::to_string(i));
    }
  return t;
}

inline WurpWitness witness_from_midpoints(const Distance& d,
                                          const MidpointTable& t, int I, int n,
                                          bool single_block) {
  const auto& S = *d.s;
  WurpWitness w;
  if (single_block) {
    w.m = 1;
    w.cover.resize(1);
    for (int i = 0; i < I; ++i) w.cover[0].push_back(i);
  } else {
    w.m = 1 << n;
    w.cover.resize(w.m);
    for (int i = 0; i < I; ++i) {
      int u = 0;
      for (int l = 0; l < n; ++l)
        if (t.took_p[i][l]) u |= 1 << l;
      w.cover[u].push_back(i);
    }
  }
  w.c.assign(I, std::vector<int>(I, 0));
  for (int i = 0; i < I; ++i)
    for (int j = 0; j < I; ++j) {
      int v = 0;
      for (int l = 0; l < n; ++l) v = S.join(v, d.at(t.z[i][l], t.z[j][l]));
      w.c[i][j] = v;
    }
  return w;
}

}  // namespace detail

/// Witness with m = 2^n from a type-3/2 distance: midpoints z_{i,l} sort the
/// indices into 2^n blocks by orientation pattern, and
/// c_ij = join_l d(z_il, z_jl). The result is verified before returning.
inline WurpWitness build_witness_type32(const Distance& d,
                                        const EDecomposition& pairs,
                                        const WurpInstance& inst) {
  const auto& S = *d.s;
  require(same_semilattice(S, *inst.s), "instance and distance semilattices differ");
  require(pairs.size() <= 16, "too many decomposition pairs (m = 2^n blocks)");
  int e = 0;
  for (auto [x, y] : pairs) e = S.join(e, d.at(x, y));
  require(e == inst.e, "decomposition pairs do not join to e");
  auto t = detail::find_midpoints(d, pairs, inst, /*require_p=*/false);
  auto w = detail::witness_from_midpoints(d, t, inst.size(),
                                          static_cast<int>(pairs.size()), false);
  require(verify_witness(inst, w).ok, "constructed witness failed verification");
  return w;
}

/// Witness with m = 1 from a type-1 distance (P orientation only).
inline WurpWitness build_witness_type1(const Distance& d,
                                       const EDecomposition& pairs,
                                       const WurpInstance& inst) {
  const auto& S = *d.s;
  require(same_semilattice(S, *inst.s), "instance and distance semilattices differ");
  int e = 0;
  for (auto [x, y] : pairs) e = S.join(e, d.at(x, y));
  require(e == inst.e, "decomposition pairs do not join to e");
  auto t = detail::find_midpoints(d, pairs, inst, /*require_p=*/true);
  auto w = detail::witness_from_midpoints(d, t, inst.size(),
                                          static_cast<int>(pairs.size()), true);
  require(verify_witness(inst, w).ok, "constructed witness failed verification");
  return w;
}

// ---------------------------------------------------------------------------
// Transfer along weakly distributive maps
// ---------------------------------------------------------------------------

using WurpSolver = std::function<std::optional<WurpWitness>(const WurpInstance&)>;

/// Pulls an instance over T back along a weakly distributive mu: S -> T
/// (largest pullbacks x_i = join{x : mu x <= a_i}), solves over S, and pushes
/// the c-matrix through mu with the same cover. Requires e in the range of
/// mu; the least preimage is used. Solver failure propagates as nullopt.
inline std::optional<WurpWitness> transfer_witness(const SemilatticeHom& mu,
                                                   const WurpInstance& inst_t,
                                                   const WurpSolver& solver) {
  const auto& S = *mu.dom;
  const auto& T = *mu.cod;
  require(same_semilattice(T, *inst_t.s), "instance not over cod(mu)");
  {
    auto wd = is_weakly_distributive(mu);
    require(wd.weakly_distributive, "mu is not weakly distributive");
  }
  int e_s = -1;
  for (int x = 0; x < S.n && e_s < 0; ++x)
    if (mu(x) == inst_t.e) e_s = x;
  require(e_s >= 0, "e has no preimage under mu");

  const int I = inst_t.size();
  std::vector<int> xs(I, 0), ys(I, 0);
  for (int i = 0; i < I; ++i) {
    for (int x = 0; x < S.n; ++x) {
      if (T.leq(mu(x), inst_t.a[i])) xs[i] = S.join(xs[i], x);
      if (T.leq(mu(x), inst_t.b[i])) ys[i] = S.join(ys[i], x);
    }
    require(S.leq(e_s, S.join(xs[i], ys[i])),
            "pullback failed despite weak distributivity");
  }
  auto inst_s = make_wurp_instance(mu.dom, e_s, xs, ys);
  auto wit_s = solver(inst_s);
  if (!wit_s) return std::nullopt;

  WurpWitness out;
  out.m = wit_s->m;
  out.cover = wit_s->cover;
  out.c.assign(I, std::vector<int>(I, 0));
  for (int i = 0; i < I; ++i)
    for (int j = 0; j < I; ++j) out.c[i][j] = mu(wit_s->c[i][j]);
  require(verify_witness(inst_t, out).ok, "transferred witness failed verification");
  return out;
}

}  // namespace vdist
