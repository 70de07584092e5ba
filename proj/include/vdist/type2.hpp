#pragma once

#include <compare>
#include <optional>

#include "vdist/distance.hpp"

namespace vdist {

/// One exact splitting problem: d(x,y) = a v b with a, b nonzero.
struct Quadruple {
  int x = 0, y = 0, a = 0, b = 0;
  friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

/// The join distance on the elements of S: d(x,y) = x v y off the diagonal.
/// Surjective (s = d(0,s)) with identity kernel.
inline Distance join_distance(SemilatticePtr s) {
  Distance d;
  d.points = s->n;
  d.s = s;
  d.value.assign(static_cast<std::size_t>(s->n) * s->n, 0);
  for (int x = 0; x < s->n; ++x)
    for (int y = 0; y < s->n; ++y)
      if (x != y) d.set(x, y, s->join(x, y));
  return d;
}

namespace detail {

/// dec[v] = all ordered pairs (a,b) with a,b nonzero and a v b = v,
/// lexicographically sorted.
inline std::vector<std::vector<std::pair<int, int>>> exact_decompositions(
    const FiniteSemilattice& s) {
  std::vector<std::vector<std::pair<int, int>>> dec(s.n);
  for (int a = 1; a < s.n; ++a)
    for (int b = 1; b < s.n; ++b) dec[s.join(a, b)].emplace_back(a, b);
  return dec;
}

}  // namespace detail

/// All of H(d): ordered quadruples (x,y,a,b), a,b nonzero, d(x,y) = a v b,
/// in lexicographic order.
inline std::vector<Quadruple> split_quadruples(const Distance& d) {
  auto dec = detail::exact_decompositions(*d.s);
  std::vector<Quadruple> out;
  for (int x = 0; x < d.points; ++x)
    for (int y = 0; y < d.points; ++y)
      for (auto [a, b] : dec[d.at(x, y)]) out.push_back({x, y, a, b});
  return out;
}

namespace detail {

inline int quadruple_point(const Quadruple& q, int side) {
  return side == 0 ? q.x : q.y;
}

/// Value of the one-step extension between two points of X', where indices
/// >= n are u-points laid out as n + 2t + i for split t, side i. `base`
/// evaluates the stage-below distance.
template <class Base>
int extension_value(const FiniteSemilattice& s, long long n,
                    const std::vector<Quadruple>& splits, long long p,
                    long long q, Base&& base) {
  if (p == q) return 0;
  if (p > q) std::swap(p, q);
  if (q < n) return base(p, q);
  const long long tq = (q - n) / 2;
  const int iq = static_cast<int>((q - n) % 2);
  const Quadruple& xi = splits[tq];
  if (p < n)
    return s.join(base(p, quadruple_point(xi, iq)), xi.a);
  const long long tp = (p - n) / 2;
  const int ip = static_cast<int>((p - n) % 2);
  const Quadruple& eta = splits[tp];
  if (tp == tq) return ip == iq ? 0 : xi.b;
  return s.join(s.join(eta.a, xi.a),
                base(quadruple_point(eta, ip), quadruple_point(xi, iq)));
}

}  // namespace detail

constexpr long long kDefaultPointCap = 20000;

struct ExtendOnceResult {
  Distance extended;
  std::vector<Quadruple> splits;  // the H(d) page that created the new points
};

/// One simultaneous extension step: two fresh points u^0, u^1 per splitting
/// problem, with values per the three clauses. Throws if the result would
/// exceed the point cap.
inline ExtendOnceResult extend_once(const Distance& d,
                                    long long point_cap = kDefaultPointCap) {
  auto splits = split_quadruples(d);
  const long long n = d.points;
  const long long n2 = n + 2 * static_cast<long long>(splits.size());
  require(n2 <= point_cap, "extension exceeds the point cap (" +
                               std::to_string(n2) + " > " +
                               std::to_string(point_cap) + ")");
  Distance out;
  out.points = static_cast<int>(n2);
  out.s = d.s;
  out.value.resize(static_cast<std::size_t>(n2) * n2);
  auto base = [&](long long x, long long y) {
    return d.at(static_cast<int>(x), static_cast<int>(y));
  };
  for (long long p = 0; p < n2; ++p)
    for (long long q = 0; q < n2; ++q)
      out.set(static_cast<int>(p), static_cast<int>(q),
              detail::extension_value(*d.s, n, splits, p, q, base));
  return {std::move(out), std::move(splits)};
}

/// One stage of an iterated extension. Points 0..prev-1 are the previous
/// stage's points; point prev + 2t + i is the side-i fresh point of
/// splits_prev[t]. Stages up to the cap carry a materialized matrix.
struct Stage {
  long long points = 0;
  std::vector<Quadruple> splits_prev;
  std::optional<Distance> mat;
};

struct ExtensionTrace {
  SemilatticePtr s;
  std::vector<Stage> stages;
  bool truncated = false;

  int num_stages() const { return static_cast<int>(stages.size()); }
  long long stage_points(int j) const { return stages[j].points; }

  /// d_j(p,q), evaluated from the deepest materialized stage upward.
  int eval(int j, long long p, long long q) const {
    const Stage& st = stages[j];
    if (st.mat)
      return st.mat->at(static_cast<int>(p), static_cast<int>(q));
    const long long prev = stages[j - 1].points;
    return detail::extension_value(
        *s, prev, st.splits_prev, p, q,
        [&](long long a, long long b) { return eval(j - 1, a, b); });
  }
};

/// Iterates the one-step extension k times. Stages whose point count exceeds
/// `materialize_cap` are kept lazy (splitting-problem lists only); a stage
/// whose *pair set* is too large to enumerate the next H stops the trace
/// with the truncation flag.
inline ExtensionTrace extend_steps(const Distance& d, int k,
                                   long long materialize_cap = kDefaultPointCap,
                                   long long enumerate_cap = kDefaultPointCap) {
  require(k >= 0, "step count must be nonnegative");
  ExtensionTrace tr;
  tr.s = d.s;
  tr.stages.push_back({d.points, {}, d});
  auto dec = detail::exact_decompositions(*d.s);
  for (int j = 1; j <= k; ++j) {
    const Stage& prev = tr.stages.back();
    if (prev.points > enumerate_cap) {
      tr.truncated = true;
      break;
    }
    const long long n = prev.points;
    std::vector<Quadruple> splits;
    for (long long x = 0; x < n; ++x)
      for (long long y = 0; y < n; ++y) {
        int v = tr.eval(j - 1, x, y);
        for (auto [a, b] : dec[v])
          splits.push_back({static_cast<int>(x), static_cast<int>(y), a, b});
      }
    Stage next;
    next.points = n + 2 * static_cast<long long>(splits.size());
    next.splits_prev = std::move(splits);
    if (next.points <= materialize_cap) {
      Distance mat;
      mat.points = static_cast<int>(next.points);
      mat.s = d.s;
      mat.value.resize(static_cast<std::size_t>(next.points) * next.points);
      auto base = [&](long long a, long long b) {
        return prev.mat->at(static_cast<int>(a), static_cast<int>(b));
      };
      for (long long p = 0; p < next.points; ++p)
        for (long long q = 0; q < next.points; ++q)
          mat.set(static_cast<int>(p), static_cast<int>(q),
                  detail::extension_value(*d.s, n, next.splits_prev, p, q, base));
      next.mat = std::move(mat);
    }
    tr.stages.push_back(std::move(next));
  }
  return tr;
}

/// Two-point extension for one splitting problem d(x,y) <= a v b: refines to
/// the lexicographically least exact decomposition (a',b') with both parts
/// nonzero and adjoins points u, v with d'(z,u) = d(z,x) v a',
/// d'(z,v) = d(z,y) v a', d'(u,v) = b'.
inline Distance single_extension(const Distance& d, int x, int y, int a, int b) {
  const auto& S = *d.s;
  require(d.s->in_range(a) && d.s->in_range(b), "value index out of range");
  require(0 <= x && x < d.points && 0 <= y && y < d.points, "point out of range");
  const int v = d.at(x, y);
  require(S.leq(v, S.join(a, b)), "d(x,y) is not below a v b");
  std::optional<std::pair<int, int>> refined;
  for (int ap = 1; ap < S.n && !refined; ++ap) {
    if (!S.leq(ap, a)) continue;
    for (int bp = 1; bp < S.n; ++bp)
      if (S.leq(bp, b) && S.join(ap, bp) == v) {
        refined = {ap, bp};
        break;
      }
  }
  require(refined.has_value(),
          "no exact decomposition with nonzero parts (problem solvable in place)");
  auto [ap, bp] = *refined;
  const int n = d.points;
  Distance out;
  out.points = n + 2;
  out.s = d.s;
  out.value.assign(static_cast<std::size_t>(out.points) * out.points, 0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) out.set(p, q, d.at(p, q));
  const int u = n, w = n + 1;
  for (int z = 0; z < n; ++z) {
    out.set(z, u, S.join(d.at(z, x), ap));
    out.set(u, z, out.at(z, u));
    out.set(z, w, S.join(d.at(z, y), ap));
    out.set(w, z, out.at(z, w));
  }
  out.set(u, w, bp);
  out.set(w, u, bp);
  return out;
}

struct StagewiseResult {
  bool ok = true;
  bool applicable = true;   // false when a split admits no exact refinement
  bool exhaustive = true;   // false when a failed candidate could not be
                            // followed by a full search (lazy next stage)
  std::optional<std::array<long long, 4>> counterexample;  // (x,y,a,b)
};

/// Every splitting problem d_j(x,y) <= a v b, refined to an exact
/// decomposition, must have a type-2 chain inside stage j+1. The designated
/// fresh points are checked first (by evaluating their three distances);
/// if they fail and stage j+1 is materialized, a full quadratic search
/// decides the verdict.
inline StagewiseResult check_stagewise_type2(const ExtensionTrace& tr, int j) {
  require(j + 1 < tr.num_stages(), "trace has no stage j+1");
  const auto& S = *tr.s;
  const long long n = tr.stage_points(j);
  const Stage& next = tr.stages[j + 1];
  StagewiseResult res;

  auto chain_ok = [&](long long z1, long long z2, long long x, long long y,
                      int a, int b) {
    return S.leq(tr.eval(j + 1, x, z1), a) && S.leq(tr.eval(j + 1, z1, z2), b) &&
           S.leq(tr.eval(j + 1, z2, y), a);
  };

  for (long long x = 0; x < n; ++x)
    for (long long y = 0; y < n; ++y) {
      const int v = tr.eval(j, x, y);
      for (int a = 0; a < S.n; ++a)
        for (int b = 0; b < S.n; ++b) {
          if (!S.leq(v, S.join(a, b))) continue;
          // lexicographically least exact refinement
          std::optional<std::pair<int, int>> ref;
          for (int ap = 0; ap < S.n && !ref; ++ap) {
            if (!S.leq(ap, a)) continue;
            for (int bp = 0; bp < S.n; ++bp)
              if (S.leq(bp, b) && S.join(ap, bp) == v) {
                ref = {ap, bp};
                break;
              }
          }
          if (!ref) {
            res.applicable = false;
            res.ok = false;
            res.counterexample = {x, y, a, b};
            return res;
          }
          auto [ap, bp] = *ref;
          long long z1, z2;
          if (bp == 0) {  // d(x,y) = a' <= a: chain x, y, y, y
            z1 = y;
            z2 = y;
          } else if (ap == 0) {  // d(x,y) = b' <= b: chain x, x, y, y
            z1 = x;
            z2 = y;
          } else {
            Quadruple xi{static_cast<int>(x), static_cast<int>(y), ap, bp};
            auto it = std::lower_bound(next.splits_prev.begin(),
                                       next.splits_prev.end(), xi);
            require(it != next.splits_prev.end() && *it == xi,
                    "splitting problem missing from the next stage");
            const long long t = it - next.splits_prev.begin();
            z1 = n + 2 * t;
            z2 = z1 + 1;
          }
          if (chain_ok(z1, z2, x, y, a, b)) continue;
          if (next.mat) {  // full search decides
            bool found = false;
            for (long long c1 = 0; c1 < next.points && !found; ++c1)
              for (long long c2 = 0; c2 < next.points; ++c2)
                if (chain_ok(c1, c2, x, y, a, b)) {
                  found = true;
                  break;
                }
            if (found) continue;
          } else {
            res.exhaustive = false;
          }
          res.ok = false;
          res.counterexample = {x, y, a, b};
          return res;
        }
    }
  return res;
}

// ---------------------------------------------------------------------------
// Morphism extension
// ---------------------------------------------------------------------------

struct ExtendedMorphism {
  // stage_maps[j][p] = image of dom stage-j point p in cod stage j
  std::vector<std::vector<long long>> stage_maps;
  SemilatticeHom hom;
  bool identity_ok = true;     // fh(lambda(p,q)) == mu(f p, f q) on checked pairs
  bool projections_ok = true;  // each stage map extends the previous one
  bool exhaustive = true;      // all pairs checked at every stage
  long long checked_pairs = 0;
};

constexpr long long kMorphismExhaustiveCap = 3000;

/// Extends a base morphism <f, fh> stage by stage via
/// f'(u_xi^i) = u_{f xi}^i with f xi = (f x, f y, fh a, fh b). Requires an
/// embedding (injective f and fh); then f xi lands in the codomain's
/// splitting list. The morphism identity is verified exhaustively on stages
/// up to a size cap and on a deterministic pseudorandom sample beyond it.
inline ExtendedMorphism extend_morphism(const DistanceMorphism& base,
                                        const ExtensionTrace& dom,
                                        const ExtensionTrace& cod, int k) {
  require(k + 1 <= dom.num_stages() && k + 1 <= cod.num_stages(),
          "traces do not reach stage k");
  require(dom.s == base.hom.dom || same_semilattice(*dom.s, *base.hom.dom),
          "morphism hom domain mismatch");
  {
    std::vector<char> seen_pt(cod.stages[0].points, 0);
    for (int32_t p : base.point_map) {
      require(p >= 0 && p < cod.stages[0].points, "point map out of range");
      require(!seen_pt[p], "point map must be injective");
      seen_pt[p] = 1;
    }
    std::vector<char> seen(base.hom.cod->n, 0);
    for (int32_t v : base.hom.map) {
      require(!seen[v], "semilattice map must be an embedding");
      seen[v] = 1;
    }
  }

  ExtendedMorphism out;
  out.hom = base.hom;
  out.stage_maps.emplace_back(base.point_map.begin(), base.point_map.end());

  for (int j = 1; j <= k; ++j) {
    const auto& prev_map = out.stage_maps[j - 1];
    const Stage& dst = dom.stages[j];
    const Stage& cst = cod.stages[j];
    const long long dom_prev = dom.stage_points(j - 1);
    std::vector<long long> map(dst.points);
    for (long long p = 0; p < dom_prev; ++p) map[p] = prev_map[p];
    for (long long t = 0; t < static_cast<long long>(dst.splits_prev.size());
         ++t) {
      const Quadruple& xi = dst.splits_prev[t];
      Quadruple fxi{static_cast<int>(prev_map[xi.x]),
                    static_cast<int>(prev_map[xi.y]), base.hom(xi.a),
                    base.hom(xi.b)};
      auto it =
          std::lower_bound(cst.splits_prev.begin(), cst.splits_prev.end(), fxi);
      require(it != cst.splits_prev.end() && *it == fxi,
              "image splitting problem missing from codomain stage");
      const long long ct = it - cst.splits_prev.begin();
      map[dom_prev + 2 * t] = cod.stage_points(j - 1) + 2 * ct;
      map[dom_prev + 2 * t + 1] = cod.stage_points(j - 1) + 2 * ct + 1;
    }
    out.stage_maps.push_back(std::move(map));
  }

  // stage projections: each map restricts to the previous one (by
  // construction; re-checked)
  for (int j = 1; j <= k; ++j)
    for (long long p = 0; p < dom.stage_points(j - 1); ++p)
      if (out.stage_maps[j][p] != out.stage_maps[j - 1][p]) {
        out.projections_ok = false;
        break;
      }

  // morphism identity per stage
  for (int j = 0; j <= k; ++j) {
    const long long n = dom.stage_points(j);
    auto check_pair = [&](long long p, long long q) {
      ++out.checked_pairs;
      return base.hom(dom.eval(j, p, q)) ==
             cod.eval(j, out.stage_maps[j][p], out.stage_maps[j][q]);
    };
    if (n <= kMorphismExhaustiveCap) {
      for (long long p = 0; p < n && out.identity_ok; ++p)
        for (long long q = 0; q < n; ++q)
          if (!check_pair(p, q)) {
            out.identity_ok = false;
            break;
          }
    } else {
      out.exhaustive = false;
      uint64_t state = 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(j);
      auto next_ll = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<long long>((state >> 17) % static_cast<uint64_t>(n));
      };
      for (int t = 0; t < 200000 && out.identity_ok; ++t)
        if (!check_pair(next_ll(), next_ll())) out.identity_ok = false;
    }
  }
  return out;
}

}  // namespace vdist
