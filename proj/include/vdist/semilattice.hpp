#pragma once

#include <array>
#include <memory>
#include <optional>
#include <utility>

#include "vdist/core.hpp"

namespace vdist {

/// A finite join-semilattice with zero, stored as a full join table.
/// Element 0 is always the zero. The meet table is derived at construction
/// (every finite join-semilattice with zero has all meets: the meet of x and
/// y is the join of their common lower bounds).
struct FiniteSemilattice {
  int n = 0;
  std::vector<int32_t> join_tab;  // n*n, row-major
  std::vector<int32_t> meet_tab;  // derived

  static constexpr int zero = 0;

  int size() const { return n; }
  int join(int x, int y) const { return join_tab[x * n + y]; }
  int meet(int x, int y) const { return meet_tab[x * n + y]; }
  bool leq(int x, int y) const { return join(x, y) == y; }
  bool in_range(int x) const { return 0 <= x && x < n; }
};

using SemilatticePtr = std::shared_ptr<const FiniteSemilattice>;

enum class SemilatticeAxiom {
  Idempotence,
  Commutativity,
  Associativity,
  ZeroNeutral,
};

inline const char* to_string(SemilatticeAxiom a) {
  switch (a) {
    case SemilatticeAxiom::Idempotence: return "idempotence";
    case SemilatticeAxiom::Commutativity: return "commutativity";
    case SemilatticeAxiom::Associativity: return "associativity";
    case SemilatticeAxiom::ZeroNeutral: return "zero-neutral";
  }
  return "?";
}

struct SemilatticeViolation {
  SemilatticeAxiom axiom;
  std::array<int, 3> witness;  // unused slots are -1
};

struct SemilatticeValidation {
  bool ok = true;
  std::vector<SemilatticeViolation> violations;
};

/// Checks the four semilattice axioms. Reports one witnessing tuple per
/// violated axiom. Malformed dimensions or out-of-range entries throw.
inline SemilatticeValidation validate_join_table(
    const std::vector<std::vector<int>>& join) {
  const int n = static_cast<int>(join.size());
  require(n >= 1, "semilattice must have at least the zero element");
  for (const auto& row : join)
    require(static_cast<int>(row.size()) == n, "join table is not n-by-n");
  for (const auto& row : join)
    for (int v : row)
      require(0 <= v && v < n, "join table entry out of range");

  SemilatticeValidation out;
  auto report = [&](SemilatticeAxiom a, int x, int y, int z) {
    for (const auto& v : out.violations)
      if (v.axiom == a) return;  // one witness per axiom
    out.ok = false;
    out.violations.push_back({a, {x, y, z}});
  };

  for (int x = 0; x < n; ++x)
    if (join[x][x] != x) report(SemilatticeAxiom::Idempotence, x, -1, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (join[x][y] != join[y][x]) report(SemilatticeAxiom::Commutativity, x, y, -1);
  for (int x = 0; x < n; ++x)
    if (join[x][0] != x) report(SemilatticeAxiom::ZeroNeutral, x, -1, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (join[join[x][y]][z] != join[x][join[y][z]]) {
          report(SemilatticeAxiom::Associativity, x, y, z);
          x = y = n;  // associativity is the expensive loop; stop at first
          break;
        }
  return out;
}

namespace detail {

inline void fill_meets(FiniteSemilattice& s) {
  const int n = s.n;
  s.meet_tab.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      int m = 0;  // join of all common lower bounds
      for (int z = 0; z < n; ++z)
        if (s.leq(z, x) && s.leq(z, y)) m = s.join(m, z);
      s.meet_tab[x * n + y] = m;
      s.meet_tab[y * n + x] = m;
    }
}

}  // namespace detail

/// Validating factory. Throws on malformed input or axiom violation.
inline SemilatticePtr make_semilattice(const std::vector<std::vector<int>>& join) {
  auto v = validate_join_table(join);
  if (!v.ok) {
    const auto& bad = v.violations.front();
    throw Error(std::string("join table violates ") + to_string(bad.axiom));
  }
  auto s = std::make_shared<FiniteSemilattice>();
  s->n = static_cast<int>(join.size());
  s->join_tab.reserve(static_cast<std::size_t>(s->n) * s->n);
  for (const auto& row : join)
    for (int vv : row) s->join_tab.push_back(vv);
  detail::fill_meets(*s);
  return s;
}

constexpr int kMaxPowersetExponent = 12;

/// Powerset of {0,...,k-1} under union. Element index == characteristic
/// bitmask, so the zero (empty set) is index 0 and joins are bitwise or.
inline SemilatticePtr powerset_semilattice(int k) {
  require(0 <= k && k <= kMaxPowersetExponent,
          "powerset exponent out of bounds (0..12)");
  const int n = 1 << k;
  auto s = std::make_shared<FiniteSemilattice>();
  s->n = n;
  s->join_tab.resize(static_cast<std::size_t>(n) * n);
  s->meet_tab.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      s->join_tab[x * n + y] = x | y;
      s->meet_tab[x * n + y] = x & y;
    }
  return s;
}

inline bool same_semilattice(const FiniteSemilattice& a, const FiniteSemilattice& b) {
  return a.n == b.n && a.join_tab == b.join_tab;
}

struct DistributivityResult {
  bool distributive = true;
  // Violating triple (a, b, c) with c <= a v b admitting no refinement
  // c = a' v b' with a' <= a, b' <= b.
  std::optional<std::array<int, 3>> witness;
};

/// A finite join-semilattice is distributive iff every c <= a v b splits as
/// c = (a ^ c) v (b ^ c); maximal refinements suffice, which keeps the scan
/// cubic. Iteration order (c, a, b); first failure reported.
inline DistributivityResult is_distributive(const FiniteSemilattice& s) {
  for (int c = 0; c < s.n; ++c)
    for (int a = 0; a < s.n; ++a)
      for (int b = 0; b < s.n; ++b) {
        if (!s.leq(c, s.join(a, b))) continue;
        if (s.join(s.meet(a, c), s.meet(b, c)) != c)
          return {false, std::array<int, 3>{a, b, c}};
      }
  return {};
}

/// A join- and zero-preserving map between finite semilattices.
struct SemilatticeHom {
  SemilatticePtr dom;
  SemilatticePtr cod;
  std::vector<int32_t> map;

  int operator()(int x) const { return map[x]; }
};

/// First witness that `map` is not a (v,0)-homomorphism: (0,0) for a zero
/// violation, otherwise a pair (x,y) with map(x v y) != map(x) v map(y).
inline std::optional<std::pair<int, int>> hom_violation(
    const FiniteSemilattice& dom, const FiniteSemilattice& cod,
    const std::vector<int32_t>& map) {
  require(static_cast<int>(map.size()) == dom.n, "hom map length != dom size");
  for (int v : map) require(cod.in_range(v), "hom map entry out of range");
  if (map[0] != 0) return std::make_pair(0, 0);
  for (int x = 0; x < dom.n; ++x)
    for (int y = 0; y < dom.n; ++y)
      if (map[dom.join(x, y)] != cod.join(map[x], map[y]))
        return std::make_pair(x, y);
  return std::nullopt;
}

inline SemilatticeHom make_hom(SemilatticePtr dom, SemilatticePtr cod,
                               std::vector<int32_t> map) {
  if (auto bad = hom_violation(*dom, *cod, map))
    throw Error("not a semilattice homomorphism (witness pair " +
                std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
  return {std::move(dom), std::move(cod), std::move(map)};
}

inline SemilatticeHom identity_hom(SemilatticePtr s) {
  std::vector<int32_t> map(s->n);
  std::iota(map.begin(), map.end(), 0);
  return {s, s, std::move(map)};
}

inline SemilatticeHom compose(const SemilatticeHom& g, const SemilatticeHom& f) {
  require(same_semilattice(*f.cod, *g.dom), "compose: cod(f) != dom(g)");
  std::vector<int32_t> map(f.dom->n);
  for (int x = 0; x < f.dom->n; ++x) map[x] = g.map[f.map[x]];
  return {f.dom, g.cod, std::move(map)};
}

inline int product_index(int s, int t, int t_size) { return s * t_size + t; }

/// Componentwise product with row-major pairing: (s,t) -> s*|T| + t.
inline SemilatticePtr product(const FiniteSemilattice& s, const FiniteSemilattice& t) {
  const int n = s.n * t.n;
  auto out = std::make_shared<FiniteSemilattice>();
  out->n = n;
  out->join_tab.resize(static_cast<std::size_t>(n) * n);
  out->meet_tab.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xs = x / t.n, xt = x % t.n, ys = y / t.n, yt = y % t.n;
      out->join_tab[x * n + y] =
          product_index(s.join(xs, ys), t.join(xt, yt), t.n);
      out->meet_tab[x * n + y] =
          product_index(s.meet(xs, ys), t.meet(xt, yt), t.n);
    }
  return out;
}

struct WeakDistributivityResult {
  bool weakly_distributive = true;
  // (c, a, b) with mu(c) <= a v b but no x,y in dom with c <= x v y,
  // mu(x) <= a, mu(y) <= b.
  std::optional<std::array<int, 3>> witness;
};

/// The set {x : mu(x) <= a} is closed under joins, so its join is the
/// largest admissible pullback; checking against it decides the condition.
inline WeakDistributivityResult is_weakly_distributive(const SemilatticeHom& mu) {
  const auto& S = *mu.dom;
  const auto& T = *mu.cod;
  // best[a] = join of all x with mu(x) <= a
  std::vector<int> best(T.n, 0);
  for (int a = 0; a < T.n; ++a)
    for (int x = 0; x < S.n; ++x)
      if (T.leq(mu(x), a)) best[a] = S.join(best[a], x);
  for (int c = 0; c < S.n; ++c)
    for (int a = 0; a < T.n; ++a)
      for (int b = 0; b < T.n; ++b) {
        if (!T.leq(mu(c), T.join(a, b))) continue;
        if (!S.leq(c, S.join(best[a], best[b])))
          return {false, std::array<int, 3>{c, a, b}};
      }
  return {};
}

/// True iff every element is a finite join of elements of `subset`
/// (the zero is the empty join).
inline bool is_join_generating(const FiniteSemilattice& s,
                               const std::vector<int>& subset) {
  std::vector<char> reach(s.n, 0);
  reach[0] = 1;
  for (int x : subset) {
    require(s.in_range(x), "subset element out of range");
    reach[x] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < s.n; ++x) {
      if (!reach[x]) continue;
      for (int y = 0; y < s.n; ++y) {
        if (!reach[y]) continue;
        int j = s.join(x, y);
        if (!reach[j]) {
          reach[j] = 1;
          grew = true;
        }
      }
    }
  }
  for (int x = 0; x < s.n; ++x)
    if (!reach[x]) return false;
  return true;
}

/// Minimal nonzero elements, ascending.
inline std::vector<int> atoms(const FiniteSemilattice& s) {
  std::vector<int> out;
  for (int x = 1; x < s.n; ++x) {
    bool minimal = true;
    for (int y = 1; y < s.n && minimal; ++y)
      if (y != x && s.leq(y, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

/// If S is isomorphic to the powerset of its atoms, returns the atom list;
/// otherwise nullopt. The isomorphism tested is e -> {atoms below e}.
inline std::optional<std::vector<int>> boolean_atoms(const FiniteSemilattice& s) {
  auto at = atoms(s);
  const int k = static_cast<int>(at.size());
  if (k > 30) return std::nullopt;
  if (s.n != (1 << k)) return std::nullopt;
  std::vector<uint32_t> mask(s.n, 0);
  std::vector<char> seen(s.n, 0);
  for (int e = 0; e < s.n; ++e) {
    for (int i = 0; i < k; ++i)
      if (s.leq(at[i], e)) mask[e] |= (1u << i);
    if (seen[mask[e]]) return std::nullopt;  // not injective
    seen[mask[e]] = 1;
  }
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      if (mask[s.join(x, y)] != (mask[x] | mask[y])) return std::nullopt;
  return at;
}

/// Number of elements below-or-equal x; a cheap monotone rank.
inline int count_leq(const FiniteSemilattice& s, int x) {
  int c = 0;
  for (int y = 0; y < s.n; ++y)
    if (s.leq(y, x)) ++c;
  return c;
}

}  // namespace vdist
