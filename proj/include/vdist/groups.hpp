#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>

#include "vdist/distance.hpp"

namespace vdist {

struct FiniteGroup {
  int order = 0;
  std::vector<uint16_t> mult;  // order*order
  std::vector<uint16_t> inv;
  int identity = 0;

  int op(int a, int b) const { return mult[static_cast<std::size_t>(a) * order + b]; }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

constexpr int kGroupFullValidationBound = 256;
constexpr int kGroupOrderBound = 4096;

namespace detail {

inline GroupPtr finish_group(std::vector<uint16_t> mult, int order) {
  auto g = std::make_shared<FiniteGroup>();
  g->order = order;
  g->mult = std::move(mult);
  // identity: the unique e with e*x = x*e = x
  g->identity = -1;
  for (int e = 0; e < order && g->identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x)
      if (g->op(e, x) != x || g->op(x, e) != x) ok = false;
    if (ok) g->identity = e;
  }
  require(g->identity >= 0, "multiplication table has no identity");
  g->inv.assign(order, 0);
  for (int x = 0; x < order; ++x) {
    int found = -1;
    for (int y = 0; y < order && found < 0; ++y)
      if (g->op(x, y) == g->identity && g->op(y, x) == g->identity) found = y;
    require(found >= 0, "element without inverse");
    g->inv[x] = static_cast<uint16_t>(found);
  }
  return g;
}

}  // namespace detail

/// Group from a full multiplication table. Associativity is verified
/// exhaustively up to order 256; larger tables must come from permutation
/// generators, where it holds by construction.
inline GroupPtr make_group_from_table(const std::vector<std::vector<int>>& mult) {
  const int n = static_cast<int>(mult.size());
  require(n >= 1 && n <= kGroupOrderBound, "group order out of bounds");
  require(n <= kGroupFullValidationBound,
          "table too large for full validation; supply permutation generators");
  std::vector<uint16_t> m;
  m.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : mult) {
    require(static_cast<int>(row.size()) == n, "table is not n-by-n");
    for (int v : row) {
      require(0 <= v && v < n, "table entry out of range");
      m.push_back(static_cast<uint16_t>(v));
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        require(mult[mult[a][b]][c] == mult[a][mult[b][c]],
                "multiplication table not associative");
  return detail::finish_group(std::move(m), n);
}

/// Group generated by permutations of {0..degree-1}: breadth-first closure
/// from the identity, multiplication by composition.
inline GroupPtr group_from_permutations(int degree,
                                        const std::vector<std::vector<int>>& gens) {
  require(degree >= 1 && degree <= 16, "permutation degree out of bounds");
  using Perm = std::vector<int>;
  for (const auto& p : gens) {
    require(static_cast<int>(p.size()) == degree, "generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      require(0 <= v && v < degree && !seen[v], "generator is not a permutation");
      seen[v] = 1;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, int> index;
  std::vector<Perm> elems{id};
  index[id] = 0;
  for (std::size_t at = 0; at < elems.size(); ++at) {
    for (const auto& gen : gens) {
      Perm next(degree);
      for (int i = 0; i < degree; ++i) next[i] = gen[elems[at][i]];
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        require(static_cast<int>(elems.size()) < kGroupOrderBound,
                "generated group exceeds the order bound");
        elems.push_back(next);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<uint16_t> mult(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Perm prod(degree);
      for (int i = 0; i < degree; ++i) prod[i] = elems[a][elems[b][i]];
      mult[static_cast<std::size_t>(a) * n + b] =
          static_cast<uint16_t>(index.at(prod));
    }
  return detail::finish_group(std::move(mult), n);
}

/// Direct product with row-major pairing.
inline GroupPtr product_group(const FiniteGroup& a, const FiniteGroup& b) {
  const long long n = static_cast<long long>(a.order) * b.order;
  require(n <= kGroupOrderBound, "product order exceeds the bound");
  std::vector<uint16_t> mult(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xa = x / b.order, xb = x % b.order;
      const int ya = y / b.order, yb = y % b.order;
      mult[static_cast<std::size_t>(x) * n + y] =
          static_cast<uint16_t>(a.op(xa, ya) * b.order + b.op(xb, yb));
    }
  return detail::finish_group(std::move(mult), static_cast<int>(n));
}

/// Least normal subgroup containing the generators: the subgroup generated
/// by all conjugates of the generators (a conjugation-closed set generates a
/// normal subgroup). Returns the sorted element list.
inline std::vector<int> normal_closure(const FiniteGroup& g,
                                       const std::vector<int>& generators) {
  std::vector<char> in_c(g.order, 0);
  std::vector<int> seeds;
  auto add_seed = [&](int x) {
    if (!in_c[x]) {
      in_c[x] = 1;
      seeds.push_back(x);
    }
  };
  for (int x : generators) {
    require(0 <= x && x < g.order, "generator out of range");
    for (int h = 0; h < g.order; ++h) {
      int conj = g.op(g.op(h, x), g.inv[h]);
      add_seed(conj);
      add_seed(g.inv[conj]);
    }
  }
  std::vector<char> in_n(g.order, 0);
  std::vector<int> elems{g.identity};
  in_n[g.identity] = 1;
  for (std::size_t at = 0; at < elems.size(); ++at)
    for (int c : seeds) {
      int next = g.op(elems[at], c);
      if (!in_n[next]) {
        in_n[next] = 1;
        elems.push_back(next);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

/// The semilattice of all normal subgroups (all finitely generated in the
/// finite case) under join = product subgroup, plus the subgroup list and
/// the per-element principal closure index.
struct NormalSubgroupSemilattice {
  SemilatticePtr semilattice;
  GroupPtr group;
  std::vector<std::vector<int>> subgroups;  // index-aligned, each sorted
  std::vector<int> principal;               // principal[x] = index of [x]
};

inline NormalSubgroupSemilattice normal_subgroup_semilattice(GroupPtr gp) {
  const auto& g = *gp;
  // principal closures, computed once per conjugacy class
  std::vector<int> class_rep(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    if (class_rep[x] >= 0) continue;
    for (int h = 0; h < g.order; ++h)
      class_rep[g.op(g.op(h, x), g.inv[h])] = x;
  }
  std::map<int, std::vector<int>> closure_of_rep;
  for (int x = 0; x < g.order; ++x)
    if (class_rep[x] == x) closure_of_rep[x] = normal_closure(g, {x});

  // all normal subgroups: join-closure of the principal ones
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> subs;
  auto intern = [&](const std::vector<int>& s) {
    auto it = index.find(s);
    if (it != index.end()) return std::make_pair(it->second, false);
    index.emplace(s, static_cast<int>(subs.size()));
    subs.push_back(s);
    return std::make_pair(static_cast<int>(subs.size()) - 1, true);
  };
  intern({g.identity});
  std::vector<std::vector<int>> gens;
  for (auto& [rep, cl] : closure_of_rep) {
    gens.push_back(cl);
    intern(cl);
  }
  auto join_subs = [&](const std::vector<int>& a, const std::vector<int>& b) {
    // the product set of two normal subgroups is their join
    std::vector<char> in(g.order, 0);
    for (int x : a)
      for (int y : b) in[g.op(x, y)] = 1;
    std::vector<int> out;
    for (int x = 0; x < g.order; ++x)
      if (in[x]) out.push_back(x);
    return out;
  };
  for (std::size_t at = 0; at < subs.size(); ++at)
    for (const auto& gen : gens) {
      auto j = join_subs(subs[at], gen);
      intern(j);
    }

  // order: trivial subgroup first, then by (size, element list)
  std::sort(subs.begin(), subs.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  index.clear();
  for (int i = 0; i < static_cast<int>(subs.size()); ++i) index[subs[i]] = i;

  const int k = static_cast<int>(subs.size());
  require(k <= 65535, "too many normal subgroups");
  std::vector<std::vector<int>> join(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      int v = index.at(join_subs(subs[i], subs[j]));
      join[i][j] = v;
      join[j][i] = v;
    }

  NormalSubgroupSemilattice out;
  out.semilattice = make_semilattice(join);
  out.group = std::move(gp);
  out.subgroups = std::move(subs);
  out.principal.assign(g.order, 0);
  for (int x = 0; x < g.order; ++x)
    out.principal[x] = index.at(closure_of_rep.at(class_rep[x]));
  return out;
}

/// d(x,y) = normal closure of x y^{-1}, valued in the normal subgroup
/// semilattice.
inline Distance group_distance(const NormalSubgroupSemilattice& ns) {
  const auto& g = *ns.group;
  Distance d;
  d.points = g.order;
  d.s = ns.semilattice;
  d.value.resize(static_cast<std::size_t>(g.order) * g.order);
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      d.set(x, y, ns.principal[g.op(x, g.inv[y])]);
  return d;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

inline GroupPtr cyclic_group(int n) {
  require(1 <= n && n <= 64, "cyclic order out of bounds");
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  return make_group_from_table(mult);
}

/// cyclic1..cyclic12, sym3, alt5, alt5xalt5.
inline const GroupPtr& builtin_group(const std::string& name) {
  static const std::map<std::string, GroupPtr>* catalog = [] {
    auto* c = new std::map<std::string, GroupPtr>;
    for (int n = 1; n <= 12; ++n)
      (*c)["cyclic" + std::to_string(n)] = cyclic_group(n);
    (*c)["sym3"] = group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
    auto a5 = group_from_permutations(5, {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}});
    (*c)["alt5"] = a5;
    (*c)["alt5xalt5"] = product_group(*a5, *a5);
    return c;
  }();
  auto it = catalog->find(name);
  if (it == catalog->end()) throw Error("unknown builtin group: " + name);
  return it->second;
}

inline std::vector<std::string> builtin_group_names() {
  std::vector<std::string> out;
  for (int n = 1; n <= 12; ++n) out.push_back("cyclic" + std::to_string(n));
  out.push_back("sym3");
  out.push_back("alt5");
  out.push_back("alt5xalt5");
  return out;
}

}  // namespace vdist
