#pragma once

// Independent brute-force oracles and small instance generators. Everything
// here re-derives verdicts straight from the definitions, with no shortcuts,
// so the library implementations can be checked against a second route.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "vdist/core.hpp"
#include "vdist/semilattice.hpp"

namespace oracle {

// Distributivity by literal definition: for all a,b,c with c <= a v b there
// are a' <= a, b' <= b with c = a' v b'.
inline bool is_distributive(const vdist::FiniteSemilattice& s) {
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      for (int c = 0; c < s.n; ++c) {
        if (!s.leq(c, s.join(a, b))) continue;
        bool found = false;
        for (int ap = 0; ap < s.n && !found; ++ap) {
          if (!s.leq(ap, a)) continue;
          for (int bp = 0; bp < s.n; ++bp)
            if (s.leq(bp, b) && s.join(ap, bp) == c) {
              found = true;
              break;
            }
        }
        if (!found) return false;
      }
  return true;
}

// Weak distributivity by literal definition (inner pair scan).
inline bool is_weakly_distributive(const vdist::SemilatticeHom& mu) {
  const auto& S = *mu.dom;
  const auto& T = *mu.cod;
  for (int c = 0; c < S.n; ++c)
    for (int a = 0; a < T.n; ++a)
      for (int b = 0; b < T.n; ++b) {
        if (!T.leq(mu(c), T.join(a, b))) continue;
        bool found = false;
        for (int x = 0; x < S.n && !found; ++x) {
          if (!T.leq(mu(x), a)) continue;
          for (int y = 0; y < S.n; ++y)
            if (T.leq(mu(y), b) && S.leq(c, S.join(x, y))) {
              found = true;
              break;
            }
        }
        if (!found) return false;
      }
  return true;
}

// All partitions of {0..n-1} as canonical block vectors (restricted growth
// strings), n small.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int i, int maxb) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      cur[i] = b;
      self(self, i + 1, std::max(maxb, b));
    }
  };
  rec(rec, 0, -1);
  return out;
}

// Random poset on k points as a reflexive-transitive order matrix; point 0 is
// not forced to be a bottom.
inline std::vector<std::vector<char>> random_poset(std::mt19937& rng, int k) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<std::vector<char>> leq(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) leq[i][i] = 1;
  // random edges only from lower to higher index keeps it acyclic
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (coin(rng) == 0) leq[i][j] = 1;
  for (int m = 0; m < k; ++m)  // transitive closure
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (leq[i][m] && leq[m][j]) leq[i][j] = 1;
  return leq;
}

// Random join-semilattice with zero: adds a bottom to a random poset, keeps
// it only if every pair has a least upper bound.
inline std::optional<std::vector<std::vector<int>>> random_join_table(
    std::mt19937& rng, int k) {
  auto ord = random_poset(rng, k);
  const int n = k + 1;  // element 0 = new bottom, poset point i -> i+1
  auto leq = [&](int x, int y) {
    if (x == 0) return true;
    if (y == 0) return false;
    return ord[x - 1][y - 1] != 0;
  };
  std::vector<std::vector<int>> join(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lub = -1;
      for (int z = 0; z < n; ++z) {
        if (!leq(x, z) || !leq(y, z)) continue;
        if (lub < 0 || leq(z, lub)) lub = z;
      }
      if (lub < 0) return std::nullopt;
      // verify z is really least among upper bounds
      for (int z = 0; z < n; ++z)
        if (leq(x, z) && leq(y, z) && !leq(lub, z)) return std::nullopt;
      join[x][y] = lub;
    }
  return join;
}

}  // namespace oracle

#include "vdist/distance.hpp"

namespace oracle {

// Type-n V-condition by explicit enumeration of the n intermediate points.
inline bool vtype_n(const vdist::Distance& d, int n) {
  const auto& S = *d.s;
  for (int x = 0; x < d.points; ++x)
    for (int y = 0; y < d.points; ++y)
      for (int a = 0; a < S.n; ++a)
        for (int b = 0; b < S.n; ++b) {
          if (!S.leq(d.at(x, y), S.join(a, b))) continue;
          std::vector<int> z(n, 0);
          bool found = false;
          while (!found) {
            int prev = x;
            bool ok = true;
            for (int k = 0; k <= n && ok; ++k) {
              int next = (k == n) ? y : z[k];
              int bound = (k % 2 == 0) ? a : b;
              if (!S.leq(d.at(prev, next), bound)) ok = false;
              prev = next;
            }
            if (ok) {
              found = true;
              break;
            }
            int i = 0;  // odometer
            while (i < n && ++z[i] == d.points) z[i++] = 0;
            if (i == n) break;
          }
          if (!found) return false;
        }
  return true;
}

inline bool vtype_32(const vdist::Distance& d) {
  const auto& S = *d.s;
  for (int x = 0; x < d.points; ++x)
    for (int y = 0; y < d.points; ++y)
      for (int a = 0; a < S.n; ++a)
        for (int b = 0; b < S.n; ++b) {
          if (!S.leq(d.at(x, y), S.join(a, b))) continue;
          bool found = false;
          for (int z = 0; z < d.points && !found; ++z)
            if ((S.leq(d.at(x, z), a) && S.leq(d.at(z, y), b)) ||
                (S.leq(d.at(x, z), b) && S.leq(d.at(z, y), a)))
              found = true;
          if (!found) return false;
        }
  return true;
}

// General V-condition via breadth-first search on the (point, parity)
// product graph; zero self-distances give free parity flips, so any
// reachability extends to a chain of length >= 2.
inline bool vtype_general(const vdist::Distance& d) {
  const auto& S = *d.s;
  for (int x = 0; x < d.points; ++x)
    for (int a = 0; a < S.n; ++a)
      for (int b = 0; b < S.n; ++b) {
        std::vector<std::array<char, 2>> vis(d.points, {0, 0});
        std::vector<std::pair<int, int>> frontier{{x, 0}};
        vis[x][0] = 1;
        while (!frontier.empty()) {
          auto [p, par] = frontier.back();
          frontier.pop_back();
          int bound = (par == 0) ? a : b;
          for (int q = 0; q < d.points; ++q)
            if (S.leq(d.at(p, q), bound) && !vis[q][1 - par]) {
              vis[q][1 - par] = 1;
              frontier.emplace_back(q, 1 - par);
            }
        }
        for (int y = 0; y < d.points; ++y) {
          if (!S.leq(d.at(x, y), S.join(a, b))) continue;
          if (!vis[y][0] && !vis[y][1]) return false;
        }
      }
  return true;
}

}  // namespace oracle
