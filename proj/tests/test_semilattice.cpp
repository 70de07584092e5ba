#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vdist/semilattice.hpp"

using namespace vdist;

namespace {

SemilatticePtr chain_semilattice(int n) {
  std::vector<std::vector<int>> join(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) join[x][y] = std::max(x, y);
  return make_semilattice(join);
}

// Join-reduct of M3: 0, three atoms 1,2,3, top 4.
SemilatticePtr m3_reduct() {
  std::vector<std::vector<int>> j(5, std::vector<int>(5));
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      if (x == y) j[x][y] = x;
      else if (x == 0) j[x][y] = y;
      else if (y == 0) j[x][y] = x;
      else j[x][y] = 4;
    }
  return make_semilattice(j);
}

}  // namespace

TEST_CASE("validate accepts the trivial and chain semilattices") {
  CHECK(validate_join_table({{0}}).ok);
  CHECK(validate_join_table({{0, 1}, {1, 1}}).ok);
}

TEST_CASE("validate reports violated axioms with witnesses") {
  // join(0,1)=0 breaks commutativity against join(1,0)=1
  auto v = validate_join_table({{0, 0}, {1, 1}});
  REQUIRE_FALSE(v.ok);
  bool saw_comm = false;
  for (const auto& viol : v.violations)
    if (viol.axiom == SemilatticeAxiom::Commutativity) {
      saw_comm = true;
      CHECK(viol.witness[0] == 0);
      CHECK(viol.witness[1] == 1);
    }
  CHECK(saw_comm);

  CHECK_THROWS_AS(validate_join_table({{0, 1}}), Error);
  CHECK_THROWS_AS(validate_join_table({{0, 5}, {1, 1}}), Error);
}

TEST_CASE("leq is the join order") {
  auto c2 = chain_semilattice(2);
  CHECK(c2->leq(0, 1));
  CHECK_FALSE(c2->leq(1, 0));
  auto p2 = powerset_semilattice(2);
  CHECK(p2->leq(1, 3));   // {0} <= {0,1}
  CHECK_FALSE(p2->leq(1, 2));  // {0} vs {1}
  for (int x = 0; x < p2->n; ++x) CHECK(p2->leq(x, x));
}

TEST_CASE("powerset semilattices") {
  CHECK(powerset_semilattice(0)->n == 1);
  auto p2 = powerset_semilattice(2);
  CHECK(p2->n == 4);
  CHECK(p2->join(1, 2) == 3);
  auto p3 = powerset_semilattice(3);
  CHECK(p3->n == 8);
  CHECK(atoms(*p3) == std::vector<int>{1, 2, 4});
  CHECK_THROWS_AS(powerset_semilattice(13), Error);
}

TEST_CASE("leq is a partial order and join is the least upper bound") {
  std::mt19937 rng(7);
  int built = 0;
  while (built < 12) {
    auto table = oracle::random_join_table(rng, 4);
    if (!table) continue;
    ++built;
    auto s = make_semilattice(*table);
    for (int x = 0; x < s->n; ++x)
      for (int y = 0; y < s->n; ++y) {
        if (s->leq(x, y) && s->leq(y, x)) CHECK(x == y);
        int j = s->join(x, y);
        CHECK(s->leq(x, j));
        CHECK(s->leq(y, j));
        for (int z = 0; z < s->n; ++z)
          if (s->leq(x, z) && s->leq(y, z)) CHECK(s->leq(j, z));
      }
  }
}

TEST_CASE("distributivity: powersets and chains yes, M3 reduct no") {
  for (int k = 0; k <= 4; ++k)
    CHECK(is_distributive(*powerset_semilattice(k)).distributive);
  for (int n = 1; n <= 6; ++n)
    CHECK(is_distributive(*chain_semilattice(n)).distributive);

  auto r = is_distributive(*m3_reduct());
  REQUIRE_FALSE(r.distributive);
  // first failure in (c,a,b) order: c = atom 1, a = atom 2, b = atom 3
  CHECK(r.witness == std::array<int, 3>{2, 3, 1});
}

TEST_CASE("distributivity agrees with the brute-force oracle") {
  std::mt19937 rng(2024);
  int done = 0;
  while (done < 60) {
    auto table = oracle::random_join_table(rng, 4 + (done % 2));
    if (!table) continue;
    ++done;
    auto s = make_semilattice(*table);
    CHECK(is_distributive(*s).distributive == oracle::is_distributive(*s));
  }
  CHECK_FALSE(oracle::is_distributive(*m3_reduct()));
}

TEST_CASE("make_hom validates") {
  auto c2 = chain_semilattice(2);
  auto p2 = powerset_semilattice(2);

  auto id = identity_hom(c2);
  CHECK(hom_violation(*c2, *c2, id.map) == std::nullopt);

  // e : 2 -> P(2), 1 |-> {0,1}
  auto e = make_hom(c2, p2, {0, 3});
  CHECK(e(1) == 3);

  // constant-zero map is a (v,0)-homomorphism
  CHECK_NOTHROW(make_hom(c2, c2, {0, 0}));

  // 1 |-> {0} then join(1,1)=1 maps fine, but zero violation: 0 |-> {1}
  CHECK(hom_violation(*c2, *p2, {2, 3}).has_value());
  CHECK_THROWS_AS(make_hom(c2, p2, {2, 0}), Error);
}

TEST_CASE("compose and product") {
  auto c2 = chain_semilattice(2);
  auto p2 = powerset_semilattice(2);
  auto e = make_hom(c2, p2, {0, 3});
  auto id2 = identity_hom(c2);
  auto comp = compose(e, id2);
  CHECK(comp.map == e.map);
  CHECK(compose(identity_hom(p2), e).map == e.map);

  // product(2-chain, 2-chain) has exactly the P(2) join table under the
  // row-major pairing (bit 1 = first component, bit 0 = second).
  auto prod = product(*c2, *c2);
  CHECK(same_semilattice(*prod, *powerset_semilattice(2)));

  CHECK_THROWS_AS(compose(e, e), Error);
}

TEST_CASE("weak distributivity checker matches the oracle") {
  auto c2 = chain_semilattice(2);
  auto p2 = powerset_semilattice(2);

  CHECK(is_weakly_distributive(identity_hom(p2)).weakly_distributive);

  // 2-chain into P(2), 1 |-> {0,1}: the split c=1 <= {0} v {1} has no
  // pullback (only 0 maps below an atom), so the embedding is not weakly
  // distributive.
  auto e = make_hom(c2, p2, {0, 3});
  auto we = is_weakly_distributive(e);
  REQUIRE_FALSE(we.weakly_distributive);
  CHECK(we.witness == std::array<int, 3>{1, 1, 2});
  CHECK_FALSE(oracle::is_weakly_distributive(e));

  // atom-doubling map P(1) style: {0} |-> {0,1}, pushed to P(2)->P(4)
  auto p4 = powerset_semilattice(4);
  std::vector<int32_t> f(4);
  for (int m = 0; m < 4; ++m) {
    int img = 0;
    if (m & 1) img |= 0b0011;
    if (m & 2) img |= 0b1100;
    f[m] = img;
  }
  auto fh = make_hom(p2, p4, f);
  CHECK(is_weakly_distributive(fh).weakly_distributive ==
        oracle::is_weakly_distributive(fh));

  // random homs from P(2) into P(3): extend random atom images by union
  std::mt19937 rng(99);
  auto p3 = powerset_semilattice(3);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<int> pick(0, 7);
    int a0 = pick(rng), a1 = pick(rng);
    std::vector<int32_t> map(4);
    for (int m = 0; m < 4; ++m)
      map[m] = ((m & 1) ? a0 : 0) | ((m & 2) ? a1 : 0);
    auto h = make_hom(p2, p3, map);
    CHECK(is_weakly_distributive(h).weakly_distributive ==
          oracle::is_weakly_distributive(h));
  }
}

TEST_CASE("join generation") {
  auto p3 = powerset_semilattice(3);
  CHECK(is_join_generating(*p3, {1, 2, 4}));
  auto c3 = chain_semilattice(3);
  CHECK_FALSE(is_join_generating(*c3, {2}));
  std::vector<int> all(c3->n);
  std::iota(all.begin(), all.end(), 0);
  CHECK(is_join_generating(*c3, all));
}

TEST_CASE("boolean recognition") {
  for (int k = 0; k <= 3; ++k) {
    auto at = boolean_atoms(*powerset_semilattice(k));
    REQUIRE(at.has_value());
    CHECK(static_cast<int>(at->size()) == k);
  }
  CHECK_FALSE(boolean_atoms(*chain_semilattice(3)).has_value());
  CHECK_FALSE(boolean_atoms(*m3_reduct()).has_value());
}
