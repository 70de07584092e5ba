#include <catch2/catch_amalgamated.hpp>

#include "vdist/groups.hpp"
#include "vdist/wurp.hpp"

using namespace vdist;

TEST_CASE("group construction") {
  auto c3 = cyclic_group(3);
  CHECK(c3->order == 3);
  CHECK(c3->identity == 0);
  CHECK(c3->op(1, 2) == 0);
  CHECK(c3->inv[1] == 2);

  auto s3 = builtin_group("sym3");
  CHECK(s3->order == 6);
  auto a5 = builtin_group("alt5");
  CHECK(a5->order == 60);
  auto big = builtin_group("alt5xalt5");
  CHECK(big->order == 3600);

  // non-associative table is rejected
  CHECK_THROWS_AS(make_group_from_table({{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(builtin_group("nope"), Error);
}

TEST_CASE("normal closures") {
  auto s3 = builtin_group("sym3");
  CHECK(normal_closure(*s3, {s3->identity}) == std::vector<int>{s3->identity});

  // a transposition generates the whole of sym3; a 3-cycle only alt3
  int transposition = -1, three_cycle = -1;
  for (int x = 0; x < 6; ++x) {
    int x2 = s3->op(x, x);
    if (x != s3->identity && x2 == s3->identity && transposition < 0)
      transposition = x;
    if (x != s3->identity && x2 != s3->identity && s3->op(x2, x) == s3->identity &&
        three_cycle < 0)
      three_cycle = x;
  }
  REQUIRE(transposition >= 0);
  REQUIRE(three_cycle >= 0);
  CHECK(normal_closure(*s3, {transposition}).size() == 6);
  CHECK(normal_closure(*s3, {three_cycle}).size() == 3);
}

TEST_CASE("normal subgroup semilattices") {
  for (int p : {2, 3, 5, 7, 11}) {
    auto ns = normal_subgroup_semilattice(cyclic_group(p));
    CHECK(ns.semilattice->n == 2);  // prime order: a 2-chain
  }

  auto ns12 = normal_subgroup_semilattice(cyclic_group(12));
  CHECK(ns12.semilattice->n == 6);  // divisors of 12
  CHECK(is_distributive(*ns12.semilattice).distributive);

  auto ns6 = normal_subgroup_semilattice(cyclic_group(6));
  auto at6 = boolean_atoms(*ns6.semilattice);
  REQUIRE(at6.has_value());
  CHECK(at6->size() == 2);  // divisor lattice of 6 is a square

  auto nss3 = normal_subgroup_semilattice(builtin_group("sym3"));
  CHECK(nss3.semilattice->n == 3);  // trivial < alt3 < sym3
  CHECK(nss3.subgroups[0].size() == 1);
  CHECK(nss3.subgroups[1].size() == 3);
  CHECK(nss3.subgroups[2].size() == 6);

  auto nsa5 = normal_subgroup_semilattice(builtin_group("alt5"));
  CHECK(nsa5.semilattice->n == 2);  // simple

  auto nsbig = normal_subgroup_semilattice(builtin_group("alt5xalt5"));
  auto atb = boolean_atoms(*nsbig.semilattice);
  REQUIRE(atb.has_value());
  CHECK(atb->size() == 2);  // only the four product subgroups
  CHECK(nsbig.subgroups.size() == 4);
}

TEST_CASE("group distances") {
  auto nss3 = normal_subgroup_semilattice(builtin_group("sym3"));
  auto d = group_distance(nss3);
  CHECK(validate_distance(d).ok);
  for (int x = 0; x < d.points; ++x) CHECK(d.at(x, x) == 0);
  CHECK(kernel(d) == identity_partition(d.points));
  CHECK(check_v_type(d, VType::type_n(1)).holds);

  std::vector<int> range;
  for (int x = 0; x < d.points; ++x)
    for (int y = 0; y < d.points; ++y) range.push_back(d.at(x, y));
  CHECK(is_join_generating(*nss3.semilattice, range));

  auto rep = check_partition_correspondence(d);
  CHECK(rep.least_type_n == 1);
  CHECK(rep.permutability_ok == true);
  CHECK(rep.meets_ok);
  CHECK(rep.embedding_ok == true);
}

TEST_CASE("abelian groups give the module-style distance") {
  auto c4 = cyclic_group(4);
  auto ns = normal_subgroup_semilattice(c4);
  auto d = group_distance(ns);
  // d(x,y) is the subgroup generated by x - y
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      int diff = c4->op(x, c4->inv[y]);
      std::vector<int> gen{0};
      int cur = diff;
      while (cur != 0) {
        gen.push_back(cur);
        cur = c4->op(cur, diff);
      }
      std::sort(gen.begin(), gen.end());
      CHECK(ns.subgroups[d.at(x, y)] == gen);
    }
  CHECK(check_v_type(d, VType::type_n(1)).holds);

  // the witness builder with m = 1 succeeds on any instance
  const auto& S = *ns.semilattice;
  int top = 0;
  for (int v = 0; v < S.n; ++v) top = S.join(top, v);
  auto pairs = greedy_join_decomposition(d, top);
  for (int a = 0; a < S.n; ++a)
    for (int b = 0; b < S.n; ++b) {
      if (!S.leq(top, S.join(a, b))) continue;
      auto inst = make_wurp_instance(ns.semilattice, top, {a, a}, {b, b});
      auto w = build_witness_type1(d, pairs, inst);
      CHECK(w.m == 1);
      CHECK(verify_witness(inst, w).ok);
    }
}

TEST_CASE("the product of two simple groups has the four obvious normal subgroups") {
  auto nsbig = normal_subgroup_semilattice(builtin_group("alt5xalt5"));
  // subgroup sizes 1, 60, 60, 3600
  std::vector<std::size_t> sizes;
  for (const auto& s : nsbig.subgroups) sizes.push_back(s.size());
  CHECK(sizes == std::vector<std::size_t>{1, 60, 60, 3600});

  auto d = group_distance(nsbig);
  CHECK(check_v_type(d, VType::type_n(1)).holds);
}
