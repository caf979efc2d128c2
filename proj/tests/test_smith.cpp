#include "doctest.h"

#include "cubicay/smith.hpp"

using namespace cubicay;

TEST_CASE("smith invariants of explicit matrices") {
  // rows (0,2),(3,3): diag(1,6)
  auto inv = smith_invariants({{0, 2}, {3, 3}}, 2);
  CHECK(inv.free_rank == 0);
  CHECK(inv.torsion == std::vector<std::int64_t>{6});

  // rows (0,2),(0,2n): column a survives free
  inv = smith_invariants({{0, 2}, {0, 6}}, 2);
  CHECK(inv.free_rank == 1);
  CHECK(inv.torsion == std::vector<std::int64_t>{2});

  // zero matrix: all free
  inv = smith_invariants({{0, 0, 0}}, 3);
  CHECK(inv.free_rank == 3);
  CHECK(inv.torsion.empty());

  // divisibility chain: Z_2 x Z_4 from [[2,0],[0,4]]
  inv = smith_invariants({{2, 0}, {0, 4}}, 2);
  CHECK(inv.torsion == std::vector<std::int64_t>{2, 4});

  // needs a gcd fold: [[2,0],[0,3]] -> Z_6
  inv = smith_invariants({{2, 0}, {0, 3}}, 2);
  CHECK(inv.free_rank == 0);
  CHECK(inv.torsion == std::vector<std::int64_t>{6});
}

TEST_CASE("family abelianizations, hand-computed") {
  // P1 n=3: rows (0,2),(3,3) -> [6]
  auto inv = abelianization(make_spec(FamilyId::P1, 3));
  CHECK(inv.free_rank == 0);
  CHECK(inv.torsion == std::vector<std::int64_t>{6});

  // P1 n=4: Z_4 x Z_2 -> [2,4]
  inv = abelianization(make_spec(FamilyId::P1, 4));
  CHECK(inv.torsion == std::vector<std::int64_t>{2, 4});

  // P3 n=2 m=2: Z_2^3
  inv = abelianization(make_spec(FamilyId::P3, 2, 2));
  CHECK(inv.free_rank == 0);
  CHECK(inv.torsion == std::vector<std::int64_t>{2, 2, 2});

  // P2, any n: rows (0,2),(0,2n) -> free rank 1, torsion [2]
  for (int n : {1, 2, 3, 5}) {
    inv = abelianization(make_spec(FamilyId::P2, n));
    CHECK(inv.free_rank == 1);
    CHECK(inv.torsion == std::vector<std::int64_t>{2});
  }

  // P4 n=2: Z_2^3 (the claim-comparison side computes [2,2])
  inv = abelianization(make_spec(FamilyId::P4, 2));
  CHECK(inv.torsion == std::vector<std::int64_t>{2, 2, 2});

  // P5 n=2 m=2: rows (0,2),(4,0),(4,2) -> [2,4]
  inv = abelianization(make_spec(FamilyId::P5, 2, 2));
  CHECK(inv.torsion == std::vector<std::int64_t>{2, 4});
}

TEST_CASE("exponent rows") {
  CHECK(exponent_row("bAba", 2) == std::vector<std::int64_t>{0, 2});
  CHECK(exponent_row("bcba", 3) == std::vector<std::int64_t>{1, 2, 1});
  CHECK(exponent_row("", 2) == std::vector<std::int64_t>{0, 0});
}
