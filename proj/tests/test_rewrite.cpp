#include "doctest.h"

#include "cubicay/errors.hpp"
#include "cubicay/rewrite.hpp"

using namespace cubicay;

namespace {

std::vector<FamilySpec> small_grid() {
  std::vector<FamilySpec> cells;
  for (int n = 2; n <= 4; ++n) cells.push_back(make_spec(FamilyId::P1, n));
  for (int n = 1; n <= 4; ++n) cells.push_back(make_spec(FamilyId::P2, n));
  for (int n = 2; n <= 3; ++n)
    for (int m = 2; m <= 3; ++m) cells.push_back(make_spec(FamilyId::P3, n, m));
  for (int n = 1; n <= 4; ++n) cells.push_back(make_spec(FamilyId::P4, n));
  for (int n = 2; n <= 3; ++n)
    for (int m = 2; m <= 3; ++m) cells.push_back(make_spec(FamilyId::P5, n, m));
  for (int n = 1; n <= 3; ++n)
    for (int m = 2; m <= 3; ++m) cells.push_back(make_spec(FamilyId::P6, n, m));
  for (int n = 1; n <= 3; ++n)
    for (int m = 2; m <= 3; ++m) cells.push_back(make_spec(FamilyId::P7, n, m));
  return cells;
}

}  // namespace

TEST_CASE("completion kills every relator") {
  for (const auto& spec : small_grid()) {
    CAPTURE(spec.name()); CAPTURE(spec.n); CAPTURE(spec.m);
    auto rs = RewriteSystem::complete(spec);
    REQUIRE(rs.is_complete());
    for (const Word& r : spec.relators()) CHECK(rs.normal_form(r) == "");
    CHECK(rs.normal_form("bb") == "");
  }
}

TEST_CASE("P1 n=2 completes within cap and kills b^2") {
  auto rs = RewriteSystem::complete(make_spec(FamilyId::P1, 2), 100);
  CHECK(rs.normal_form("bb") == "");
  CHECK(rs.normal_form("baba") == "");
}

TEST_CASE("P1 n=3 within cap 100") {
  auto rs = RewriteSystem::complete(make_spec(FamilyId::P1, 3), 100);
  CHECK(rs.normal_form("bababa") == "");
}

TEST_CASE("P4 n=2 within cap 200") {
  auto rs = RewriteSystem::complete(make_spec(FamilyId::P4, 2), 200);
  CHECK(rs.normal_form("bcbabcba") == "");
}

TEST_CASE("nf examples") {
  auto p1 = RewriteSystem::complete(make_spec(FamilyId::P1, 3));
  CHECK(p1.normal_form("bb") == "");
  CHECK(p1.normal_form("") == "");
  auto p5 = RewriteSystem::complete(make_spec(FamilyId::P5, 2, 2));
  CHECK(p5.normal_form("aaaa") == "");
  // idempotence
  for (const Word w : {"abab", "bAbA", "babababa"}) {
    const Word n1 = p1.normal_form(w);
    CHECK(p1.normal_form(n1) == n1);
  }
}

TEST_CASE("multiply and invert") {
  auto p1n2 = RewriteSystem::complete(make_spec(FamilyId::P1, 2));
  const Word ba = p1n2.normal_form("ba");
  CHECK(p1n2.multiply(ba, ba) == "");

  for (const auto& spec :
       {make_spec(FamilyId::P1, 3), make_spec(FamilyId::P3, 2, 2), make_spec(FamilyId::P7, 1, 2)}) {
    auto rs = RewriteSystem::complete(spec);
    CHECK(rs.invert("b") == "b");
    const Word u = rs.normal_form("ab");
    CHECK(rs.multiply(u, "") == u);
    CHECK(rs.multiply(u, rs.invert(u)) == "");
  }
}

TEST_CASE("element orders") {
  auto p1 = RewriteSystem::complete(make_spec(FamilyId::P1, 3));
  auto ord = p1.element_order("ba", 10);
  CHECK(ord.bounded);
  CHECK(ord.value == 3);

  ord = p1.element_order("a", 50);
  CHECK_FALSE(ord.bounded);
  CHECK(ord.value == 50);

  auto p7 = RewriteSystem::complete(make_spec(FamilyId::P7, 1, 2));
  ord = p7.element_order("bc", 50);
  CHECK_FALSE(ord.bounded);

  CHECK(p1.element_order("", 5).value == 1);
}

TEST_CASE("completion overflow is an error") {
  CHECK_THROWS_AS(RewriteSystem::complete(make_spec(FamilyId::P5, 3, 3), 3), CompletionOverflow);
}

TEST_CASE("rules are order-reducing and completion is deterministic") {
  for (const auto& spec : {make_spec(FamilyId::P5, 2, 3), make_spec(FamilyId::P6, 2, 2),
                           make_spec(FamilyId::P1, 3)}) {
    CAPTURE(spec.name());
    auto rs1 = RewriteSystem::complete(spec);
    auto rs2 = RewriteSystem::complete(spec);
    REQUIRE(rs1.rules().size() == rs2.rules().size());
    for (std::size_t i = 0; i < rs1.rules().size(); ++i) {
      CHECK(rs1.rules()[i].lhs == rs2.rules()[i].lhs);
      CHECK(rs1.rules()[i].rhs == rs2.rules()[i].rhs);
      CHECK(rs1.config().order.less(rs1.rules()[i].rhs, rs1.rules()[i].lhs));
    }
  }
}
