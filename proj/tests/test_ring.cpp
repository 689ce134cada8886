#include "doctest.h"
#include "virw/ring.hpp"

using namespace virw;

TEST_CASE("grassmann ring multiplication") {
  RingSpec r = RingSpec::grassmann(2);
  CHECK(r.size() == 4);
  uint32_t x1 = r.monomial_by_name("x1");
  uint32_t x2 = r.monomial_by_name("x2");
  uint32_t x12 = r.monomial_by_name("x1x2");
  CHECK(r.parity(x1) == 1);
  CHECK(r.parity(x12) == 0);
  CHECK(r.nilpotent(x12));
  CHECK(!r.nilpotent(0));

  auto p = r.multiply(x1, x2);
  CHECK(p.coeff == Scalar(1));
  CHECK(p.index == x12);
  auto q = r.multiply(x2, x1);
  CHECK(q.coeff == Scalar(-1));
  CHECK(q.index == x12);
  CHECK(r.multiply(x1, x1).coeff.is_zero());
  CHECK(r.multiply(x12, x1).coeff.is_zero());
  r.validate();
}

TEST_CASE("truncated polynomial ring") {
  RingSpec r = RingSpec::trunc_poly(3);
  CHECK(r.size() == 3);
  uint32_t e = r.monomial_by_name("e");
  uint32_t ee = r.monomial_by_name("ee");
  CHECK(r.parity(e) == 0);
  auto p = r.multiply(e, e);
  CHECK(p.coeff == Scalar(1));
  CHECK(p.index == ee);
  CHECK(r.multiply(e, ee).coeff.is_zero());
  r.validate();
}

TEST_CASE("product ring renames generators uniquely") {
  RingSpec r = RingSpec::product({RingSpec::grassmann(1), RingSpec::trunc_poly(2)});
  CHECK(r.size() == 4);
  uint32_t x1 = r.monomial_by_name("x1");
  uint32_t e = r.monomial_by_name("e");
  uint32_t mixed = r.monomial_by_name("x1_e");
  CHECK(r.parity(mixed) == 1);
  auto p = r.multiply(x1, e);
  CHECK(p.coeff == Scalar(1));
  CHECK(p.index == mixed);
  // e is even, so it commutes with x1.
  auto q = r.multiply(e, x1);
  CHECK(q.coeff == Scalar(1));
  CHECK(q.index == mixed);
  r.validate();
}

TEST_CASE("product of two grassmann factors anticommutes across factors") {
  RingSpec r = RingSpec::product({RingSpec::grassmann(1), RingSpec::grassmann(1)});
  uint32_t x1 = r.monomial_by_name("x1");
  uint32_t x2 = r.monomial_by_name("x2");
  auto p = r.multiply(x1, x2);
  auto q = r.multiply(x2, x1);
  CHECK(p.index == q.index);
  CHECK(p.coeff == -q.coeff);
  r.validate();
}

TEST_CASE("psi character is forced to zero on odd and nilpotent monomials") {
  RingSpec r = RingSpec::grassmann(2);
  PsiSpec psi = PsiSpec::make(r, {});
  CHECK(psi.apply(0) == Scalar(1));
  CHECK(psi.apply(r.monomial_by_name("x1")) == Scalar(0));
  CHECK(psi.apply(r.monomial_by_name("x1x2")) == Scalar(0));

  // A nonzero value on a nilpotent generator contradicts multiplicativity.
  CHECK_THROWS_AS(PsiSpec::make(r, {{"x1", Scalar(1)}}), CatalogError);
  RingSpec t = RingSpec::trunc_poly(2);
  CHECK_THROWS_AS(PsiSpec::make(t, {{"e", Scalar(5)}}), CatalogError);
  PsiSpec ok = PsiSpec::make(t, {{"e", Scalar(0)}});
  CHECK(ok.apply(t.monomial_by_name("e")) == Scalar(0));
  // Unknown generator names are rejected.
  CHECK_THROWS_AS(PsiSpec::make(t, {{"zz", Scalar(0)}}), CatalogError);
}
