#include "doctest.h"
#include "virw/element.hpp"
#include "virw/ring.hpp"

using namespace virw;

TEST_CASE("element arithmetic cancels exactly") {
  Element a = Element::term(sym_d(1), Scalar(2));
  Element b = Element::term(sym_d(1), Scalar(-2));
  CHECK((a + b).is_zero());
  Element c = a + Element::term(sym_x(0, 3), Rational(1, 2));
  CHECK(c.size() == 2);
  CHECK(c.coeff(sym_d(1)) == Scalar(2));
  CHECK(c.coeff(sym_d(99)) == Scalar(0));
  CHECK((Scalar(0) * c).is_zero());
  CHECK(-(-c) == c);
}

TEST_CASE("element text round-trips in canonical order") {
  Element e;
  e.add_term(sym_d(3), Scalar(-1));
  e.add_term(sym_x(0, 1), Rational(5, 2));
  e.add_term(sym_central(2), Scalar(3));
  // Canonical order: central first, then X, then D.
  CHECK(e.to_string() == "3*C2 + 5/2*X(0,1) + -1*D(3)");
  CHECK(Element::parse(e.to_string()) == e);
  CHECK(Element::parse("0").is_zero());
  CHECK(Element::parse("0").to_string() == "0");
  // Bare symbols get coefficient 1.
  CHECK(Element::parse("D(2)") == Element::term(sym_d(2)));
}

TEST_CASE("complex coefficients are parenthesized") {
  Element e = Element::term(sym_d(3), Scalar(Rational(1), Rational(1)));
  CHECK(e.to_string() == "(1+1*i)*D(3)");
  CHECK(Element::parse("(1+1*i)*D(3)") == e);
  Element f = Element::term(sym_t(0), Scalar(Rational(0), Rational(-2)));
  CHECK(f.to_string() == "(-2*i)*T(0)");
  CHECK(Element::parse(f.to_string()) == f);
}

TEST_CASE("element text with ring monomials") {
  RingSpec ring = RingSpec::grassmann(2);
  Element e = Element::term(with_ring(sym_d(1), 1), Scalar(2));
  e.add_term(with_ring(sym_d(1), 3), Scalar(-1));
  CHECK(e.to_string(&ring) == "2*D(1)@x1 + -1*D(1)@x1x2");
  CHECK(Element::parse(e.to_string(&ring), &ring) == e);
}

TEST_CASE("degree decomposition") {
  Element e;
  e.add_term(sym_d(1), Scalar(2));
  e.add_term(sym_t(1), Scalar(3));
  e.add_term(sym_central(2), Scalar(1));
  e.add_term(sym_d(-4), Scalar(1));
  auto parts = e.degree_decompose();
  CHECK(parts.size() == 3);
  CHECK(parts.at(1).size() == 2);
  CHECK(parts.at(0) == Element::term(sym_central(2)));
  CHECK(parts.at(-4) == Element::term(sym_d(-4)));
}
