#include "doctest.h"
#include "virw/filtration.hpp"

using namespace virw;

TEST_CASE("filtration generator expansion") {
  // (t-1)^2 d at offset 0: d_2 - 2 d_1 + d_0.
  Element e = expand_witt_filtration(2, 0);
  Element want;
  want.add_term(sym_d(0), Scalar(1));
  want.add_term(sym_d(1), Scalar(-2));
  want.add_term(sym_d(2), Scalar(1));
  CHECK(e == want);

  Element x = expand_current_filtration(1, 1, -2);
  Element wx;
  wx.add_term(sym_x(1, -2), Scalar(-1));
  wx.add_term(sym_x(1, -1), Scalar(1));
  CHECK(x == wx);
}

TEST_CASE("vanishing order at t = 1") {
  CHECK(*valuation_at_one(expand_witt_filtration(2, 0)).witt == 2);
  CHECK(*valuation_at_one(expand_witt_filtration(5, -3)).witt == 5);
  CHECK(*valuation_at_one(Element::term(sym_d(3))).witt == 0);
  Element x = expand_current_filtration(0, 1, 0);
  CHECK(*valuation_at_one(x).current == 1);
  CHECK(!valuation_at_one(x).witt.has_value());

  Element zero;
  ValuationAtOne v = valuation_at_one(zero);
  CHECK(!v.witt.has_value());
  CHECK(!v.current.has_value());
  CHECK(v.in_filtration_level(100));

  CHECK_THROWS_AS(valuation_at_one(Element::term(sym_t(1))), FiltrationError);
}

TEST_CASE("filtration membership combines both parts") {
  Element a = expand_witt_filtration(1, 0) + Element::term(sym_x(0, 5));
  ValuationAtOne v = valuation_at_one(a);
  CHECK(*v.witt == 1);
  CHECK(*v.current == 0);
  CHECK(v.in_filtration_level(0));
  CHECK(!v.in_filtration_level(1));
}

TEST_CASE("slice projection") {
  Element a = Element::term(sym_d(3)) + Element::term(sym_d(0), Scalar(-1));
  CHECK(project_to_slice(a) == Element::term(sym_ghat_d(), Scalar(3)));
  CHECK(project_to_slice(Element::term(sym_x(1, 7))) == Element::term(sym_ghat_x(1)));
  CHECK_THROWS_AS(project_to_slice(Element::term(sym_d(3))), FiltrationError);
  CHECK_THROWS_AS(project_to_slice(Element::term(sym_e(1))), FiltrationError);
}

TEST_CASE("slice projection is a homomorphism on the level zero subalgebra") {
  GSpec g = gspec_one_dim(Scalar(5));
  Algebra src = Algebra::witt_current(g, false);
  Algebra dst = Algebra::der_ext(g);
  Element a = expand_witt_filtration(1, 0);  // d_1 - d_0 |-> GD
  Element b = Element::term(sym_x(0, 2));    // |-> GX(0)
  Element lhs = project_to_slice(src.bracket(a, b));
  Element rhs = dst.bracket(project_to_slice(a), project_to_slice(b));
  CHECK(lhs == rhs);
  CHECK(lhs == Element::term(sym_ghat_x(0), Scalar(5)));
}
