#include "doctest.h"
#include "virw/ring.hpp"
#include "virw/symbols.hpp"

using namespace virw;

TEST_CASE("canonical symbol order") {
  // Central < T < X < E < H < G < TX < TD < GX < GD < L < D.
  CHECK(symbol_less(sym_central(1), sym_t(-5)));
  CHECK(symbol_less(sym_t(2), sym_x(0, -3)));
  CHECK(symbol_less(sym_x(0, 5), sym_e(-5)));
  CHECK(symbol_less(sym_l(5), sym_d(-2)));
  // Generator id before index: X(0,*) < X(1,*).
  CHECK(symbol_less(sym_x(0, 7), sym_x(1, -4)));
  // Index ascending within a tag+gen.
  CHECK(symbol_less(sym_d(-2), sym_d(0)));
  CHECK(symbol_less(sym_d(0), sym_d(3)));
  CHECK(!symbol_less(sym_d(1), sym_d(1)));
}

TEST_CASE("symbol degree") {
  CHECK(symbol_degree(sym_d(5)) == 5);
  CHECK(symbol_degree(sym_t(-2)) == -2);
  CHECK(symbol_degree(sym_x(1, 3)) == 3);
  // Weight-zero generators have degree 0 regardless of their defining index.
  CHECK(symbol_degree(sym_tau_d(7)) == 0);
  CHECK(symbol_degree(sym_tau_x(0, 3)) == 0);
  CHECK(symbol_degree(sym_central(2)) == 0);
  CHECK(symbol_degree(sym_ghat_x(1)) == 0);
  CHECK(symbol_degree(sym_ghat_d()) == 0);
}

TEST_CASE("symbol text round-trips") {
  for (const char* s : {"D(3)", "D(-12)", "T(0)", "X(0,-2)", "X(3,14)", "E(7)", "H(-2)", "G(5)",
                        "L(0)", "TD(4)", "TX(1,-3)", "GX(1)", "GD", "C", "C2"}) {
    CHECK(symbol_to_string(parse_symbol(s)) == s);
  }
}

TEST_CASE("symbols with ring monomials") {
  RingSpec ring = RingSpec::grassmann(2);
  BasisSymbol s = with_ring(sym_d(3), ring.monomial_by_name("x1x2"));
  CHECK(symbol_to_string(s, &ring) == "D(3)@x1x2");
  CHECK(parse_symbol("D(3)@x1x2", &ring) == s);
  CHECK(parse_symbol(" X(0,1)@x2 ", &ring) == with_ring(sym_x(0, 1), ring.monomial_by_name("x2")));
  CHECK_THROWS_AS(parse_symbol("D(3)@zz", &ring), ParseError);
  CHECK_THROWS_AS(parse_symbol("D(3)@x1", nullptr), ParseError);
}

TEST_CASE("malformed symbols are rejected") {
  CHECK_THROWS_AS(parse_symbol("D("), ParseError);
  CHECK_THROWS_AS(parse_symbol("D(1"), ParseError);
  CHECK_THROWS_AS(parse_symbol("Q(1)"), ParseError);
  CHECK_THROWS_AS(parse_symbol("X(1)"), ParseError);
  CHECK_THROWS_AS(parse_symbol("D(1)x"), ParseError);
  CHECK_THROWS_AS(parse_symbol(""), ParseError);
}
