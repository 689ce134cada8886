#include "doctest.h"
#include "virw/gspec.hpp"
#include "virw/ring.hpp"

using namespace virw;

TEST_CASE("preset finite algebra data validate") {
  gspec_one_dim(Scalar(2)).validate();
  gspec_heisenberg(Rational(1, 3)).validate();
  gspec_sl2(Scalar(0)).validate();
  gspec_sl2(Scalar(1)).validate();
  gspec_super_hv().validate();
}

TEST_CASE("corrupted structure constants are caught") {
  // Scaling one bracket of sl2 keeps antisymmetry but breaks Jacobi.
  GSpec bad = gspec_sl2(Scalar(0));
  bad.c[(1 * 3 + 0) * 3 + 0] = Scalar(3);
  bad.c[(0 * 3 + 1) * 3 + 0] = Scalar(-3);
  CHECK_THROWS_AS(bad.validate(), CatalogError);

  // Breaking one direction only violates antisymmetry.
  GSpec asym = gspec_sl2(Scalar(0));
  asym.c[(0 * 3 + 1) * 3 + 0] = Scalar(5);
  CHECK_THROWS_AS(asym.validate(), CatalogError);
}

TEST_CASE("derivation property is checked") {
  GSpec g = gspec_heisenberg(Scalar(1));
  g.beta[2] = Scalar(1);  // [x,y] = z now violates beta_x + beta_y = beta_z
  CHECK_THROWS_AS(g.validate(), CatalogError);
}

TEST_CASE("form validation") {
  GSpec g = gspec_sl2(Scalar(0));
  g.validate();
  (*g.form)[2 * 3 + 0] = Scalar(2);  // (f,e) != (e,f)
  CHECK_THROWS_AS(g.validate(), CatalogError);

  GSpec h = gspec_sl2(Scalar(0));
  (*h.form)[1 * 3 + 1] = Scalar(3);  // breaks invariance ([e,f],h) = (e,[f,h])
  CHECK_THROWS_AS(h.validate(), CatalogError);
}
