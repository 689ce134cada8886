#include "doctest.h"
#include "virw/cover.hpp"
#include "virw/random.hpp"

using namespace virw;

namespace {

// Jet module over the one-even-generator current algebra with trivial
// eigenvalue: D = (b), X = (f).  The current acts nontrivially when f != 0.
ModulePtr one_gen_jet(const Scalar& lambda, const Scalar& b, const Scalar& f) {
  FinDimModuleSpec line;
  line.dim = 1;
  line.d_matrix = {b};
  line.x_matrices = {{f}};
  return make_jet_module(Algebra::witt_current(gspec_one_dim(Scalar(0)), false), lambda, line);
}

ModulePtr heisenberg_jet(const Scalar& lambda) {
  FinDimModuleSpec vbar;
  vbar.dim = 3;
  vbar.d_matrix.assign(9, Scalar(0));
  vbar.d_matrix[0] = Scalar(1);
  vbar.d_matrix[4] = Scalar(1) - Scalar(Rational(1, 3));
  vbar.d_matrix[8] = Scalar(1);
  vbar.x_matrices.assign(3, std::vector<Scalar>(9, Scalar(0)));
  vbar.x_matrices[0][0 * 3 + 1] = Scalar(1);
  vbar.x_matrices[1][1 * 3 + 2] = Scalar(1);
  vbar.x_matrices[2][0 * 3 + 2] = Scalar(1);
  return make_jet_module(Algebra::witt_heisenberg(Scalar(Rational(1, 3))), lambda, vbar);
}

}  // namespace

TEST_CASE("cover generators evaluate through shifted symbols") {
  ModulePtr m = heisenberg_jet(Scalar(Rational(1, 5)));
  Cover cover(m);
  CHECK_FALSE(cover.uses_witt_symbols());
  CHECK(cover.generator_families() == 3);

  // mu(x_0(2), t^0 (x) e_1) at r = 3 is x_0(5) acting: t^5 (x) X_x e_1.
  CoverElement c = cover.mu(sym_x(0, 2), ModuleVector::unit(0, 1));
  CHECK(cover.evaluate(c, 3) == ModuleVector::unit(5, 0));
  CHECK(cover.evaluate(c, -2) == ModuleVector::unit(0, 0));
  CHECK(cover.project(c) == ModuleVector::unit(2, 0));

  // Zero vectors produce the zero functional.
  CHECK(cover.mu(sym_x(1, 0), ModuleVector()).is_zero());

  // Wrong generator kind is rejected.
  CHECK_THROWS_AS(cover.mu(sym_d(1), ModuleVector::unit(0, 0)), ModuleError);
}

TEST_CASE("witt-generated cover of a module with silent currents") {
  // All d_i annihilate the degree-0 line when alpha = beta = 0, so every
  // Witt-generated functional based there vanishes identically.
  ModulePtr m = make_density_module(Scalar(0), Scalar(0));
  Cover cover(m);
  CHECK(cover.uses_witt_symbols());
  for (long long k = -3; k <= 3; ++k)
    for (long long r = -4; r <= 4; ++r)
      CHECK(cover.evaluate(cover.mu(sym_d(k), ModuleVector::unit(0)), r).is_zero());
  CHECK_THROWS_AS(cover.mu(sym_x(0, 1), ModuleVector::unit(0)), ModuleError);

  // A current algebra whose slice matrices vanish also falls back to the
  // Witt part, and current symbols then do not generate.
  ModulePtr silent = one_gen_jet(Scalar(Rational(1, 3)), Scalar(2), Scalar(0));
  Cover fallback(silent);
  CHECK(fallback.uses_witt_symbols());
  CHECK_THROWS_AS(fallback.act_symbol(sym_x(0, 1), fallback.mu(sym_d(0), ModuleVector::unit(0))),
                  ModuleError);
}

TEST_CASE("cover action implements the twisted product rule") {
  const Scalar lambda(Rational(1, 5));
  ModulePtr m = heisenberg_jet(lambda);
  Cover cover(m);

  SUBCASE("weight measurement by d_0") {
    // d_0 mu(x_s(p-k), u) = (lambda + p) mu(x_s(p-k), u) for u of degree k.
    const int64_t p = 3, k = 1;
    CoverElement c = cover.mu(sym_x(1, p - k), ModuleVector::unit(k, 2));
    CoverElement got = cover.act_symbol(sym_d(0), c);
    CoverElement want = c;
    want *= lambda + Scalar(p);
    CHECK(got == want);
  }

  SUBCASE("Laurent factors shift the generator symbol") {
    CoverElement c = cover.mu(sym_x(0, 1), ModuleVector::unit(0, 1));
    CHECK(cover.act_symbol(sym_t(2), c) == cover.mu(sym_x(0, 3), ModuleVector::unit(0, 1)));
    // A-associativity of the cover action.
    CoverElement two = cover.act_symbol(sym_t(-1), cover.act_symbol(sym_t(4), c));
    CHECK(two == cover.act_symbol(sym_t(3), c));
  }

  SUBCASE("evaluation compatibility across the generator window") {
    std::vector<CoverElement> elems = {
        cover.mu(sym_x(0, 2), ModuleVector::unit(-1, 1)),
        cover.mu(sym_x(1, -3), ModuleVector::unit(2, 2)),
        cover.mu(sym_x(2, 0), ModuleVector::unit(0, 2)),
    };
    for (const auto& l : m->algebra().basis_window(2))
      for (const auto& c : elems) {
        CoverElement acted = cover.act_symbol(l, c);
        for (int64_t r = -4; r <= 4; ++r) {
          ModuleVector direct;
          if (l.tag == Tag::T) {
            direct = cover.evaluate(c, r + l.index);
          } else if (l.tag == Tag::D) {
            // (d_i phi)(t^r) = d_i(phi(t^r)) - r phi(t^{r+i}).
            direct = m->act_symbol(l, cover.evaluate(c, r));
            direct -= Scalar(r) * cover.evaluate(c, r + l.index);
          } else {
            direct = m->act_symbol(l, cover.evaluate(c, r));
          }
          CHECK(cover.evaluate(acted, r) == direct);
        }
      }
  }

  SUBCASE("projection intertwines the actions") {
    CoverElement c = cover.mu(sym_x(2, 2), ModuleVector::unit(1, 2));
    CHECK(cover.project(c) == m->act_symbol(sym_x(2, 2), ModuleVector::unit(1, 2)));
    for (const auto& l : m->algebra().basis_window(2)) {
      CHECK(cover.project(cover.act_symbol(l, c)) == m->act_symbol(l, cover.project(c)));
    }
  }
}

TEST_CASE("cover action signs in the super case") {
  // One even generator x with [x, y] = y and an odd y acting by zero.
  Algebra alg = Algebra::witt_current(gspec_super_hv(), false);
  FinDimModuleSpec line;
  line.dim = 1;
  line.d_matrix = {Scalar(Rational(2, 3))};
  line.x_matrices = {{Scalar(5)}, {Scalar(0)}};
  ModulePtr m = make_jet_module(alg, Scalar(Rational(1, 7)), line);
  Cover cover(m);
  CHECK_FALSE(cover.uses_witt_symbols());

  // Even on odd: x_0(i) mu(x_1(j), u) = mu([x,y](i+j), u) + mu(x_1(j), x_0(i) u).
  CoverElement c = cover.mu(sym_x(1, 2), ModuleVector::unit(0, 0));
  CoverElement got = cover.act_symbol(sym_x(0, 1), c);
  CoverElement want = cover.mu(sym_x(1, 3), ModuleVector::unit(0, 0));
  want += cover.mu(sym_x(1, 2), Scalar(5) * ModuleVector::unit(1, 0));
  CHECK(got == want);

  // Odd on odd: the sign flips, and with [y,y] = 0 and y acting by zero the
  // result is exactly zero (no cancellation slack to hide a sign error).
  CHECK(cover.act_symbol(sym_x(1, 1), c).is_zero());

  // Odd on even keeps the plus sign.
  CoverElement even = cover.mu(sym_x(0, 0), ModuleVector::unit(0, 0));
  CoverElement swung = cover.act_symbol(sym_x(1, 2), even);
  CoverElement expect = cover.mu(sym_x(1, 2), ModuleVector::unit(0, 0));
  expect *= Scalar(-1);  // [y, x] = -y
  CHECK(swung == expect);
}

TEST_CASE("generator reduction folds distant weights into the window") {
  const Scalar lambda(Rational(1, 5));
  ModulePtr m = heisenberg_jet(lambda);
  Cover cover(m);
  const int order = 2;

  SUBCASE("single step below the window") {
    // q = -2 with m = 2: mu(x_s(c), u) = 2 mu(x_s(c-1), d_1 v) - mu(x_s(c-2), d_2 v).
    ModuleVector u = ModuleVector::unit(-2, 2);
    ModuleVector v = (Scalar(1) / (lambda + Scalar(-2))) * u;
    CoverElement got = cover.reduce_generator(sym_x(1, 4), u, order);
    CoverElement want;
    want.add(sym_x(1, 3), m->act_symbol(sym_d(1), v), Scalar(2));
    want.add(sym_x(1, 2), m->act_symbol(sym_d(2), v), Scalar(-1));
    CHECK(got == want);
    for (const auto& [x, vec] : got.terms())
      for (int64_t d : vec.degrees()) CHECK(2 * std::llabs(d) <= order);
  }

  SUBCASE("in-window input is unchanged") {
    ModuleVector u = ModuleVector::unit(1, 0);
    CHECK(cover.reduce_generator(sym_x(0, 2), u, order) == cover.mu(sym_x(0, 2), u));
  }

  SUBCASE("evaluations agree on a long window") {
    Rng rng(0xC0DE);
    for (int t = 0; t < 10; ++t) {
      int64_t q = rng.uniform(2, 5) * (rng.coin() ? 1 : -1);
      int64_t idx = rng.uniform(-3, 3);
      int32_t s = static_cast<int32_t>(rng.uniform(0, 2));
      int c = static_cast<int>(rng.uniform(0, 2));
      ModuleVector u = Scalar(rng.nonzero_rational()) * ModuleVector::unit(q, c);
      CoverElement reduced = cover.reduce_generator(sym_x(s, idx), u, order);
      CoverElement original = cover.mu(sym_x(s, idx), u);
      for (int64_t r = -2 * order; r <= 2 * order; ++r)
        CHECK(cover.evaluate(reduced, r) == cover.evaluate(original, r));
      for (const auto& [x, vec] : reduced.terms())
        for (int64_t d : vec.degrees()) CHECK(2 * std::llabs(d) <= order);
    }
  }

  SUBCASE("vanishing pivot is reported") {
    ModulePtr shifted = heisenberg_jet(Scalar(-3));
    Cover bad(shifted);
    CHECK_THROWS_WITH_AS(bad.reduce_generator(sym_x(0, 0), ModuleVector::unit(3, 0), order),
                         doctest::Contains("normalize alpha"), ModuleError);
  }
}

TEST_CASE("cover weight-space ranks") {
  SUBCASE("one-dimensional slice collapses to a single functional") {
    ModulePtr m = one_gen_jet(Scalar(Rational(1, 3)), Scalar(Rational(2, 7)), Scalar(1));
    Cover cover(m);
    CoverRankReport rep = cover_weight_rank(cover, 2, 2, 4);
    CHECK(static_cast<int>(rep.generators.size()) == 3);  // (m+1) * dim * families
    CHECK(rep.rank == 1);
    CHECK(rep.stabilized);
  }

  SUBCASE("multi-component slice rank equals the span of the current images") {
    ModulePtr m = heisenberg_jet(Scalar(Rational(1, 5)));
    Cover cover(m);
    CoverRankReport rep = cover_weight_rank(cover, 0, 2, 4);
    CHECK(static_cast<int>(rep.generators.size()) == 27);
    CHECK(rep.rank == 2);  // images of the nilpotent matrices span e_0, e_1
    CHECK(rep.stabilized);
  }

  SUBCASE("silent module gives rank zero") {
    ModulePtr m = make_density_module(Scalar(0), Scalar(0));
    Cover cover(m);
    CoverRankReport rep = cover_weight_rank(cover, 3, 1, 3);
    CHECK(rep.rank == 0);
    CHECK(rep.stabilized);
  }

  SUBCASE("witt-generated rank over the plain series") {
    ModulePtr m = make_density_module(Scalar(Rational(1, 3)), Scalar(0));
    Cover cover(m);
    CHECK(cover.uses_witt_symbols());
    CoverRankReport rep = cover_weight_rank(cover, 1, 2, 4);
    CHECK(rep.rank == 1);
    CHECK(rep.stabilized);
  }

  SUBCASE("rank bound and monotonicity on random cases") {
    Rng rng(0xBEEF);
    for (int t = 0; t < 10; ++t) {
      ModulePtr m = t % 2 == 0 ? heisenberg_jet(Scalar(rng.rational()))
                               : one_gen_jet(Scalar(rng.rational()), Scalar(rng.rational()),
                                             Scalar(rng.nonzero_rational()));
      Cover cover(m);
      int64_t p = rng.uniform(-3, 3);
      int order = 2;
      CoverRankReport narrow = cover_weight_rank(cover, p, order, 2);
      CoverRankReport wide = cover_weight_rank(cover, p, order, 2 + order);
      int bound = (order + 1) * m->components() * cover.generator_families();
      CHECK(narrow.rank <= bound);
      CHECK(static_cast<int>(narrow.generators.size()) <= bound);
      // More evaluation points can only reveal independence.
      CHECK(narrow.rank <= wide.rank);
    }
  }
}

TEST_CASE("cover construction guards") {
  CHECK_THROWS_AS(Cover{nullptr}, ModuleError);
  FinDimModuleSpec ladder;
  ladder.dim = 2;
  ladder.d_matrix = {Scalar(0), Scalar(0), Scalar(0), Scalar(-1)};
  ladder.x_matrices = {{Scalar(0), Scalar(0), Scalar(1), Scalar(0)}};
  ModulePtr central = make_jet_module(Algebra::hv_beta(Scalar(-1)), Scalar(Rational(1, 2)), ladder);
  CHECK_THROWS_AS(Cover{central}, ModuleError);
}
