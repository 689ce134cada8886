#include "doctest.h"
#include "virw/enveloping.hpp"
#include "virw/modules.hpp"
#include "virw/random.hpp"

using namespace virw;

namespace {

// d_i on the degree-j line of the intermediate-series module.
Scalar series_coeff(const Scalar& alpha, const Scalar& beta, long long i, long long j) {
  return alpha + Scalar(j) + Scalar(i) * beta;
}

// Three-dimensional nilpotent slice datum for the Heisenberg-shaped current
// algebra: x -> u E12, y -> w E23, z -> uw E13, derivation diag(a, a-beta, a).
FinDimModuleSpec nilpotent_slice(const Scalar& a, const Scalar& beta, const Scalar& u, const Scalar& w) {
  FinDimModuleSpec spec;
  spec.dim = 3;
  spec.d_matrix.assign(9, Scalar(0));
  spec.d_matrix[0] = a;
  spec.d_matrix[4] = a - beta;
  spec.d_matrix[8] = a;
  spec.x_matrices.assign(3, std::vector<Scalar>(9, Scalar(0)));
  spec.x_matrices[0][0 * 3 + 1] = u;
  spec.x_matrices[1][1 * 3 + 2] = w;
  spec.x_matrices[2][0 * 3 + 2] = u * w;
  spec.label = "nilpotent test slice";
  return spec;
}

DifferentiatorSpec omega_spec(int m, long long k, long long s) {
  DifferentiatorSpec spec;
  spec.variant = DifferentiatorSpec::Variant::Omega;
  spec.m = m;
  spec.k = k;
  spec.s = s;
  return spec;
}

DifferentiatorSpec omega_bar_spec(int m, long long j, long long p, int32_t gen) {
  DifferentiatorSpec spec;
  spec.variant = DifferentiatorSpec::Variant::OmegaBar;
  spec.m = m;
  spec.j = j;
  spec.p = p;
  spec.gen = gen;
  return spec;
}

}  // namespace

TEST_CASE("module vectors behave like sparse weight-graded coordinates") {
  ModuleVector v = ModuleVector::unit(3, 0);
  v.add(3, 0, Scalar(Rational(1, 2)));
  v.add(-1, 2, Scalar(-2));
  CHECK(v.at(3, 0) == Scalar(Rational(3, 2)));
  CHECK(v.at(5, 0) == Scalar(0));
  CHECK(v.degrees() == std::vector<int64_t>{-1, 3});

  ModuleVector w = v;
  w -= v;
  CHECK(w.is_zero());
  w = Scalar(2) * v;
  CHECK(w.at(-1, 2) == Scalar(-4));

  CHECK(v.slice(-1).to_string() == "-2*v(-1,2)");
  CHECK(v.truncated(1).to_string() == "-2*v(-1,2)");
  CHECK(ModuleVector().to_string() == "0");

  // Cancellation never leaves explicit zeros behind.
  v.add(3, 0, Scalar(Rational(-3, 2)));
  CHECK(v.entries().size() == 1);
}

TEST_CASE("module vector text round-trips") {
  ModuleVector v;
  v.add(-2, 1, Scalar(Rational(5, 3)));
  v.add(0, 0, Scalar(Rational(1), Rational(-1, 2)));
  std::string text = v.to_string();
  CHECK(text == "5/3*v(-2,1) + (1-1/2*i)*v(0,0)");
  CHECK(ModuleVector::parse(text) == v);
  CHECK(ModuleVector::parse("0").is_zero());
  CHECK(ModuleVector::parse("v(4,0)") == ModuleVector::unit(4, 0));
  CHECK(ModuleVector::parse("  -3/7*v(-1,2)  ").at(-1, 2) == Scalar(Rational(-3, 7)));
  CHECK(ModuleVector::parse("v(1)") == ModuleVector::unit(1, 0));  // component defaults to 0
  CHECK_THROWS_AS(ModuleVector::parse("2*w(0,0)"), ParseError);
  CHECK_THROWS_AS(ModuleVector::parse("v(1"), ParseError);
  CHECK_THROWS_AS(ModuleVector::parse(""), ParseError);
}

TEST_CASE("slice data extracted from catalog algebras") {
  CHECK(slice_info(Algebra::witt()).gens == 0);
  CHECK(slice_info(Algebra::extended_witt()).gens == 0);

  SliceInfo hv = slice_info(Algebra::hv_beta(Scalar(-1)));
  CHECK(hv.gens == 1);
  CHECK(hv.beta[0] == Scalar(-1));
  CHECK(hv.cc(0, 0, 0).is_zero());

  SliceInfo shv = slice_info(Algebra::super_hv());
  CHECK(shv.gens == 2);
  CHECK(shv.parity == std::vector<int>{0, 1});
  CHECK(shv.beta[1] == Scalar(Rational(-1, 2)));
  CHECK(shv.cc(0, 1, 1) == Scalar(1));
  CHECK(shv.cc(1, 0, 1) == Scalar(-1));

  SliceInfo sl2 = slice_info(Algebra::witt_current(gspec_sl2(Scalar(Rational(1, 2))), false));
  CHECK(sl2.gens == 3);
  CHECK(sl2.cc(1, 0, 0) == Scalar(2));

  CHECK_THROWS_AS(slice_info(Algebra::tau(std::nullopt)), ModuleError);
  CHECK_THROWS_AS(slice_info(Algebra::map(Algebra::witt(), RingSpec::grassmann(1))), ModuleError);
}

TEST_CASE("slice datum validation rejects broken representations") {
  SliceInfo heis = slice_info(Algebra::witt_heisenberg(Scalar(Rational(1, 3))));

  FinDimModuleSpec good = nilpotent_slice(Scalar(1), Scalar(Rational(1, 3)), Scalar(1), Scalar(1));
  CHECK_NOTHROW(validate_findim(good, heis));

  SUBCASE("shape errors") {
    FinDimModuleSpec bad = good;
    bad.d_matrix.pop_back();
    CHECK_THROWS_AS(validate_findim(bad, heis), ModuleError);
    bad = good;
    bad.x_matrices.pop_back();
    CHECK_THROWS_AS(validate_findim(bad, heis), ModuleError);
    bad = good;
    bad.dim = 0;
    CHECK_THROWS_AS(validate_findim(bad, heis), ModuleError);
    bad = good;
    bad.parity = {0, 1};
    CHECK_THROWS_AS(validate_findim(bad, heis), ModuleError);
  }

  SUBCASE("eigenvalue relation") {
    FinDimModuleSpec bad = good;
    bad.d_matrix[4] = Scalar(5);  // breaks [D, X_x] = beta X_x
    CHECK_THROWS_AS(validate_findim(bad, heis), ModuleError);
  }

  SUBCASE("closure onto structure constants") {
    // z acting nonzero while x and y act by zero cannot close: [X_x, X_y] = 0 != X_z.
    FinDimModuleSpec bad = good;
    bad.x_matrices[0].assign(9, Scalar(0));
    bad.x_matrices[1].assign(9, Scalar(0));
    CHECK_THROWS_AS(validate_findim(bad, heis), ModuleError);
  }

  SUBCASE("odd generators must act by zero") {
    SliceInfo shv = slice_info(Algebra::super_hv());
    FinDimModuleSpec odd;
    odd.dim = 1;
    odd.d_matrix = {Scalar(2)};
    odd.x_matrices = {{Scalar(3)}, {Scalar(1)}};
    CHECK_THROWS_AS(validate_findim(odd, shv), ModuleError);
    odd.x_matrices[1] = {Scalar(0)};
    CHECK_NOTHROW(validate_findim(odd, shv));
  }

  SUBCASE("parity grading of even generators") {
    SliceInfo one = slice_info(Algebra::witt_current(gspec_one_dim(Scalar(0)), false));
    FinDimModuleSpec graded;
    graded.dim = 2;
    graded.parity = {0, 1};
    graded.d_matrix = {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
    graded.x_matrices = {{Scalar(0), Scalar(1), Scalar(0), Scalar(0)}};  // even generator mixing parities
    CHECK_THROWS_AS(validate_findim(graded, one), ModuleError);
  }
}

TEST_CASE("intermediate-series actions match the closed formula") {
  const Scalar alpha(0), beta(2);
  ModulePtr v = make_density_module(alpha, beta);
  CHECK(v->components() == 1);
  CHECK(v->a_module());

  // d_1 e_0 = (0 + 0 + 1*2) e_1.
  CHECK(act(*v, Element::term(sym_d(1), Scalar(1)), ModuleVector::unit(0)) ==
        Scalar(2) * ModuleVector::unit(1));

  // d_0 measures the weight on every degree line.
  for (long long j = -3; j <= 3; ++j) {
    ModuleVector got = v->act_symbol(sym_d(0), ModuleVector::unit(j));
    CHECK(got == v->weight_of(j) * ModuleVector::unit(j));
  }

  // Random sweep against alpha + j + i*beta.
  Rng rng(0x5A11CE);
  for (int t = 0; t < 25; ++t) {
    Scalar a(rng.rational()), b(rng.rational());
    ModulePtr m = make_density_module(a, b, true);
    long long i = rng.uniform(-6, 6), j = rng.uniform(-6, 6);
    CHECK(m->act_symbol(sym_d(i), ModuleVector::unit(j)) ==
          series_coeff(a, b, i, j) * ModuleVector::unit(i + j));
    // The Laurent line shifts degrees with coefficient 1.
    CHECK(m->act_symbol(sym_t(i), ModuleVector::unit(j)) == ModuleVector::unit(i + j));
  }
}

TEST_CASE("jet modules act through the degree-zero slice") {
  const Scalar lambda(Rational(1, 5));
  const Scalar b(Rational(1, 3));

  SUBCASE("one-dimensional slice") {
    // d_2 (t^3 (x) u) = (lambda + 3 + 2b) t^5 (x) u.
    FinDimModuleSpec line;
    line.dim = 1;
    line.d_matrix = {b};
    ModulePtr m = make_jet_module(Algebra::witt(), lambda, line);
    CHECK(m->act_symbol(sym_d(2), ModuleVector::unit(3)) ==
          (lambda + Scalar(3) + Scalar(2) * b) * ModuleVector::unit(5));
    CHECK(m->weight_of(3) == lambda + Scalar(3));
  }

  SUBCASE("current symbols apply the generator matrix and shift") {
    FinDimModuleSpec vbar = nilpotent_slice(Scalar(1), Scalar(Rational(1, 3)), Scalar(1), Scalar(1));
    ModulePtr m = make_jet_module(Algebra::witt_heisenberg(Scalar(Rational(1, 3))), lambda, vbar);
    CHECK(m->components() == 3);
    // x_0(4) (t^1 (x) e_1) = t^5 (x) X_x e_1 = t^5 (x) e_0.
    CHECK(m->act_symbol(sym_x(0, 4), ModuleVector::unit(1, 1)) == ModuleVector::unit(5, 0));
    // x_2(-2) reaches e_0 from e_2 through the product matrix.
    CHECK(m->act_symbol(sym_x(2, -2), ModuleVector::unit(0, 2)) == ModuleVector::unit(-2, 0));
    // Witt symbols mix the slice through (lambda + j) + i D.
    ModuleVector got = m->act_symbol(sym_d(3), ModuleVector::unit(2, 1));
    ModuleVector want;
    want.add(5, 1, lambda + Scalar(2) + Scalar(3) * (Scalar(1) - Scalar(Rational(1, 3))));
    CHECK(got == want);
  }

  SUBCASE("centrals act by zero") {
    SliceInfo hv = slice_info(Algebra::hv_beta(Scalar(-1)));
    FinDimModuleSpec ladder;
    ladder.dim = 2;
    ladder.d_matrix = {Scalar(2), Scalar(0), Scalar(0), Scalar(1)};
    ladder.x_matrices = {{Scalar(0), Scalar(0), Scalar(1), Scalar(0)}};
    validate_findim(ladder, hv);
    ModulePtr m = make_jet_module(Algebra::hv_beta(Scalar(-1)), lambda, ladder);
    for (int32_t id : Algebra::hv_beta(Scalar(-1)).centrals())
      CHECK(m->act_symbol(sym_central(id), ModuleVector::unit(0, 0)).is_zero());
    CHECK(m->act_symbol(sym_e(2), ModuleVector::unit(1, 0)) == ModuleVector::unit(3, 1));
  }

  SUBCASE("foreign symbols are rejected") {
    ModulePtr m = make_density_module(Scalar(0), Scalar(1));
    CHECK_THROWS_AS(m->act_symbol(sym_x(0, 1), ModuleVector::unit(0)), ModuleError);
    CHECK_THROWS_AS(m->act_symbol(sym_tau_d(1), ModuleVector::unit(0)), ModuleError);
  }

  SUBCASE("slice data are validated at construction") {
    FinDimModuleSpec bad;
    bad.dim = 1;
    bad.d_matrix = {Scalar(1)};
    bad.x_matrices = {{Scalar(1)}};  // [D, X] = 0 but the eigenvalue is -1
    CHECK_THROWS_AS(make_jet_module(Algebra::hv_beta(Scalar(-1)), lambda, bad), ModuleError);
  }
}

TEST_CASE("alternating-binomial operators act with the expected orders") {
  const Algebra witt = Algebra::witt();
  const EnvelopingEngine eng(witt, NfMode::U);

  SUBCASE("first-order instance, exact value") {
    // d_0 d_0 e_0 - d_{-1} d_1 e_0 on the series with alpha = 1/2, beta = 2:
    // p(0) - p(1) = 1/4 + 5/4.
    ModulePtr v = make_density_module(Scalar(Rational(1, 2)), Scalar(2));
    UElement om = differentiator(eng, omega_spec(1, 0, 0));
    CHECK(act_U(*v, om, ModuleVector::unit(0)) ==
          Scalar(Rational(3, 2)) * ModuleVector::unit(0));
  }

  SUBCASE("second-order instances act by the scalar 2 beta (1 - beta)") {
    Rng rng(0xD1FF);
    for (int t = 0; t < 20; ++t) {
      Scalar alpha(rng.rational()), beta(rng.rational());
      ModulePtr v = make_density_module(alpha, beta);
      long long k = rng.uniform(-4, 4), s = rng.uniform(-4, 4), j = rng.uniform(-4, 4);
      RawExpr raw = differentiator_terms(witt, omega_spec(2, k, s));
      ModuleVector got = act_raw(*v, raw, ModuleVector::unit(j));
      Scalar scalar = Scalar(2) * beta * (Scalar(1) - beta);
      CHECK(got == scalar * ModuleVector::unit(j + k + s));
      // Acting with the normal form gives the same answer.
      CHECK(act_U(*v, eng.normal_form(raw), ModuleVector::unit(j)) == got);
    }
  }

  SUBCASE("third-order instances annihilate the series") {
    Rng rng(0xD1FF + 1);
    for (int t = 0; t < 15; ++t) {
      ModulePtr v = make_density_module(Scalar(rng.rational()), Scalar(rng.rational()));
      long long k = rng.uniform(-4, 4), s = rng.uniform(-4, 4), j = rng.uniform(-4, 4);
      CHECK(act_raw(*v, differentiator_terms(witt, omega_spec(3, k, s)), ModuleVector::unit(j)).is_zero());
    }
  }

  SUBCASE("second-order mixed instances annihilate jet modules") {
    Algebra alg = Algebra::witt_heisenberg(Scalar(Rational(1, 3)));
    FinDimModuleSpec vbar = nilpotent_slice(Scalar(1), Scalar(Rational(1, 3)), Scalar(1), Scalar(1));
    ModulePtr m = make_jet_module(alg, Scalar(Rational(1, 5)), vbar);
    Rng rng(0xD1FF + 2);
    for (int t = 0; t < 15; ++t) {
      long long j = rng.uniform(-4, 4), p = rng.uniform(-4, 4);
      int32_t gen = static_cast<int32_t>(rng.uniform(0, 2));
      for (int64_t deg : {-1, 0, 1})
        for (int c = 0; c < 3; ++c)
          CHECK(act_raw(*m, differentiator_terms(alg, omega_bar_spec(2, j, p, gen)),
                        ModuleVector::unit(deg, c))
                    .is_zero());
    }
  }
}

TEST_CASE("minimal annihilating orders") {
  // beta = 2: the second-order scalar 2 beta (1 - beta) = -4 keeps order 2 alive.
  ModulePtr v2 = make_density_module(Scalar(Rational(1, 3)), Scalar(2));
  CHECK(min_annihilating_order(*v2, DifferentiatorSpec::Variant::Omega, 4, 3) == 3);

  // beta = 0 and beta = 1 collapse at order 2.
  ModulePtr v0 = make_density_module(Scalar(Rational(1, 3)), Scalar(0));
  CHECK(min_annihilating_order(*v0, DifferentiatorSpec::Variant::Omega, 4, 3) == 2);
  ModulePtr v1 = make_density_module(Scalar(Rational(1, 4)), Scalar(1));
  CHECK(min_annihilating_order(*v1, DifferentiatorSpec::Variant::Omega, 4, 3) == 2);

  // Mixed operators on a jet module stop at order 2: the coefficient is
  // affine in the summation index.
  Algebra alg = Algebra::witt_heisenberg(Scalar(Rational(1, 3)));
  FinDimModuleSpec vbar = nilpotent_slice(Scalar(1), Scalar(Rational(1, 3)), Scalar(1), Scalar(1));
  ModulePtr jet = make_jet_module(alg, Scalar(Rational(1, 5)), vbar);
  CHECK(min_annihilating_order(*jet, DifferentiatorSpec::Variant::OmegaBar, 4, 3) == 2);

  // The mixed variant needs a current part.
  CHECK_THROWS_AS(min_annihilating_order(*v0, DifferentiatorSpec::Variant::OmegaBar, 2, 2),
                  ModuleError);
}

TEST_CASE("cyclic span ranks probe simplicity") {
  SUBCASE("generic parameters reach every weight") {
    ModulePtr m = make_density_module(Scalar(Rational(1, 3)), Scalar(Rational(1, 2)));
    auto ranks = cyclic_span_rank(*m, ModuleVector::unit(0), 3);
    for (int64_t d = -3; d <= 3; ++d) CHECK(ranks.at(d) == 1);
  }

  SUBCASE("trivial slice with zero eigenvalue is stuck at its starting weight") {
    ModulePtr m = make_density_module(Scalar(0), Scalar(0));
    auto ranks = cyclic_span_rank(*m, ModuleVector::unit(0), 3);
    for (int64_t d = -3; d <= 3; ++d) CHECK(ranks.at(d) == (d == 0 ? 1 : 0));
  }

  SUBCASE("integer weight with eigenvalue 1 cannot reach weight zero") {
    ModulePtr m = make_density_module(Scalar(0), Scalar(1));
    auto ranks = cyclic_span_rank(*m, ModuleVector::unit(1), 3);
    for (int64_t d = -3; d <= 3; ++d) CHECK(ranks.at(d) == (d == 0 ? 0 : 1));
  }

  SUBCASE("multi-component slice fills every window weight from the top vector") {
    Algebra alg = Algebra::witt_heisenberg(Scalar(Rational(1, 3)));
    FinDimModuleSpec vbar = nilpotent_slice(Scalar(1), Scalar(Rational(1, 3)), Scalar(1), Scalar(1));
    ModulePtr m = make_jet_module(alg, Scalar(Rational(1, 5)), vbar);
    auto ranks = cyclic_span_rank(*m, ModuleVector::unit(0, 2), 3);
    for (int64_t d = -3; d <= 3; ++d) CHECK(ranks.at(d) == 3);
  }

  SUBCASE("a zero summand leaves the ranks unchanged") {
    FinDimModuleSpec sum;
    sum.dim = 2;
    sum.d_matrix = {Scalar(Rational(1, 2)), Scalar(0), Scalar(0), Scalar(7)};
    ModulePtr m = make_jet_module(Algebra::witt(), Scalar(Rational(1, 3)), sum);
    auto ranks = cyclic_span_rank(*m, ModuleVector::unit(0, 0), 3);
    for (int64_t d = -3; d <= 3; ++d) CHECK(ranks.at(d) == 1);
  }

  SUBCASE("the zero vector spans nothing") {
    ModulePtr m = make_density_module(Scalar(1), Scalar(1));
    auto ranks = cyclic_span_rank(*m, ModuleVector(), 2);
    for (int64_t d = -2; d <= 2; ++d) CHECK(ranks.at(d) == 0);
  }
}

TEST_CASE("exceptional module with a constant current action") {
  const Scalar lambda(Rational(1, 3)), b(Rational(2, 5)), F(4);
  ModulePtr m = make_beta1_exceptional(lambda, b, F);
  CHECK_FALSE(m->a_module());
  CHECK(m->components() == 1);

  CHECK(m->act_symbol(sym_x(0, 0), ModuleVector::unit(5)) == F * ModuleVector::unit(5));
  CHECK(m->act_symbol(sym_x(0, 3), ModuleVector::unit(5)).is_zero());
  CHECK(m->act_symbol(sym_d(2), ModuleVector::unit(5)) ==
        (lambda + Scalar(5) + Scalar(2) * b) * ModuleVector::unit(7));

  // The Laurent shift is not part of this module.
  CHECK_THROWS_AS(m->act_symbol(sym_t(1), ModuleVector::unit(0)), ModuleError);
  CHECK_THROWS_AS(make_beta1_exceptional(lambda, b, Scalar(0)), ModuleError);

  ModuleAxiomReport rep = check_module_axioms(*m, 4);
  INFO(rep.first_failure);
  CHECK(rep.pass);
}

TEST_CASE("evaluation modules scale the base action by the character") {
  SUBCASE("odd coefficients annihilate") {
    RingSpec ring = RingSpec::grassmann(2);
    Algebra map_alg = Algebra::map(Algebra::witt(), ring);
    ModulePtr base = make_density_module(Scalar(Rational(1, 4)), Scalar(Rational(2, 3)));
    ModulePtr m = make_evaluation_module(map_alg, base, PsiSpec::make(ring, {}));

    uint32_t xi1 = ring.monomial_by_name("x1");
    CHECK(m->act_symbol(with_ring(sym_d(2), xi1), ModuleVector::unit(0)).is_zero());
    CHECK(m->act_symbol(sym_d(2), ModuleVector::unit(0)) ==
          base->act_symbol(sym_d(2), ModuleVector::unit(0)));

    ModuleAxiomReport rep = check_module_axioms(*m, 2);
    INFO(rep.first_failure);
    CHECK(rep.pass);
  }

  SUBCASE("nilpotent coefficients annihilate") {
    RingSpec ring = RingSpec::trunc_poly(2);
    Algebra base_alg = Algebra::witt_heisenberg(Scalar(Rational(1, 3)));
    Algebra map_alg = Algebra::map(base_alg, ring);
    FinDimModuleSpec vbar = nilpotent_slice(Scalar(1), Scalar(Rational(1, 3)), Scalar(1), Scalar(1));
    ModulePtr base = make_jet_module(base_alg, Scalar(Rational(1, 5)), vbar);
    ModulePtr m = make_evaluation_module(map_alg, base, PsiSpec::make(ring, {}));

    uint32_t eps = ring.monomial_by_name("e");
    CHECK(m->act_symbol(with_ring(sym_x(0, 2), eps), ModuleVector::unit(0, 1)).is_zero());
    CHECK(m->act_symbol(sym_x(0, 2), ModuleVector::unit(0, 1)) ==
          base->act_symbol(sym_x(0, 2), ModuleVector::unit(0, 1)));

    ModuleAxiomReport rep = check_module_axioms(*m, 1);
    INFO(rep.first_failure);
    CHECK(rep.pass);
  }

  SUBCASE("construction guards") {
    RingSpec ring = RingSpec::grassmann(1);
    Algebra map_alg = Algebra::map(Algebra::witt(), ring);
    ModulePtr base = make_density_module(Scalar(0), Scalar(1));
    CHECK_THROWS_AS(make_evaluation_module(Algebra::witt(), base, PsiSpec::make(ring, {})),
                    ModuleError);
    CHECK_THROWS_AS(
        make_evaluation_module(map_alg, base, PsiSpec::make(RingSpec::trunc_poly(3), {})),
        ModuleError);
    Rng rng(1);
    ModulePtr wrong_base =
        make_jet_module(Algebra::hv_beta(Scalar(0)), Scalar(0), random_findim(Algebra::hv_beta(Scalar(0)), rng, 2));
    CHECK_THROWS_AS(make_evaluation_module(map_alg, wrong_base, PsiSpec::make(ring, {})), ModuleError);
  }
}

TEST_CASE("module axiom sweeps hold for the constructed catalog") {
  const Scalar lambda(Rational(1, 5));

  auto expect_pass = [](const WeightModule& m, int window) {
    ModuleAxiomReport rep = check_module_axioms(m, window);
    INFO(m.describe() << ": " << rep.first_failure);
    CHECK(rep.pass);
    CHECK(rep.checks > 0);
  };

  expect_pass(*make_density_module(Scalar(Rational(2, 7)), Scalar(Rational(-1, 2))), 4);
  expect_pass(*make_density_module(Scalar(Rational(1, 2)), Scalar(1), true), 3);

  Algebra heis = Algebra::witt_heisenberg(Scalar(Rational(1, 3)));
  expect_pass(*make_jet_module(heis, lambda,
                               nilpotent_slice(Scalar(1), Scalar(Rational(1, 3)), Scalar(1), Scalar(1))),
              3);

  // Extended current algebra: the Laurent part participates in the sweep.
  Algebra heis_ext = Algebra::witt_current(gspec_heisenberg(Scalar(Rational(1, 3))), true);
  expect_pass(*make_jet_module(heis_ext, lambda,
                               nilpotent_slice(Scalar(2), Scalar(Rational(1, 3)), Scalar(1), Scalar(1))),
              2);

  // Semisimple slice with its defining representation.
  Algebra sl2 = Algebra::witt_current(gspec_sl2(Scalar(Rational(1, 2))), false);
  Rng rng(0xA110);
  expect_pass(*make_jet_module(sl2, lambda, random_findim(sl2, rng, 3)), 3);

  // Affinization: centrals act as zero and the sweep still closes.
  Algebra affine = Algebra::affine_virasoro(gspec_sl2(Scalar(0)));
  expect_pass(*make_jet_module(affine, lambda, random_findim(affine, rng, 3)), 2);

  // Super catalog: odd currents act by zero but the super sign is exercised.
  Algebra shv = Algebra::super_hv();
  FinDimModuleSpec sline;
  sline.dim = 1;
  sline.d_matrix = {Scalar(Rational(3, 4))};
  sline.x_matrices = {{Scalar(5)}, {Scalar(0)}};
  expect_pass(*make_jet_module(shv, lambda, sline), 3);

  expect_pass(*make_beta1_exceptional(lambda, Scalar(Rational(2, 5)), Scalar(1)), 3);
}

TEST_CASE("random slice data validate across the catalog") {
  std::vector<Algebra> algebras = {
      Algebra::witt(),
      Algebra::extended_witt(),
      Algebra::hv_beta(Scalar(0)),
      Algebra::hv_beta(Scalar(-1)),
      Algebra::hv_beta(Scalar(Rational(3, 2))),
      Algebra::witt_heisenberg(Scalar(Rational(1, 4))),
      Algebra::witt_current(gspec_one_dim(Scalar(2)), false),
      Algebra::witt_current(gspec_sl2(Scalar(Rational(1, 2))), true),
      Algebra::affine_virasoro(gspec_sl2(Scalar(0))),
      Algebra::super_hv(),
      Algebra::witt_current(gspec_super_hv(), false),
  };
  for (const auto& alg : algebras) {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
      Rng rng(seed);
      FinDimModuleSpec spec = random_findim(alg, rng, 3);
      CHECK_NOTHROW(validate_findim(spec, slice_info(alg)));
      CHECK(spec.dim >= 1);
      CHECK(spec.dim <= 3);
    }
  }

  // The random data feed straight into working modules.
  Rng rng(0xFEED);
  for (const auto& alg : {algebras[3], algebras[5], algebras[10]}) {
    ModulePtr m = make_jet_module(alg, Scalar(Rational(1, 7)), random_findim(alg, rng, 3));
    ModuleAxiomReport rep = check_module_axioms(*m, 2);
    INFO(m->describe() << ": " << rep.first_failure);
    CHECK(rep.pass);
  }
}
