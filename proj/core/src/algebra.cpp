#include "virw/algebra.hpp"

#include <algorithm>

namespace virw {

struct AlgebraData {
  Family family = Family::Witt;
  std::optional<GSpec> g;
  Scalar beta;  // HVBeta parameter
  std::optional<Algebra> base;
  RingSpec ring = RingSpec::trivial();
  std::string label;
};

std::string family_name(Family f) {
  switch (f) {
    case Family::Witt: return "witt";
    case Family::ExtendedWitt: return "extended_witt";
    case Family::WittCurrent: return "witt_current";
    case Family::ExtendedWittCurrent: return "extended_witt_current";
    case Family::HVBeta: return "hv_beta";
    case Family::AffineVirasoro: return "affine_virasoro";
    case Family::SuperHV: return "super_hv";
    case Family::DerExt: return "der_ext";
    case Family::Tau: return "tau";
    case Family::Map: return "map";
  }
  return "?";
}

Family Algebra::family() const { return d_->family; }
const std::string& Algebra::label() const { return d_->label; }
const GSpec* Algebra::g() const { return d_->g ? &*d_->g : nullptr; }
const RingSpec& Algebra::ring() const { return d_->ring; }
const Algebra* Algebra::base() const { return d_->base ? &*d_->base : nullptr; }
const Scalar& Algebra::beta_param() const { return d_->beta; }

bool Algebra::has_laurent_part() const {
  switch (d_->family) {
    case Family::ExtendedWitt:
    case Family::ExtendedWittCurrent:
    case Family::Tau:
      return true;
    case Family::Map:
      return d_->base->has_laurent_part();
    default:
      return false;
  }
}

std::vector<int32_t> Algebra::centrals() const {
  switch (d_->family) {
    case Family::HVBeta: {
      if (d_->beta == Scalar(0)) return {1, 2, 4};
      if (d_->beta == Scalar(-1)) return {1, 2};
      if (d_->beta == Scalar(1)) return {1, 2, 3};
      return {1};
    }
    case Family::AffineVirasoro:
    case Family::SuperHV:
      return {0};
    case Family::Map:
      return d_->base->centrals();
    default:
      return {};
  }
}

int Algebra::current_dim() const {
  switch (d_->family) {
    case Family::WittCurrent:
    case Family::ExtendedWittCurrent:
    case Family::AffineVirasoro:
    case Family::DerExt:
    case Family::Tau:
      return d_->g ? d_->g->dim : 0;
    case Family::HVBeta:
      return 1;
    case Family::SuperHV:
      return 2;
    case Family::Map:
      return d_->base->current_dim();
    default:
      return 0;
  }
}

BasisSymbol Algebra::current_symbol(int32_t s, int64_t k) const {
  if (s < 0 || s >= current_dim())
    throw CatalogError(describe() + ": no current generator " + std::to_string(s));
  switch (d_->family) {
    case Family::WittCurrent:
    case Family::ExtendedWittCurrent:
    case Family::AffineVirasoro:
      return sym_x(s, k);
    case Family::HVBeta:
      return sym_e(k);
    case Family::SuperHV:
      return s == 0 ? sym_h(k) : sym_g(k);
    case Family::Tau:
      return sym_tau_x(s, k);
    case Family::Map:
      return d_->base->current_symbol(s, k);
    default:
      throw CatalogError(describe() + ": family has no current part");
  }
}

BasisSymbol Algebra::witt_symbol(int64_t i) const {
  if (d_->family == Family::SuperHV) return sym_l(i);
  if (d_->family == Family::Map) return d_->base->witt_symbol(i);
  return sym_d(i);
}

Scalar Algebra::beta_of(int32_t s) const {
  switch (d_->family) {
    case Family::HVBeta:
      return d_->beta;
    case Family::SuperHV:
      return s == 0 ? Scalar(0) : Scalar(Rational(-1, 2));
    case Family::Map:
      return d_->base->beta_of(s);
    default:
      if (d_->g && s >= 0 && s < d_->g->dim) return d_->g->beta[s];
      throw CatalogError(describe() + ": no beta for generator " + std::to_string(s));
  }
}

bool Algebra::owns(const BasisSymbol& sym) const {
  if (d_->family != Family::Map && sym.ring != 0) return false;
  auto gen_ok = [&](int32_t bound) { return sym.gen >= 0 && sym.gen < bound; };
  switch (d_->family) {
    case Family::Witt:
      return sym.tag == Tag::D && sym.gen == 0;
    case Family::ExtendedWitt:
      return (sym.tag == Tag::D || sym.tag == Tag::T) && sym.gen == 0;
    case Family::WittCurrent:
      return (sym.tag == Tag::D && sym.gen == 0) || (sym.tag == Tag::X && gen_ok(d_->g->dim));
    case Family::ExtendedWittCurrent:
      return ((sym.tag == Tag::D || sym.tag == Tag::T) && sym.gen == 0) ||
             (sym.tag == Tag::X && gen_ok(d_->g->dim));
    case Family::HVBeta: {
      if ((sym.tag == Tag::D || sym.tag == Tag::E) && sym.gen == 0) return true;
      if (sym.tag != Tag::Central) return false;
      auto ids = centrals();
      return std::find(ids.begin(), ids.end(), sym.gen) != ids.end();
    }
    case Family::AffineVirasoro:
      return (sym.tag == Tag::D && sym.gen == 0) || (sym.tag == Tag::X && gen_ok(d_->g->dim)) ||
             (sym.tag == Tag::Central && sym.gen == 0);
    case Family::SuperHV:
      return ((sym.tag == Tag::L || sym.tag == Tag::H || sym.tag == Tag::G) && sym.gen == 0) ||
             (sym.tag == Tag::Central && sym.gen == 0);
    case Family::DerExt:
      return sym.tag == Tag::GD || (sym.tag == Tag::GX && gen_ok(d_->g->dim));
    case Family::Tau:
      return (sym.tag == Tag::TD && sym.index != 0 && sym.gen == 0) ||
             (sym.tag == Tag::TX && d_->g && gen_ok(d_->g->dim)) ||
             (sym.tag == Tag::T && sym.gen == 0) ||
             (sym.tag == Tag::D && sym.gen == 0 && sym.index == 0);
    case Family::Map: {
      if (sym.ring >= d_->ring.size()) return false;
      BasisSymbol stripped = sym;
      stripped.ring = 0;
      return d_->base->owns(stripped);
    }
  }
  return false;
}

int Algebra::parity(const BasisSymbol& sym) const {
  if (!owns(sym))
    throw CatalogError(describe() + " does not own symbol " + symbol_to_string(sym, &d_->ring));
  if (d_->family == Family::Map) {
    BasisSymbol stripped = sym;
    stripped.ring = 0;
    return d_->base->parity(stripped) ^ d_->ring.parity(sym.ring);
  }
  switch (sym.tag) {
    case Tag::G:
      return 1;
    case Tag::X:
    case Tag::TX:
    case Tag::GX:
      return d_->g ? d_->g->parity[sym.gen] : 0;
    default:
      return 0;
  }
}

namespace {

// (i^3 - i)/12, the Virasoro-type cocycle value.
Scalar vir_cocycle(int64_t i) {
  BigInt n(i);
  return Scalar(Rational(n * n * n - n, BigInt(12)));
}

}  // namespace

Element Algebra::bracket_basis(const BasisSymbol& a, const BasisSymbol& b) const {
  if (!owns(a))
    throw CatalogError(describe() + " does not own symbol " + symbol_to_string(a, &d_->ring));
  if (!owns(b))
    throw CatalogError(describe() + " does not own symbol " + symbol_to_string(b, &d_->ring));

  Element out;
  const Family fam = d_->family;

  if (fam == Family::Map) {
    BasisSymbol sa = a, sb = b;
    sa.ring = 0;
    sb.ring = 0;
    RingSpec::ProductTerm rt = d_->ring.multiply(a.ring, b.ring);
    if (rt.coeff.is_zero()) return out;
    Scalar factor = rt.coeff;
    // [y1 (x) r1, y2 (x) r2] = (-1)^{|y2||r1|} [y1, y2] (x) r1 r2.
    if (d_->base->parity(sb) && d_->ring.parity(a.ring)) factor = -factor;
    Element inner = d_->base->bracket_basis(sa, sb);
    for (const auto& [sym, c] : inner.terms()) out.add_term(with_ring(sym, rt.index), factor * c);
    return out;
  }

  if (a.tag == Tag::Central || b.tag == Tag::Central) return out;

  const int64_t i = a.index, j = b.index;

  switch (fam) {
    case Family::Witt:
      out.add_term(sym_d(i + j), Scalar(j - i));
      return out;

    case Family::ExtendedWitt:
    case Family::ExtendedWittCurrent:
    case Family::WittCurrent: {
      if (a.tag == Tag::D && b.tag == Tag::D) {
        out.add_term(sym_d(i + j), Scalar(j - i));
      } else if (a.tag == Tag::D && b.tag == Tag::T) {
        out.add_term(sym_t(i + j), Scalar(j));
      } else if (a.tag == Tag::T && b.tag == Tag::D) {
        out.add_term(sym_t(i + j), Scalar(-i));
      } else if (a.tag == Tag::D && b.tag == Tag::X) {
        out.add_term(sym_x(b.gen, i + j), Scalar(j) + Scalar(i) * d_->g->beta[b.gen]);
      } else if (a.tag == Tag::X && b.tag == Tag::D) {
        out.add_term(sym_x(a.gen, i + j), -(Scalar(i) + Scalar(j) * d_->g->beta[a.gen]));
      } else if (a.tag == Tag::X && b.tag == Tag::X) {
        for (int q = 0; q < d_->g->dim; ++q) out.add_term(sym_x(q, i + j), d_->g->cc(a.gen, b.gen, q));
      }
      // T/T and T/X vanish.
      return out;
    }

    case Family::HVBeta: {
      const Scalar& beta = d_->beta;
      auto mixed_cocycle = [&](int64_t di) -> Element {
        Element c;
        if (beta == Scalar(0)) {
          c.add_term(sym_central(2), Scalar(di * di + di));
        } else if (beta == Scalar(-1)) {
          c.add_term(sym_central(2), vir_cocycle(di));
        } else if (beta == Scalar(1)) {
          c.add_term(sym_central(2), Scalar(di));
          c.add_term(sym_central(3), Scalar(1));
        }
        return c;
      };
      if (a.tag == Tag::D && b.tag == Tag::D) {
        out.add_term(sym_d(i + j), Scalar(j - i));
        if (i + j == 0) out.add_term(sym_central(1), vir_cocycle(i));
      } else if (a.tag == Tag::D && b.tag == Tag::E) {
        out.add_term(sym_e(i + j), Scalar(j) + Scalar(i) * beta);
        if (i + j == 0) out += mixed_cocycle(i);
      } else if (a.tag == Tag::E && b.tag == Tag::D) {
        out.add_term(sym_e(i + j), -(Scalar(i) + Scalar(j) * beta));
        if (i + j == 0) out += -mixed_cocycle(j);
      } else if (a.tag == Tag::E && b.tag == Tag::E) {
        if (beta == Scalar(0) && i + j == 0) out.add_term(sym_central(4), Scalar(i));
      }
      return out;
    }

    case Family::AffineVirasoro: {
      if (a.tag == Tag::D && b.tag == Tag::D) {
        out.add_term(sym_d(i + j), Scalar(j - i));
        if (i + j == 0) out.add_term(sym_central(0), vir_cocycle(i));
      } else if (a.tag == Tag::D && b.tag == Tag::X) {
        out.add_term(sym_x(b.gen, i + j), Scalar(j));
      } else if (a.tag == Tag::X && b.tag == Tag::D) {
        out.add_term(sym_x(a.gen, i + j), Scalar(-i));
      } else if (a.tag == Tag::X && b.tag == Tag::X) {
        for (int q = 0; q < d_->g->dim; ++q) out.add_term(sym_x(q, i + j), d_->g->cc(a.gen, b.gen, q));
        if (i + j == 0) out.add_term(sym_central(0), Scalar(i) * d_->g->form_at(a.gen, b.gen));
      }
      return out;
    }

    case Family::SuperHV: {
      if (a.tag == Tag::L && b.tag == Tag::L) {
        out.add_term(sym_l(i + j), Scalar(j - i));
        if (i + j == 0) out.add_term(sym_central(0), vir_cocycle(i));
      } else if (a.tag == Tag::L && b.tag == Tag::H) {
        out.add_term(sym_h(i + j), Scalar(j));
      } else if (a.tag == Tag::H && b.tag == Tag::L) {
        out.add_term(sym_h(i + j), Scalar(-i));
      } else if (a.tag == Tag::H && b.tag == Tag::H) {
        if (i + j == 0) out.add_term(sym_central(0), Rational(i, 3));
      } else if (a.tag == Tag::L && b.tag == Tag::G) {
        out.add_term(sym_g(i + j), Scalar(j) - Rational(i, 2));
      } else if (a.tag == Tag::G && b.tag == Tag::L) {
        out.add_term(sym_g(i + j), -(Scalar(i) - Rational(j, 2)));
      } else if (a.tag == Tag::H && b.tag == Tag::G) {
        out.add_term(sym_g(i + j), Scalar(1));
      } else if (a.tag == Tag::G && b.tag == Tag::H) {
        out.add_term(sym_g(i + j), Scalar(-1));  // [G,H] = -[H,G]
      }
      // G/G vanishes.
      return out;
    }

    case Family::DerExt: {
      if (a.tag == Tag::GD && b.tag == Tag::GX) {
        out.add_term(sym_ghat_x(b.gen), d_->g->beta[b.gen]);
      } else if (a.tag == Tag::GX && b.tag == Tag::GD) {
        out.add_term(sym_ghat_x(a.gen), -d_->g->beta[a.gen]);
      } else if (a.tag == Tag::GX && b.tag == Tag::GX) {
        for (int q = 0; q < d_->g->dim; ++q) out.add_term(sym_ghat_x(q), d_->g->cc(a.gen, b.gen, q));
      }
      return out;
    }

    case Family::Tau: {
      auto add_td = [&](int64_t idx, const Scalar& c) {
        if (idx != 0) out.add_term(sym_tau_d(idx), c);  // TD(0) is the zero vector
      };
      if (a.tag == Tag::TD && b.tag == Tag::TD) {
        add_td(j, Scalar(-j));
        add_td(i + j, Scalar(j - i));
        add_td(i, Scalar(i));
      } else if (a.tag == Tag::TD && b.tag == Tag::TX) {
        const Scalar& bs = d_->g->beta[b.gen];
        out.add_term(sym_tau_x(b.gen, j), Scalar(-j));
        out.add_term(sym_tau_x(b.gen, j + i), Scalar(j) + Scalar(i) * bs);
      } else if (a.tag == Tag::TX && b.tag == Tag::TD) {
        const Scalar& as = d_->g->beta[a.gen];
        out.add_term(sym_tau_x(a.gen, i), Scalar(i));
        out.add_term(sym_tau_x(a.gen, i + j), -(Scalar(i) + Scalar(j) * as));
      } else if (a.tag == Tag::TX && b.tag == Tag::TX) {
        for (int q = 0; q < d_->g->dim; ++q) out.add_term(sym_tau_x(q, i + j), d_->g->cc(a.gen, b.gen, q));
      } else if (a.tag == Tag::D && b.tag == Tag::T) {
        out.add_term(sym_t(j), Scalar(j));
      } else if (a.tag == Tag::T && b.tag == Tag::D) {
        out.add_term(sym_t(i), Scalar(-i));
      }
      // T/T, T/TD, T/TX, D(0)/TD, D(0)/TX all vanish.
      return out;
    }

    default:
      return out;
  }
}

Element Algebra::bracket(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [sa, ca] : a.terms())
    for (const auto& [sb, cb] : b.terms()) out += (ca * cb) * bracket_basis(sa, sb);
  return out;
}

std::vector<BasisSymbol> Algebra::basis_window(int window) const {
  std::vector<BasisSymbol> out;
  auto indices = [&](auto&& emit) {
    for (int64_t i = -window; i <= window; ++i) emit(i);
  };
  switch (d_->family) {
    case Family::Witt:
      indices([&](int64_t i) { out.push_back(sym_d(i)); });
      break;
    case Family::ExtendedWitt:
      indices([&](int64_t i) { out.push_back(sym_d(i)); out.push_back(sym_t(i)); });
      break;
    case Family::WittCurrent:
    case Family::ExtendedWittCurrent:
      indices([&](int64_t i) {
        out.push_back(sym_d(i));
        if (d_->family == Family::ExtendedWittCurrent) out.push_back(sym_t(i));
        for (int s = 0; s < d_->g->dim; ++s) out.push_back(sym_x(s, i));
      });
      break;
    case Family::HVBeta:
      indices([&](int64_t i) { out.push_back(sym_d(i)); out.push_back(sym_e(i)); });
      for (int32_t id : centrals()) out.push_back(sym_central(id));
      break;
    case Family::AffineVirasoro:
      indices([&](int64_t i) {
        out.push_back(sym_d(i));
        for (int s = 0; s < d_->g->dim; ++s) out.push_back(sym_x(s, i));
      });
      out.push_back(sym_central(0));
      break;
    case Family::SuperHV:
      indices([&](int64_t i) {
        out.push_back(sym_l(i));
        out.push_back(sym_h(i));
        out.push_back(sym_g(i));
      });
      out.push_back(sym_central(0));
      break;
    case Family::DerExt:
      out.push_back(sym_ghat_d());
      for (int s = 0; s < d_->g->dim; ++s) out.push_back(sym_ghat_x(s));
      break;
    case Family::Tau:
      indices([&](int64_t i) {
        if (i != 0) out.push_back(sym_tau_d(i));
        if (d_->g)
          for (int s = 0; s < d_->g->dim; ++s) out.push_back(sym_tau_x(s, i));
      });
      break;
    case Family::Map: {
      std::vector<BasisSymbol> base = d_->base->basis_window(window);
      for (const BasisSymbol& s : base)
        for (uint32_t r = 0; r < d_->ring.size(); ++r) out.push_back(with_ring(s, r));
      break;
    }
  }
  std::sort(out.begin(), out.end(), SymbolLess{});
  return out;
}

std::string Algebra::describe() const { return d_->label; }

// --- constructors ---

namespace {
std::shared_ptr<AlgebraData> base_data(Family f, std::string label) {
  auto d = std::make_shared<AlgebraData>();
  d->family = f;
  d->label = std::move(label);
  return d;
}
}  // namespace

Algebra Algebra::witt() { return Algebra(base_data(Family::Witt, "witt")); }

Algebra Algebra::extended_witt() {
  return Algebra(base_data(Family::ExtendedWitt, "extended_witt"));
}

Algebra Algebra::witt_current(const GSpec& g, bool extended, AlgebraOptions opt) {
  if (opt.validate) g.validate();
  auto d = base_data(extended ? Family::ExtendedWittCurrent : Family::WittCurrent,
                     (extended ? "extended_witt_current(" : "witt_current(") + g.label + ")");
  d->g = g;
  return Algebra(std::move(d));
}

Algebra Algebra::hv_beta(const Scalar& beta) {
  auto d = base_data(Family::HVBeta, "hv_beta(" + beta.to_string() + ")");
  d->beta = beta;
  return Algebra(std::move(d));
}

Algebra Algebra::affine_virasoro(const GSpec& g, AlgebraOptions opt) {
  if (opt.validate) {
    g.validate();
    if (!g.all_beta_zero())
      throw CatalogError("affine_virasoro: requires all derivation eigenvalues zero");
    if (!g.form) throw CatalogError("affine_virasoro: requires an invariant form");
  }
  auto d = base_data(Family::AffineVirasoro, "affine_virasoro(" + g.label + ")");
  d->g = g;
  return Algebra(std::move(d));
}

Algebra Algebra::super_hv() { return Algebra(base_data(Family::SuperHV, "super_hv")); }

Algebra Algebra::witt_heisenberg(const Scalar& beta) {
  return witt_current(gspec_heisenberg(beta), false);
}

Algebra Algebra::der_ext(const GSpec& g, AlgebraOptions opt) {
  if (opt.validate) g.validate();
  auto d = base_data(Family::DerExt, "der_ext(" + g.label + ")");
  d->g = g;
  return Algebra(std::move(d));
}

Algebra Algebra::tau(const std::optional<GSpec>& g, AlgebraOptions opt) {
  if (g && opt.validate) g->validate();
  auto d = base_data(Family::Tau, "tau(" + (g ? g->label : std::string("witt")) + ")");
  d->g = g;
  return Algebra(std::move(d));
}

Algebra Algebra::map(const Algebra& base, const RingSpec& ring, AlgebraOptions opt) {
  if (base.family() == Family::Map)
    throw CatalogError("map: nested map algebras are not supported; use a product ring");
  if (opt.validate) ring.validate();
  auto d = base_data(Family::Map, "map(" + base.label() + ", " + ring.describe() + ")");
  d->base = base;
  d->ring = ring;
  return Algebra(std::move(d));
}

// --- axioms ---

AxiomReport verify_axioms(const Algebra& alg, int window) {
  AxiomReport rep;
  std::vector<BasisSymbol> syms = alg.basis_window(window);
  const size_t n = syms.size();
  std::vector<int> par(n);
  for (size_t i = 0; i < n; ++i) par[i] = alg.parity(syms[i]);

  auto fail = [&](std::string law, std::vector<BasisSymbol> ss, Element res) {
    rep.pass = false;
    rep.witness = AxiomWitness{std::move(law), std::move(ss), std::move(res)};
  };

  // Pairs: grading/parity of outputs and super-antisymmetry.
  for (size_t i = 0; i < n && rep.pass; ++i) {
    for (size_t j = i; j < n && rep.pass; ++j) {
      Element ab = alg.bracket_basis(syms[i], syms[j]);
      Element ba = alg.bracket_basis(syms[j], syms[i]);
      ++rep.pairs_checked;
      int64_t deg = symbol_degree(syms[i]) + symbol_degree(syms[j]);
      int p = par[i] ^ par[j];
      for (const auto& [sym, c] : ab.terms()) {
        if (symbol_degree(sym) != deg) {
          fail("degree-additivity", {syms[i], syms[j]}, Element::term(sym, c));
          break;
        }
        if (alg.parity(sym) != p) {
          fail("parity-consistency", {syms[i], syms[j]}, Element::term(sym, c));
          break;
        }
      }
      if (!rep.pass) break;
      // [b,a] = -(-1)^{|a||b|}[a,b]: residual = ba + (-1)^{|a||b|} ab.
      Element residual = (par[i] && par[j]) ? (ba - ab) : (ba + ab);
      if (!residual.is_zero()) fail("antisymmetry", {syms[i], syms[j]}, residual);
    }
  }

  // Jacobi on sorted triples; with antisymmetry established this covers all
  // orderings, because the Jacobiator is graded-antisymmetric.
  for (size_t i = 0; i < n && rep.pass; ++i)
    for (size_t j = i; j < n && rep.pass; ++j)
      for (size_t k = j; k < n && rep.pass; ++k) {
        Element lhs = alg.bracket(Element::term(syms[i]), alg.bracket_basis(syms[j], syms[k]));
        Element r1 = alg.bracket(alg.bracket_basis(syms[i], syms[j]), Element::term(syms[k]));
        Element r2 = alg.bracket(Element::term(syms[j]), alg.bracket_basis(syms[i], syms[k]));
        Element residual = lhs - r1 - ((par[i] && par[j]) ? -r2 : r2);
        ++rep.triples_checked;
        if (!residual.is_zero()) fail("jacobi", {syms[i], syms[j], syms[k]}, residual);
      }
  return rep;
}

}  // namespace virw
