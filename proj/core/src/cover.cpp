#include "virw/cover.hpp"

#include <cstdlib>
#include <sstream>

#include "virw/linalg.hpp"

namespace virw {

// ---------------------------------------------------------------------------
// CoverElement

void CoverElement::add(const BasisSymbol& x, const ModuleVector& u, const Scalar& coeff) {
  if (u.is_zero() || coeff.is_zero()) return;
  ModuleVector scaled = coeff * u;
  auto [it, inserted] = terms_.emplace(x, std::move(scaled));
  if (!inserted) {
    it->second += coeff * u;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoverElement& CoverElement::operator+=(const CoverElement& o) {
  for (const auto& [x, u] : o.terms_) add(x, u);
  return *this;
}

CoverElement& CoverElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [x, u] : terms_) u *= c;
  return *this;
}

std::string CoverElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, u] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "mu(" << symbol_to_string(x) << "; " << u.to_string() << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Cover

namespace {

BasisSymbol shifted(BasisSymbol x, int64_t r) {
  x.index += r;
  return x;
}

}  // namespace

Cover::Cover(ModulePtr m, int probe_window) : module_(std::move(m)) {
  if (!module_) throw ModuleError("cover needs a module");
  const Algebra& alg = module_->algebra();
  switch (alg.family()) {
    case Family::Witt:
    case Family::ExtendedWitt:
    case Family::WittCurrent:
    case Family::ExtendedWittCurrent:
      break;
    default:
      throw ModuleError("cover requires a centerless catalog algebra with a Witt part; got " +
                        family_name(alg.family()));
  }
  // Generating part: currents if they act nontrivially on the probe window.
  bool current_acts = false;
  for (int32_t s = 0; s < alg.current_dim() && !current_acts; ++s)
    for (int64_t k = -probe_window; k <= probe_window && !current_acts; ++k)
      for (int64_t d = -probe_window; d <= probe_window && !current_acts; ++d)
        for (int c = 0; c < module_->components(); ++c)
          if (!module_->act_symbol(alg.current_symbol(s, k), ModuleVector::unit(d, c)).is_zero()) {
            current_acts = true;
            break;
          }
  witt_ = !current_acts;
}

int Cover::generator_families() const {
  return witt_ ? 1 : module_->algebra().current_dim();
}

BasisSymbol Cover::generator_symbol(int32_t s, int64_t k) const {
  const Algebra& alg = module_->algebra();
  return witt_ ? alg.witt_symbol(k) : alg.current_symbol(s, k);
}

void Cover::check_generator(const BasisSymbol& x) const {
  const Algebra& alg = module_->algebra();
  if (x.ring != 0) throw ModuleError("cover generator " + symbol_to_string(x) + " carries a ring factor");
  if (witt_) {
    if (x.tag != Tag::D)
      throw ModuleError("this cover is generated by the Witt part; got " + symbol_to_string(x));
    return;
  }
  if (x.tag != alg.current_symbol(0, 0).tag || x.gen < 0 || x.gen >= alg.current_dim())
    throw ModuleError("this cover is generated by the current part; got " + symbol_to_string(x));
}

CoverElement Cover::mu(const BasisSymbol& x, ModuleVector u) const {
  check_generator(x);
  CoverElement c;
  c.add(x, u);
  return c;
}

ModuleVector Cover::evaluate(const CoverElement& c, int64_t r) const {
  ModuleVector out;
  for (const auto& [x, u] : c.terms()) out += module_->act_symbol(shifted(x, r), u);
  return out;
}

ModuleVector Cover::project(const CoverElement& c) const { return evaluate(c, 0); }

CoverElement Cover::act_symbol(const BasisSymbol& l, const CoverElement& c) const {
  const Algebra& alg = module_->algebra();
  CoverElement out;
  if (l.tag == Tag::T) {
    if (l.ring != 0) throw ModuleError("cover action: " + symbol_to_string(l) + " carries a ring factor");
    for (const auto& [x, u] : c.terms()) out.add(shifted(x, l.index), u);
    return out;
  }
  const int lp = alg.parity(l);
  for (const auto& [x, u] : c.terms()) {
    Element br = alg.bracket_basis(l, x);
    for (const auto& [z, coeff] : br.terms()) {
      check_generator(z);
      out.add(z, u, coeff);
    }
    const Scalar sign = (lp == 1 && alg.parity(x) == 1) ? Scalar(-1) : Scalar(1);
    out.add(x, module_->act_symbol(l, u), sign);
  }
  return out;
}

CoverElement Cover::act(const Element& l, const CoverElement& c) const {
  CoverElement out;
  for (const auto& [sym, coeff] : l.terms()) {
    CoverElement piece = act_symbol(sym, c);
    piece *= coeff;
    out += piece;
  }
  return out;
}

CoverElement Cover::reduce_generator(const BasisSymbol& x, const ModuleVector& u, int m) const {
  check_generator(x);
  if (m < 1) throw ModuleError("reduction needs a positive order");
  const Algebra& alg = module_->algebra();
  CoverElement out;
  std::vector<std::pair<BasisSymbol, ModuleVector>> work;
  for (int64_t d : u.degrees()) work.emplace_back(x, u.slice(d));
  while (!work.empty()) {
    auto [sym, vec] = std::move(work.back());
    work.pop_back();
    if (vec.is_zero()) continue;
    const int64_t q = vec.degrees().front();
    if (2 * std::llabs(q) <= m) {
      out.add(sym, vec);
      continue;
    }
    const Scalar pivot = module_->weight_of(q);
    if (pivot.is_zero())
      throw ModuleError("normalize alpha: reduction pivot unavailable at weight offset " +
                        std::to_string(q));
    ModuleVector v = (Scalar(1) / pivot) * vec;
    for (int i = 1; i <= m; ++i) {
      // -(-1)^i binom(m, i), stepping the degree back toward the window.
      const Scalar coeff = Scalar((i % 2 == 0) ? Rational(-1) : Rational(1)) * Scalar(binomial(m, i));
      const int64_t step = q < 0 ? i : -i;
      ModuleVector dv = module_->act_symbol(alg.witt_symbol(step), v);
      if (dv.is_zero()) continue;
      work.emplace_back(shifted(sym, -step), coeff * dv);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weight-space ranks

CoverRankReport cover_weight_rank(const Cover& cover, int64_t p, int m, int window) {
  const WeightModule& mod = cover.module();
  const int dim = mod.components();
  const int families = cover.generator_families();
  const int64_t half = m / 2;

  std::vector<CoverElement> gens;
  CoverRankReport report;
  for (int32_t s = 0; s < families; ++s)
    for (int64_t k = -half; k <= half; ++k)
      for (int c = 0; c < dim; ++c) {
        CoverElement g = cover.mu(cover.generator_symbol(s, p - k), ModuleVector::unit(k, c));
        report.generators.push_back(g.to_string());
        gens.push_back(std::move(g));
      }

  // One evaluation row per generator over the wider window; the narrow rank
  // uses a prefix of the same data so both ranks describe the same rows.
  const int wide = window + m;
  const size_t ncols_wide = static_cast<size_t>(2 * wide + 1) * dim;
  const size_t ncols_narrow = static_cast<size_t>(2 * window + 1) * dim;
  std::vector<Row> rows_wide, rows_narrow;
  for (const auto& g : gens) {
    Row row(ncols_wide, Scalar(0));
    for (int64_t r = -wide; r <= wide; ++r) {
      ModuleVector val = cover.evaluate(g, r);
      for (const auto& [key, coeff] : val.entries()) {
        if (key.first != p + r)
          throw ModuleError("cover evaluation left the expected weight space at r=" + std::to_string(r));
        row[static_cast<size_t>(r + wide) * dim + key.second] = coeff;
      }
    }
    Row narrow(ncols_narrow, Scalar(0));
    for (int64_t r = -window; r <= window; ++r)
      for (int c = 0; c < dim; ++c)
        narrow[static_cast<size_t>(r + window) * dim + c] = row[static_cast<size_t>(r + wide) * dim + c];
    rows_wide.push_back(std::move(row));
    rows_narrow.push_back(std::move(narrow));
  }

  report.rank = exact_rank(rows_narrow, ncols_narrow);
  report.stabilized = report.rank == exact_rank(rows_wide, ncols_wide);
  return report;
}

}  // namespace virw
