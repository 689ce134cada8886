#include "virw/modules.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

#include "virw/linalg.hpp"

namespace virw {

// ---------------------------------------------------------------------------
// ModuleVector

ModuleVector ModuleVector::unit(int64_t degree, int32_t component) {
  ModuleVector v;
  v.add(degree, component, Scalar(1));
  return v;
}

const Scalar& ModuleVector::at(int64_t degree, int32_t component) const {
  static const Scalar kZero(0);
  auto it = entries_.find({degree, component});
  return it == entries_.end() ? kZero : it->second;
}

void ModuleVector::add(int64_t degree, int32_t component, const Scalar& c) {
  if (c.is_zero()) return;
  Key k{degree, component};
  auto [it, inserted] = entries_.emplace(k, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [k, c] : o.entries_) add(k.first, k.second, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  for (const auto& [k, c] : o.entries_) add(k.first, k.second, -c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= c;
  return *this;
}

std::vector<int64_t> ModuleVector::degrees() const {
  std::vector<int64_t> out;
  for (const auto& [k, c] : entries_)
    if (out.empty() || out.back() != k.first) out.push_back(k.first);
  return out;
}

ModuleVector ModuleVector::slice(int64_t degree) const {
  ModuleVector out;
  for (auto it = entries_.lower_bound({degree, INT32_MIN}); it != entries_.end() && it->first.first == degree; ++it)
    out.entries_.emplace(it->first, it->second);
  return out;
}

ModuleVector ModuleVector::truncated(int64_t cap) const {
  ModuleVector out;
  for (const auto& [k, c] : entries_)
    if (k.first >= -cap && k.first <= cap) out.entries_.emplace(k, c);
  return out;
}

std::string ModuleVector::to_string() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : entries_) {
    if (!first) os << " + ";
    first = false;
    std::string coeff = c.to_string();
    if (!c.im().is_zero()) coeff = "(" + coeff + ")";
    os << coeff << "*v(" << k.first << "," << k.second << ")";
  }
  return os.str();
}

namespace {

void skip_spaces(const std::string& t, size_t& pos) {
  while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
}

long long parse_int_at(const std::string& t, size_t& pos, const std::string& ctx) {
  size_t start = pos;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) ++pos;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(t[start]))))
    throw ParseError("expected integer in " + ctx);
  return std::stoll(t.substr(start, pos - start));
}

}  // namespace

ModuleVector ModuleVector::parse(const std::string& text) {
  ModuleVector out;
  std::string trimmed = text;
  size_t b = trimmed.find_first_not_of(" \t");
  size_t e = trimmed.find_last_not_of(" \t");
  if (b == std::string::npos) throw ParseError("empty module vector text");
  trimmed = trimmed.substr(b, e - b + 1);
  if (trimmed == "0") return out;

  size_t pos = 0;
  while (pos < trimmed.size()) {
    size_t next = trimmed.find(" + ", pos);
    std::string term = trimmed.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? trimmed.size() : next + 3;

    size_t p = 0;
    skip_spaces(term, p);
    Scalar coeff(1);
    bool have_coeff = false;
    if (p < term.size() && term[p] == '(') {
      size_t close = term.find(')', p);
      if (close == std::string::npos) throw ParseError("unbalanced '(' in term '" + term + "'");
      coeff = Scalar::parse(term.substr(p + 1, close - p - 1));
      p = close + 1;
      have_coeff = true;
    } else if (p < term.size() && term[p] != 'v') {
      size_t star = term.find("*v(", p);
      if (star == std::string::npos) throw ParseError("malformed term '" + term + "'");
      coeff = Scalar::parse(term.substr(p, star - p));
      p = star;
      have_coeff = true;
    }
    if (have_coeff) {
      skip_spaces(term, p);
      if (p >= term.size() || term[p] != '*') throw ParseError("expected '*' in term '" + term + "'");
      ++p;
    }
    skip_spaces(term, p);
    if (p + 1 >= term.size() || term[p] != 'v' || term[p + 1] != '(')
      throw ParseError("expected v(degree,component) in term '" + term + "'");
    p += 2;
    long long degree = parse_int_at(term, p, "'" + term + "'");
    long long comp = 0;
    if (p < term.size() && term[p] == ',') {
      ++p;
      comp = parse_int_at(term, p, "'" + term + "'");
    }
    if (p >= term.size() || term[p] != ')') throw ParseError("expected ')' in term '" + term + "'");
    ++p;
    skip_spaces(term, p);
    if (p != term.size()) throw ParseError("trailing text in term '" + term + "'");
    out.add(degree, static_cast<int32_t>(comp), coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Slice datum

SliceInfo slice_info(const Algebra& alg) {
  SliceInfo info;
  switch (alg.family()) {
    case Family::Witt:
    case Family::ExtendedWitt:
      return info;
    case Family::WittCurrent:
    case Family::ExtendedWittCurrent:
    case Family::AffineVirasoro: {
      const GSpec* g = alg.g();
      info.gens = g->dim;
      info.parity = g->parity;
      info.beta = g->beta;
      info.c = g->c;
      return info;
    }
    case Family::HVBeta:
      info.gens = 1;
      info.parity = {0};
      info.beta = {alg.beta_param()};
      info.c = {Scalar(0)};
      return info;
    case Family::SuperHV:
      info.gens = 2;
      info.parity = {0, 1};
      info.beta = {Scalar(0), Scalar(Rational(-1, 2))};
      info.c.assign(8, Scalar(0));
      info.c[(0 * 2 + 1) * 2 + 1] = Scalar(1);
      info.c[(1 * 2 + 0) * 2 + 1] = Scalar(-1);
      return info;
    default:
      throw ModuleError(family_name(alg.family()) +
                        ": no degree-zero slice datum; this family does not carry weight modules "
                        "of this shape");
  }
}

int slice_gen_index(const Algebra& alg, const BasisSymbol& sym) {
  switch (sym.tag) {
    case Tag::X:
    case Tag::TX:
      return sym.gen;
    case Tag::E:
    case Tag::H:
      return 0;
    case Tag::G:
      return 1;
    default:
      throw ModuleError(symbol_to_string(sym, &alg.ring()) + " is not a current-type symbol");
  }
}

// ---------------------------------------------------------------------------
// Finite-dimensional slice validation

namespace {

using Mat = std::vector<Scalar>;

Mat mat_mul(const Mat& a, const Mat& b, int n) {
  Mat out(static_cast<size_t>(n) * n, Scalar(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i * n + k].is_zero()) continue;
      for (int j = 0; j < n; ++j) out[i * n + j] += a[i * n + k] * b[k * n + j];
    }
  return out;
}

bool mat_equal(const Mat& a, const Mat& b) { return a == b; }

Mat mat_combine(const Mat& a, const Scalar& ca, const Mat& b, const Scalar& cb) {
  Mat out(a.size(), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
  return out;
}

}  // namespace

void validate_findim(const FinDimModuleSpec& spec, const SliceInfo& info) {
  const std::string where = spec.label.empty() ? "slice datum" : spec.label;
  if (spec.dim < 1) throw ModuleError(where + ": dimension must be positive");
  const int n = spec.dim;
  std::vector<int> par = spec.parity;
  if (par.empty()) par.assign(n, 0);
  if (static_cast<int>(par.size()) != n)
    throw ModuleError(where + ": parity list has " + std::to_string(par.size()) + " entries, expected " +
                      std::to_string(n));
  for (int p : par)
    if (p != 0 && p != 1) throw ModuleError(where + ": parity entries must be 0 or 1");
  if (static_cast<int>(spec.d_matrix.size()) != n * n)
    throw ModuleError(where + ": derivation matrix has " + std::to_string(spec.d_matrix.size()) +
                      " entries, expected " + std::to_string(n * n));
  if (static_cast<int>(spec.x_matrices.size()) != info.gens)
    throw ModuleError(where + ": expected " + std::to_string(info.gens) + " generator matrices, got " +
                      std::to_string(spec.x_matrices.size()));
  for (int s = 0; s < info.gens; ++s)
    if (static_cast<int>(spec.x_matrices[s].size()) != n * n)
      throw ModuleError(where + ": generator matrix " + std::to_string(s) + " has " +
                        std::to_string(spec.x_matrices[s].size()) + " entries, expected " +
                        std::to_string(n * n));

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (par[a] != par[b] && !spec.d_matrix[a * n + b].is_zero())
        throw ModuleError(where + ": derivation matrix mixes parities at (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");

  for (int s = 0; s < info.gens; ++s) {
    const Mat& X = spec.x_matrices[s];
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (X[a * n + b].is_zero()) continue;
        if (info.parity[s] == 1)
          throw ModuleError(where + ": odd generator " + std::to_string(s) +
                            " must act by the zero matrix in a slice datum");
        if (par[a] != (par[b] + info.parity[s]) % 2)
          throw ModuleError(where + ": generator " + std::to_string(s) + " breaks the parity grading at (" +
                            std::to_string(a) + "," + std::to_string(b) + ")");
      }
  }

  for (int s = 0; s < info.gens; ++s) {
    const Mat& X = spec.x_matrices[s];
    Mat comm = mat_combine(mat_mul(spec.d_matrix, X, n), Scalar(1), mat_mul(X, spec.d_matrix, n), Scalar(-1));
    Mat want = mat_combine(X, info.beta[s], X, Scalar(0));
    if (!mat_equal(comm, want))
      throw ModuleError(where + ": [derivation, generator " + std::to_string(s) +
                        "] does not equal the eigenvalue " + info.beta[s].to_string() + " times the generator");
  }

  for (int s = 0; s < info.gens; ++s)
    for (int p = 0; p < info.gens; ++p) {
      const Mat& Xs = spec.x_matrices[s];
      const Mat& Xp = spec.x_matrices[p];
      Scalar sign = (info.parity[s] == 1 && info.parity[p] == 1) ? Scalar(1) : Scalar(-1);
      Mat lhs = mat_combine(mat_mul(Xs, Xp, n), Scalar(1), mat_mul(Xp, Xs, n), sign);
      Mat rhs(static_cast<size_t>(n) * n, Scalar(0));
      for (int q = 0; q < info.gens; ++q) {
        const Scalar& c = info.cc(s, p, q);
        if (c.is_zero()) continue;
        rhs = mat_combine(rhs, Scalar(1), spec.x_matrices[q], c);
      }
      if (!mat_equal(lhs, rhs))
        throw ModuleError(where + ": generator matrices " + std::to_string(s) + ", " + std::to_string(p) +
                          " do not close onto the structure constants");
    }
}

// ---------------------------------------------------------------------------
// Jet modules (tensor modules over the Laurent ring)

namespace {

void check_components(const ModuleVector& v, int dim, const std::string& who) {
  for (const auto& [k, c] : v.entries())
    if (k.second < 0 || k.second >= dim)
      throw ModuleError(who + ": component " + std::to_string(k.second) + " out of range (dim " +
                        std::to_string(dim) + ")");
}

class JetModule final : public WeightModule {
public:
  JetModule(Algebra alg, Scalar lambda, FinDimModuleSpec vbar)
      : WeightModule(std::move(alg)), lambda_(std::move(lambda)), vbar_(std::move(vbar)) {}

  int components() const override { return vbar_.dim; }
  Scalar weight_of(int64_t degree) const override { return lambda_ + Scalar(degree); }
  bool a_module() const override { return true; }

  ModuleVector act_symbol(const BasisSymbol& sym, const ModuleVector& v) const override {
    if (sym.ring != 0)
      throw ModuleError("jet module: symbol " + symbol_to_string(sym) + " carries a ring factor");
    const int n = vbar_.dim;
    check_components(v, n, "jet module");
    ModuleVector out;
    switch (sym.tag) {
      case Tag::Central:
        return out;
      case Tag::T:
        for (const auto& [k, c] : v.entries()) out.add(k.first + sym.index, k.second, c);
        return out;
      case Tag::D:
      case Tag::L: {
        const Scalar shift(sym.index);
        for (const auto& [k, c] : v.entries()) {
          const int64_t j = k.first;
          const int b = k.second;
          out.add(j + sym.index, b, (lambda_ + Scalar(j)) * c);
          if (sym.index != 0)
            for (int a = 0; a < n; ++a) {
              const Scalar& d = vbar_.d_matrix[a * n + b];
              if (!d.is_zero()) out.add(j + sym.index, a, shift * d * c);
            }
        }
        return out;
      }
      default: {
        const int s = slice_gen_index(alg_, sym);
        if (s < 0 || s >= static_cast<int>(vbar_.x_matrices.size()))
          throw ModuleError("jet module: no slice matrix for " + symbol_to_string(sym));
        const auto& X = vbar_.x_matrices[s];
        for (const auto& [k, c] : v.entries()) {
          const int b = k.second;
          for (int a = 0; a < n; ++a)
            if (!X[a * n + b].is_zero()) out.add(k.first + sym.index, a, X[a * n + b] * c);
        }
        return out;
      }
    }
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "jet(lambda=" << lambda_.to_string() << ", slice=" << (vbar_.label.empty() ? "dim " + std::to_string(vbar_.dim) : vbar_.label)
       << ") over " << alg_.label();
    return os.str();
  }

private:
  Scalar lambda_;
  FinDimModuleSpec vbar_;
};

class Beta1Exceptional final : public WeightModule {
public:
  Beta1Exceptional(Scalar lambda, Scalar b, Scalar F)
      : WeightModule(Algebra::witt_current(gspec_one_dim(Scalar(1)), false)),
        lambda_(std::move(lambda)),
        b_(std::move(b)),
        F_(std::move(F)) {}

  int components() const override { return 1; }
  Scalar weight_of(int64_t degree) const override { return lambda_ + Scalar(degree); }
  bool a_module() const override { return false; }

  ModuleVector act_symbol(const BasisSymbol& sym, const ModuleVector& v) const override {
    if (sym.ring != 0)
      throw ModuleError("exceptional module: symbol " + symbol_to_string(sym) + " carries a ring factor");
    check_components(v, 1, "exceptional module");
    ModuleVector out;
    switch (sym.tag) {
      case Tag::D:
        for (const auto& [k, c] : v.entries())
          out.add(k.first + sym.index, 0, (lambda_ + Scalar(k.first) + Scalar(sym.index) * b_) * c);
        return out;
      case Tag::X:
        if (sym.index == 0)
          for (const auto& [k, c] : v.entries()) out.add(k.first, 0, F_ * c);
        return out;
      default:
        throw ModuleError("exceptional module: " + symbol_to_string(sym) + " does not act");
    }
  }

  std::string describe() const override {
    return "exceptional(lambda=" + lambda_.to_string() + ", b=" + b_.to_string() + ", F=" + F_.to_string() + ")";
  }

private:
  Scalar lambda_, b_, F_;
};

class EvaluationModule final : public WeightModule {
public:
  EvaluationModule(Algebra map_alg, ModulePtr base, PsiSpec psi)
      : WeightModule(std::move(map_alg)), base_(std::move(base)), psi_(std::move(psi)) {}

  int components() const override { return base_->components(); }
  Scalar weight_of(int64_t degree) const override { return base_->weight_of(degree); }
  bool a_module() const override { return base_->a_module(); }

  ModuleVector act_symbol(const BasisSymbol& sym, const ModuleVector& v) const override {
    const Scalar& value = psi_.apply(sym.ring);
    if (value.is_zero()) return {};
    ModuleVector out = base_->act_symbol(with_ring(sym, 0), v);
    out *= value;
    return out;
  }

  std::string describe() const override { return "evaluation of " + base_->describe() + " over " + alg_.label(); }

private:
  ModulePtr base_;
  PsiSpec psi_;
};

}  // namespace

ModulePtr make_density_module(const Scalar& alpha, const Scalar& beta, bool extended) {
  Algebra alg = extended ? Algebra::extended_witt() : Algebra::witt();
  FinDimModuleSpec vbar;
  vbar.dim = 1;
  vbar.d_matrix = {beta};
  vbar.label = "line(beta=" + beta.to_string() + ")";
  return make_jet_module(alg, alpha, std::move(vbar));
}

ModulePtr make_jet_module(const Algebra& alg, const Scalar& lambda, FinDimModuleSpec vbar) {
  SliceInfo info = slice_info(alg);
  validate_findim(vbar, info);
  return std::make_shared<JetModule>(alg, lambda, std::move(vbar));
}

ModulePtr make_beta1_exceptional(const Scalar& lambda, const Scalar& b, const Scalar& F) {
  if (F.is_zero()) throw ModuleError("exceptional module requires a nonzero current value F");
  return std::make_shared<Beta1Exceptional>(lambda, b, F);
}

ModulePtr make_evaluation_module(const Algebra& map_alg, ModulePtr base, PsiSpec psi) {
  if (map_alg.family() != Family::Map)
    throw ModuleError("evaluation modules live over map algebras; got " + family_name(map_alg.family()));
  if (!base) throw ModuleError("evaluation module needs a base module");
  if (base->algebra().family() != map_alg.base()->family())
    throw ModuleError("evaluation base module is over " + family_name(base->algebra().family()) +
                      ", but the map algebra extends " + family_name(map_alg.base()->family()));
  if (psi.ring().describe() != map_alg.ring().describe())
    throw ModuleError("evaluation character is defined over " + psi.ring().describe() +
                      ", but the map algebra uses " + map_alg.ring().describe());
  return std::make_shared<EvaluationModule>(map_alg, std::move(base), std::move(psi));
}

// ---------------------------------------------------------------------------
// Actions

ModuleVector act(const WeightModule& m, const Element& a, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [sym, c] : a.terms()) {
    ModuleVector piece = m.act_symbol(sym, v);
    piece *= c;
    out += piece;
  }
  return out;
}

ModuleVector act_word(const WeightModule& m, const Word& w, const ModuleVector& v) {
  ModuleVector cur = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (cur.is_zero()) return cur;
    cur = m.act_symbol(*it, cur);
  }
  return cur;
}

ModuleVector act_U(const WeightModule& m, const UElement& u, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [w, c] : u) {
    ModuleVector piece = act_word(m, w, v);
    piece *= c;
    out += piece;
  }
  return out;
}

ModuleVector act_raw(const WeightModule& m, const RawExpr& e, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& t : e) {
    ModuleVector piece = act_word(m, t.word, v);
    piece *= t.coeff;
    out += piece;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Probes

namespace {

std::vector<ModuleVector> probe_vectors(const WeightModule& m) {
  std::vector<ModuleVector> out;
  for (int64_t d : {-1, 0, 1})
    for (int c = 0; c < m.components(); ++c) out.push_back(ModuleVector::unit(d, c));
  return out;
}

}  // namespace

std::optional<int> min_annihilating_order(const WeightModule& m, DifferentiatorSpec::Variant variant,
                                          int max_m, int window) {
  const Algebra& alg = m.algebra();
  const int gens = alg.current_dim();
  if (variant == DifferentiatorSpec::Variant::OmegaBar && gens == 0)
    throw ModuleError("mixed differentiators need a current part; " + alg.label() + " has none");
  const auto probes = probe_vectors(m);

  for (int order = 0; order <= max_m; ++order) {
    bool annihilates = true;
    std::vector<DifferentiatorSpec> specs;
    if (variant == DifferentiatorSpec::Variant::Omega) {
      for (int64_t k = -window; k <= window; ++k)
        for (int64_t s = -window; s <= window; ++s) {
          DifferentiatorSpec spec;
          spec.variant = variant;
          spec.m = order;
          spec.k = k;
          spec.s = s;
          specs.push_back(spec);
        }
    } else {
      for (int g = 0; g < gens; ++g)
        for (int64_t j = -window; j <= window; ++j)
          for (int64_t p = -window; p <= window; ++p) {
            DifferentiatorSpec spec;
            spec.variant = variant;
            spec.m = order;
            spec.j = j;
            spec.p = p;
            spec.gen = g;
            specs.push_back(spec);
          }
    }
    for (const auto& spec : specs) {
      RawExpr terms = differentiator_terms(alg, spec);
      for (const auto& v : probes)
        if (!act_raw(m, terms, v).is_zero()) {
          annihilates = false;
          break;
        }
      if (!annihilates) break;
    }
    if (annihilates) return order;
  }
  return std::nullopt;
}

std::map<int64_t, int> cyclic_span_rank(const WeightModule& m, const ModuleVector& v, int window) {
  const int64_t cap = 2 * static_cast<int64_t>(window);
  const int n = m.components();
  std::map<int64_t, SpanTracker> trackers;
  auto tracker_at = [&](int64_t d) -> SpanTracker& {
    auto it = trackers.find(d);
    if (it == trackers.end()) it = trackers.emplace(d, SpanTracker(static_cast<size_t>(n))).first;
    return it->second;
  };
  auto row_of = [&](const ModuleVector& s) {
    Row r(static_cast<size_t>(n), Scalar(0));
    for (const auto& [k, c] : s.entries()) r[static_cast<size_t>(k.second)] = c;
    return r;
  };

  std::vector<std::pair<int64_t, ModuleVector>> pending;
  auto offer = [&](const ModuleVector& u) {
    for (int64_t d : u.degrees()) {
      if (d < -cap || d > cap) continue;
      ModuleVector s = u.slice(d);
      if (tracker_at(d).insert(row_of(s))) pending.emplace_back(d, std::move(s));
    }
  };

  check_components(v, n, "cyclic span");
  offer(v);
  const std::vector<BasisSymbol> gens = m.algebra().basis_window(window);
  while (!pending.empty()) {
    auto [d, u] = std::move(pending.back());
    pending.pop_back();
    for (const auto& sym : gens) offer(m.act_symbol(sym, u));
  }

  std::map<int64_t, int> out;
  for (int64_t d = -window; d <= window; ++d) {
    auto it = trackers.find(d);
    out[d] = it == trackers.end() ? 0 : it->second.rank();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axiom sweep

ModuleAxiomReport check_module_axioms(const WeightModule& m, int window) {
  ModuleAxiomReport rep;
  auto fail = [&](const std::string& msg) {
    if (rep.pass) {
      rep.pass = false;
      rep.first_failure = msg;
    }
  };
  const Algebra& alg = m.algebra();
  const auto probes = probe_vectors(m);
  const std::vector<BasisSymbol> syms = alg.basis_window(window);
  const RingSpec& ring = alg.ring();

  // Degree homogeneity: a symbol of ad-weight w maps degree j into degree j+w.
  for (const auto& sym : syms) {
    for (int64_t d : {-1, 0, 1})
      for (int c = 0; c < m.components(); ++c) {
        ModuleVector r = m.act_symbol(sym, ModuleVector::unit(d, c));
        ++rep.checks;
        for (int64_t dd : r.degrees())
          if (dd != d + symbol_degree(sym))
            fail("degree shift mismatch: " + symbol_to_string(sym, &ring) + " on v(" + std::to_string(d) +
                 "," + std::to_string(c) + ")");
      }
  }

  // Bracket compatibility with the super sign.
  for (const auto& a : syms)
    for (const auto& b : syms) {
      Element br = alg.bracket_basis(a, b);
      const bool both_odd = alg.parity(a) == 1 && alg.parity(b) == 1;
      for (const auto& v : probes) {
        ModuleVector lhs = act(m, br, v);
        ModuleVector rhs = m.act_symbol(a, m.act_symbol(b, v));
        ModuleVector ba = m.act_symbol(b, m.act_symbol(a, v));
        if (both_odd)
          rhs += ba;
        else
          rhs -= ba;
        ++rep.checks;
        if (lhs != rhs)
          fail("bracket compatibility failed for [" + symbol_to_string(a, &ring) + ", " +
               symbol_to_string(b, &ring) + "] on " + v.to_string());
      }
    }

  // Associativity of the Laurent action.
  if (m.a_module()) {
    for (const auto& v : probes) {
      ++rep.checks;
      if (m.act_symbol(sym_t(0), v) != v) fail("T(0) does not act as the identity on " + v.to_string());
    }
    for (int64_t i = -window; i <= window; ++i)
      for (int64_t j = -window; j <= window; ++j)
        for (const auto& v : probes) {
          ModuleVector two_step = m.act_symbol(sym_t(i), m.act_symbol(sym_t(j), v));
          ModuleVector one_step = m.act_symbol(sym_t(i + j), v);
          ++rep.checks;
          if (two_step != one_step)
            fail("Laurent action is not associative at T(" + std::to_string(i) + "), T(" + std::to_string(j) +
                 ") on " + v.to_string());
        }
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Random slice data

namespace {

FinDimModuleSpec trivial_slice(const SliceInfo& info, Rng& rng, int max_dim) {
  FinDimModuleSpec spec;
  spec.dim = static_cast<int>(rng.uniform(1, max_dim));
  spec.d_matrix.assign(static_cast<size_t>(spec.dim) * spec.dim, Scalar(0));
  for (int a = 0; a < spec.dim; ++a) spec.d_matrix[a * spec.dim + a] = Scalar(rng.rational());
  spec.x_matrices.assign(info.gens, Mat(static_cast<size_t>(spec.dim) * spec.dim, Scalar(0)));
  spec.label = "random trivial dim=" + std::to_string(spec.dim);
  return spec;
}

bool all_even(const std::vector<int>& parity) {
  return std::all_of(parity.begin(), parity.end(), [](int p) { return p == 0; });
}

bool all_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace

FinDimModuleSpec random_findim(const Algebra& alg, Rng& rng, int max_dim) {
  const SliceInfo info = slice_info(alg);
  if (max_dim < 1) max_dim = 1;

  FinDimModuleSpec spec;
  const auto finish = [&](FinDimModuleSpec candidate) {
    try {
      validate_findim(candidate, info);
      return candidate;
    } catch (const ModuleError&) {
      FinDimModuleSpec fallback = trivial_slice(info, rng, max_dim);
      validate_findim(fallback, info);
      return fallback;
    }
  };

  if (info.gens == 0) return finish(trivial_slice(info, rng, max_dim));

  // Abelian slice with trivial eigenvalues: commuting scalars on a line.
  if (all_even(info.parity) && all_zero(info.c) && all_zero(info.beta)) {
    spec.dim = 1;
    spec.d_matrix = {Scalar(rng.rational())};
    for (int s = 0; s < info.gens; ++s) spec.x_matrices.push_back({Scalar(rng.rational())});
    spec.label = "random scalars";
    return finish(std::move(spec));
  }

  // Single even generator with eigenvalue beta: a two-step ladder.
  if (info.gens == 1 && info.parity[0] == 0 && all_zero(info.c)) {
    const Scalar& beta = info.beta[0];
    if (beta.is_zero() || max_dim < 2) {
      spec.dim = 1;
      spec.d_matrix = {Scalar(rng.rational())};
      spec.x_matrices = {{beta.is_zero() ? Scalar(rng.rational()) : Scalar(0)}};
      spec.label = "random line";
      return finish(std::move(spec));
    }
    const Scalar b0 = Scalar(rng.rational());
    spec.dim = 2;
    spec.d_matrix = {b0, Scalar(0), Scalar(0), b0 + beta};
    spec.x_matrices = {{Scalar(0), Scalar(0), Scalar(rng.nonzero_rational()), Scalar(0)}};
    spec.label = "random ladder";
    return finish(std::move(spec));
  }

  // Heisenberg-shaped slice: strictly upper-triangular nilpotents.
  if (info.gens == 3 && all_even(info.parity) && info.beta[2].is_zero() &&
      info.beta[1] == -info.beta[0] && !info.cc(0, 1, 2).is_zero() && max_dim >= 3) {
    const Scalar u = Scalar(rng.nonzero_rational());
    const Scalar w = Scalar(rng.nonzero_rational());
    const Scalar a = Scalar(rng.rational());
    const Scalar& beta = info.beta[0];
    spec.dim = 3;
    spec.d_matrix.assign(9, Scalar(0));
    spec.d_matrix[0] = a;
    spec.d_matrix[4] = a - beta;
    spec.d_matrix[8] = a;
    Mat X0(9, Scalar(0)), X1(9, Scalar(0)), X2(9, Scalar(0));
    X0[0 * 3 + 1] = u;
    X1[1 * 3 + 2] = w;
    X2[0 * 3 + 2] = u * w / info.cc(0, 1, 2);
    spec.x_matrices = {X0, X1, X2};
    spec.label = "random nilpotent";
    return finish(std::move(spec));
  }

  // Semisimple rank-one slice (e, h, f): the spin representation.
  if (info.gens == 3 && all_even(info.parity) && info.cc(1, 0, 0) == Scalar(2) &&
      info.cc(0, 2, 1) == Scalar(1) && info.cc(1, 2, 2) == Scalar(-2) && info.beta[1].is_zero() &&
      info.beta[2] == -info.beta[0] && max_dim >= 2) {
    const Scalar t = info.beta[0] * Scalar(Rational(1, 2));
    const Scalar a = Scalar(rng.rational());
    spec.dim = 2;
    spec.d_matrix = {a + t, Scalar(0), Scalar(0), a - t};
    Mat Xe(4, Scalar(0)), Xh(4, Scalar(0)), Xf(4, Scalar(0));
    Xe[0 * 2 + 1] = Scalar(1);
    Xh[0] = Scalar(1);
    Xh[3] = Scalar(-1);
    Xf[1 * 2 + 0] = Scalar(1);
    spec.x_matrices = {Xe, Xh, Xf};
    spec.label = "random spin";
    return finish(std::move(spec));
  }

  // One even generator with eigenvalue zero plus odd generators: scalars on a
  // line, odd part zero.
  if (info.gens >= 1 && info.parity[0] == 0 && info.beta[0].is_zero()) {
    bool rest_odd = true;
    for (int s = 1; s < info.gens; ++s) rest_odd = rest_odd && info.parity[s] == 1;
    if (rest_odd) {
      spec.dim = 1;
      spec.d_matrix = {Scalar(rng.rational())};
      spec.x_matrices.assign(info.gens, {Scalar(0)});
      spec.x_matrices[0] = {Scalar(rng.nonzero_rational())};
      spec.label = "random even line";
      return finish(std::move(spec));
    }
  }

  return finish(trivial_slice(info, rng, max_dim));
}

}  // namespace virw
