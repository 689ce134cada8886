#include "virw/enveloping.hpp"

#include <sstream>

namespace virw {

bool WordLess::operator()(const Word& a, const Word& b) const {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (symbol_less(a[i], b[i])) return true;
    if (symbol_less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

std::string nf_mode_name(NfMode mode) {
  switch (mode) {
    case NfMode::U: return "U";
    case NfMode::Ubar: return "Ubar";
    case NfMode::Tensor: return "Tensor";
  }
  return "?";
}

UElement u_one() { return {{Word{}, Scalar(1)}}; }

UElement u_scale(const Scalar& c, const UElement& e) {
  UElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, k] : e) out.emplace(w, c * k);
  return out;
}

UElement u_add(const UElement& a, const UElement& b) {
  UElement out = a;
  for (const auto& [w, c] : b) {
    auto [it, inserted] = out.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

UElement u_sub(const UElement& a, const UElement& b) { return u_add(a, u_scale(Scalar(-1), b)); }

EnvelopingEngine::EnvelopingEngine(Algebra alg, NfMode mode, int degree_guard)
    : alg_(std::move(alg)), mode_(mode), guard_(degree_guard) {
  if (mode_ != NfMode::U && !alg_.has_laurent_part())
    throw NfError("mode " + nf_mode_name(mode_) + " needs an algebra with a Laurent part (" +
                  alg_.describe() + " has none)");
}

int EnvelopingEngine::non_laurent_count(const Word& w) const {
  int n = 0;
  for (const BasisSymbol& s : w)
    if (s.tag != Tag::T) ++n;
  return n;
}

void EnvelopingEngine::check_guard(const Word& w) const {
  int n = non_laurent_count(w);
  if (n > guard_)
    throw NfError("degree guard exceeded: word has " + std::to_string(n) +
                  " non-Laurent factors (limit " + std::to_string(guard_) + ")");
}

// PBW class rank.  U mode: centrals < T < current symbols < Witt-type symbols.
// Ubar/Tensor: the Laurent prefix T, then d_0, then centrals, currents, and
// index-nonzero Witt-type symbols.
namespace {
int pbw_class(NfMode mode, const BasisSymbol& s) {
  bool quotient = mode != NfMode::U;
  switch (s.tag) {
    case Tag::T:
      return quotient ? 0 : 1;
    case Tag::D:
      if (quotient && s.index == 0) return 2;
      return 6;
    case Tag::L:
    case Tag::TD:
      return 6;
    case Tag::Central:
      return quotient ? 3 : 0;
    case Tag::X:
    case Tag::E:
    case Tag::H:
    case Tag::G:
    case Tag::TX:
      return 4;
    case Tag::GX:
    case Tag::GD:
      return 5;
  }
  return 7;
}
}  // namespace

bool EnvelopingEngine::pbw_less(const BasisSymbol& a, const BasisSymbol& b) const {
  int ca = pbw_class(mode_, a), cb = pbw_class(mode_, b);
  if (ca != cb) return ca < cb;
  return symbol_less(a, b);
}

int EnvelopingEngine::word_parity(const Word& w) const {
  int p = 0;
  for (const BasisSymbol& s : w) p ^= alg_.parity(s);
  return p;
}

bool EnvelopingEngine::is_normal(const Word& w) const {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    const BasisSymbol& a = w[pos];
    if (mode_ != NfMode::U && a.tag == Tag::T && a.index == 0) return false;
    if (pos + 1 >= w.size()) break;
    const BasisSymbol& b = w[pos + 1];
    if (mode_ != NfMode::U && a.tag == Tag::T && b.tag == Tag::T) return false;
    if (a == b && alg_.parity(a) == 1) return false;
    if (pbw_less(b, a)) return false;
  }
  return true;
}

UElement EnvelopingEngine::straighten(const Word& w) const {
  check_guard(w);
  auto memo_it = memo_.find(w);
  if (memo_it != memo_.end()) return memo_it->second;

  auto without = [&](size_t pos) {
    Word out;
    out.reserve(w.size() - 1);
    for (size_t i = 0; i < w.size(); ++i)
      if (i != pos) out.push_back(w[i]);
    return out;
  };
  auto replace_pair = [&](size_t pos, const BasisSymbol& z) {
    Word out;
    out.reserve(w.size() - 1);
    for (size_t i = 0; i < w.size(); ++i) {
      if (i == pos) {
        out.push_back(z);
        ++i;  // skip the second element of the pair
      } else {
        out.push_back(w[i]);
      }
    }
    return out;
  };
  UElement result;
  bool rewrote = false;
  for (size_t pos = 0; pos < w.size() && !rewrote; ++pos) {
    const BasisSymbol& a = w[pos];
    // t^0 = 1 in the quotient modes.
    if (mode_ != NfMode::U && a.tag == Tag::T && a.index == 0) {
      result = straighten(without(pos));
      rewrote = true;
      break;
    }
    if (pos + 1 >= w.size()) break;
    const BasisSymbol& b = w[pos + 1];
    // t^a t^b = t^{a+b} in the quotient modes.
    if (mode_ != NfMode::U && a.tag == Tag::T && b.tag == Tag::T) {
      result = straighten(replace_pair(pos, sym_t(a.index + b.index)));
      rewrote = true;
      break;
    }
    // Repeated odd factor: f f = [f,f]/2.
    if (a == b && alg_.parity(a) == 1) {
      Element br = alg_.bracket_basis(a, a);
      result.clear();
      for (const auto& [z, c] : br.terms())
        result = u_add(result, u_scale(c * Scalar(Rational(1, 2)), straighten(replace_pair(pos, z))));
      rewrote = true;
      break;
    }
    // Out-of-order adjacent pair: a b = (-1)^{|a||b|} b a + [a, b].
    if (pbw_less(b, a)) {
      Word swapped = w;
      std::swap(swapped[pos], swapped[pos + 1]);
      Scalar sign = (alg_.parity(a) && alg_.parity(b)) ? Scalar(-1) : Scalar(1);
      result = u_scale(sign, straighten(swapped));
      Element br = alg_.bracket_basis(a, b);
      for (const auto& [z, c] : br.terms())
        result = u_add(result, u_scale(c, straighten(replace_pair(pos, z))));
      rewrote = true;
      break;
    }
  }
  if (!rewrote) result = {{w, Scalar(1)}};
  memo_.emplace(w, result);
  return result;
}

UElement EnvelopingEngine::normal_form(const RawExpr& e) const {
  UElement out;
  for (const RawTerm& t : e) out = u_add(out, u_scale(t.coeff, straighten(t.word)));
  return out;
}

UElement EnvelopingEngine::normal_form(const UElement& e) const {
  UElement out;
  for (const auto& [w, c] : e) out = u_add(out, u_scale(c, straighten(w)));
  return out;
}

UElement EnvelopingEngine::mul(const UElement& a, const UElement& b) const {
  UElement out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word concat = wa;
      concat.insert(concat.end(), wb.begin(), wb.end());
      out = u_add(out, u_scale(ca * cb, straighten(concat)));
    }
  return out;
}

UElement EnvelopingEngine::commutator(const UElement& a, const UElement& b) const {
  UElement out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word ab = wa;
      ab.insert(ab.end(), wb.begin(), wb.end());
      Word ba = wb;
      ba.insert(ba.end(), wa.begin(), wa.end());
      Scalar sign = (word_parity(wa) && word_parity(wb)) ? Scalar(-1) : Scalar(1);
      out = u_add(out, u_scale(ca * cb, u_sub(straighten(ab), u_scale(sign, straighten(ba)))));
    }
  return out;
}

std::string EnvelopingEngine::order_description() const {
  if (mode_ == NfMode::U)
    return "U: centrals < T(k) (index ascending) < current symbols (generator id, then index "
           "ascending) < Witt-type symbols (index ascending); repeated odd factors contract";
  return nf_mode_name(mode_) +
         ": Laurent prefix t^a first, then d_0 powers, then centrals < current symbols (generator "
         "id, then index ascending) < Witt-type symbols with nonzero index (index ascending); "
         "t^a t^b merges to t^{a+b}, t^0 = 1";
}

std::string EnvelopingEngine::to_string(const UElement& e) const {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const RingSpec* ring = &alg_.ring();
  for (const auto& [w, c] : e) {
    if (!first) os << " + ";
    first = false;
    std::string coeff = c.to_string();
    if (!c.im().is_zero()) coeff = "(" + coeff + ")";
    os << coeff;
    for (const BasisSymbol& s : w) os << "*" << symbol_to_string(s, ring);
  }
  return os.str();
}

UElement EnvelopingEngine::parse(const std::string& text) const {
  std::string trimmed = text;
  {
    size_t a = trimmed.find_first_not_of(" \t");
    size_t b = trimmed.find_last_not_of(" \t");
    trimmed = (a == std::string::npos) ? "" : trimmed.substr(a, b - a + 1);
  }
  RawExpr expr;
  if (trimmed.empty() || trimmed == "0") return {};

  // Split top-level " + " into terms, then each term on top-level '*'.
  std::vector<std::string> terms;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < trimmed.size(); ++i) {
    if (trimmed[i] == '(') ++depth;
    if (trimmed[i] == ')') --depth;
    if (depth == 0 && trimmed[i] == '+' && i > 0 && trimmed[i - 1] == ' ' &&
        i + 1 < trimmed.size() && trimmed[i + 1] == ' ') {
      terms.push_back(trimmed.substr(start, i - 1 - start));
      start = i + 2;
    }
  }
  terms.push_back(trimmed.substr(start));

  const RingSpec* ring = &alg_.ring();
  for (const std::string& term : terms) {
    std::vector<std::string> factors;
    depth = 0;
    start = 0;
    for (size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(') ++depth;
      if (term[i] == ')') --depth;
      if (depth == 0 && term[i] == '*') {
        factors.push_back(term.substr(start, i - start));
        start = i + 1;
      }
    }
    factors.push_back(term.substr(start));

    RawTerm t{Scalar(1), {}};
    bool saw_coeff = false;
    for (size_t f = 0; f < factors.size(); ++f) {
      std::string tok = factors[f];
      size_t a = tok.find_first_not_of(" \t");
      size_t b = tok.find_last_not_of(" \t");
      tok = (a == std::string::npos) ? "" : tok.substr(a, b - a + 1);
      if (tok.empty()) throw ParseError("empty factor in term '" + term + "'");
      bool is_coeff_candidate = f == 0 && !saw_coeff;
      if (is_coeff_candidate) {
        if (tok.front() == '(' && tok.back() == ')') {
          t.coeff = Scalar::parse(tok.substr(1, tok.size() - 2));
          saw_coeff = true;
          continue;
        }
        if (std::isdigit(static_cast<unsigned char>(tok.front())) || tok.front() == '-' ||
            tok.front() == '+') {
          if (tok == "1") {
            // Could be the unit word or coefficient 1; either way reading it
            // as a coefficient is correct.
            saw_coeff = true;
            continue;
          }
          t.coeff = Scalar::parse(tok);
          saw_coeff = true;
          continue;
        }
      }
      if (tok == "1") continue;  // unit factor
      t.word.push_back(parse_symbol(tok, ring));
    }
    expr.push_back(std::move(t));
  }
  return normal_form(expr);
}

std::string DifferentiatorSpec::to_string() const {
  std::ostringstream os;
  if (variant == Variant::Omega)
    os << "Omega(m=" << m << ",k=" << k << ",s=" << s << ")";
  else
    os << "OmegaBar(m=" << m << ",j=" << j << ",p=" << p << ",gen=" << gen << ")";
  return os.str();
}

RawExpr differentiator_terms(const Algebra& alg, const DifferentiatorSpec& spec) {
  RawExpr out;
  for (int i = 0; i <= spec.m; ++i) {
    Scalar c = binomial(spec.m, i);
    if (i % 2) c = -c;
    Word w;
    if (spec.variant == DifferentiatorSpec::Variant::Omega) {
      w = {alg.witt_symbol(spec.k - i), alg.witt_symbol(spec.s + i)};
    } else {
      w = {alg.current_symbol(spec.gen, spec.j - i), alg.witt_symbol(spec.p + i)};
    }
    out.push_back({c, std::move(w)});
  }
  return out;
}

UElement differentiator(const EnvelopingEngine& eng, const DifferentiatorSpec& spec) {
  return eng.normal_form(differentiator_terms(eng.algebra(), spec));
}

CollapseReport check_collapse_identity(const EnvelopingEngine& eng, int m, long long j, long long k,
                                       long long p, int32_t gen) {
  const Algebra& alg = eng.algebra();
  auto omega = [&](long long kk, long long ss) {
    DifferentiatorSpec s;
    s.variant = DifferentiatorSpec::Variant::Omega;
    s.m = m;
    s.k = kk;
    s.s = ss;
    return differentiator(eng, s);
  };
  auto x_word = [&](long long idx) -> UElement {
    return {{Word{alg.current_symbol(gen, idx)}, Scalar(1)}};
  };

  // [x(j+1), Om_{k,p-1}] - 2[x(j), Om_{k,p}] + [x(j-1), Om_{k,p+1}]
  // - [x(j), Om_{k+1,p-1}] + 2[x(j-1), Om_{k+1,p}] - [x(j-2), Om_{k+1,p+1}].
  CollapseReport rep;
  rep.lhs = eng.commutator(x_word(j + 1), omega(k, p - 1));
  rep.lhs = u_sub(rep.lhs, u_scale(Scalar(2), eng.commutator(x_word(j), omega(k, p))));
  rep.lhs = u_add(rep.lhs, eng.commutator(x_word(j - 1), omega(k, p + 1)));
  rep.lhs = u_sub(rep.lhs, eng.commutator(x_word(j), omega(k + 1, p - 1)));
  rep.lhs = u_add(rep.lhs, u_scale(Scalar(2), eng.commutator(x_word(j - 1), omega(k + 1, p))));
  rep.lhs = u_sub(rep.lhs, eng.commutator(x_word(j - 2), omega(k + 1, p + 1)));

  Scalar factor = alg.beta_of(gen) - Scalar(1);
  RawExpr rhs_terms;
  for (int i = 0; i <= m + 2; ++i) {
    Scalar c = factor * binomial(m + 2, i);
    if (i % 2) c = -c;
    rhs_terms.push_back({c, {alg.current_symbol(gen, j + k + 1 - i), alg.witt_symbol(p - 1 + i)}});
  }
  rep.rhs = eng.normal_form(rhs_terms);
  rep.residual = u_sub(rep.lhs, rep.rhs);
  rep.holds = rep.residual.empty();
  return rep;
}

UElement iota_decompose(const EnvelopingEngine& src, const EnvelopingEngine& dst, const UElement& u) {
  if (src.mode() != NfMode::Ubar || dst.mode() != NfMode::Tensor)
    throw NfError("iota_decompose maps the Ubar engine into the Tensor engine");
  UElement nf = src.normal_form(u);
  UElement out;
  for (const auto& [w, c] : nf) {
    UElement acc = u_one();
    for (const BasisSymbol& s : w) {
      UElement image;
      switch (s.tag) {
        case Tag::T:
        case Tag::Central:
          image = {{Word{s}, Scalar(1)}};
          break;
        case Tag::D:
          if (s.index == 0) {
            image = {{Word{s}, Scalar(1)}};
          } else {
            // d_i = t^i tau_i + t^i d_0.
            image = {{Word{sym_t(s.index), sym_tau_d(s.index)}, Scalar(1)},
                     {Word{sym_t(s.index), sym_d(0)}, Scalar(1)}};
          }
          break;
        case Tag::X:
          // x_s(k) = t^k sigma_{s,k}.
          image = {{Word{sym_t(s.index), sym_tau_x(s.gen, s.index)}, Scalar(1)}};
          break;
        default:
          throw NfError("iota_decompose: unsupported factor " + symbol_to_string(s));
      }
      acc = dst.mul(acc, image);
    }
    out = u_add(out, u_scale(c, acc));
  }
  return out;
}

UElement iota_inverse(const EnvelopingEngine& dst, const EnvelopingEngine& src, const UElement& u) {
  if (src.mode() != NfMode::Ubar || dst.mode() != NfMode::Tensor)
    throw NfError("iota_inverse maps the Tensor engine back into the Ubar engine");
  UElement nf = dst.normal_form(u);
  UElement out;
  for (const auto& [w, c] : nf) {
    UElement acc = u_one();
    for (const BasisSymbol& s : w) {
      UElement image;
      switch (s.tag) {
        case Tag::T:
        case Tag::Central:
          image = {{Word{s}, Scalar(1)}};
          break;
        case Tag::D:
          image = {{Word{s}, Scalar(1)}};  // d_0
          break;
        case Tag::TD:
          // tau_i = t^{-i} d_i - d_0.
          image = {{Word{sym_t(-s.index), sym_d(s.index)}, Scalar(1)}, {Word{sym_d(0)}, Scalar(-1)}};
          break;
        case Tag::TX:
          // sigma_{s,k} = t^{-k} x_s(k).
          image = {{Word{sym_t(-s.index), sym_x(s.gen, s.index)}, Scalar(1)}};
          break;
        default:
          throw NfError("iota_inverse: unsupported factor " + symbol_to_string(s));
      }
      acc = src.mul(acc, image);
    }
    out = u_add(out, u_scale(c, acc));
  }
  return out;
}

namespace {

UElement tau_expr(long long i) {
  return {{Word{sym_t(-i), sym_d(i)}, Scalar(1)}, {Word{sym_d(0)}, Scalar(-1)}};
}

UElement sigma_expr(int32_t s, long long k) {
  return {{Word{sym_t(-k), sym_x(s, k)}, Scalar(1)}};
}

}  // namespace

TClosureReport check_T_closure(const EnvelopingEngine& ubar, const TClosureCase& c) {
  if (ubar.mode() != NfMode::Ubar) throw NfError("check_T_closure runs in the Ubar engine");
  const Algebra& alg = ubar.algebra();
  TClosureReport rep;
  using Kind = TClosureCase::Kind;
  switch (c.kind) {
    case Kind::TauTau: {
      rep.got = ubar.commutator(ubar.normal_form(tau_expr(c.i)), ubar.normal_form(tau_expr(c.j)));
      // = -j tau_j + (j-i) tau_{i+j} + i tau_i  (tau_0 normalizes to 0 by itself).
      UElement e = u_scale(Scalar(-c.j), ubar.normal_form(tau_expr(c.j)));
      e = u_add(e, u_scale(Scalar(c.j - c.i), ubar.normal_form(tau_expr(c.i + c.j))));
      e = u_add(e, u_scale(Scalar(c.i), ubar.normal_form(tau_expr(c.i))));
      rep.expected = e;
      break;
    }
    case Kind::TauSigma: {
      rep.got = ubar.commutator(ubar.normal_form(tau_expr(c.i)), ubar.normal_form(sigma_expr(c.s, c.j)));
      // = (j + i beta_s) sigma_{s,j+i} - j sigma_{s,j}.
      Scalar lead = Scalar(c.j) + Scalar(c.i) * alg.beta_of(c.s);
      UElement e = u_scale(lead, ubar.normal_form(sigma_expr(c.s, c.j + c.i)));
      e = u_sub(e, u_scale(Scalar(c.j), ubar.normal_form(sigma_expr(c.s, c.j))));
      rep.expected = e;
      break;
    }
    case Kind::SigmaSigma: {
      rep.got = ubar.commutator(ubar.normal_form(sigma_expr(c.s, c.i)),
                                ubar.normal_form(sigma_expr(c.p, c.j)));
      UElement e;
      const GSpec* g = alg.g();
      if (g == nullptr) throw NfError("check_T_closure: algebra has no current part");
      for (int q = 0; q < g->dim; ++q)
        e = u_add(e, u_scale(g->cc(c.s, c.p, q), ubar.normal_form(sigma_expr(q, c.i + c.j))));
      rep.expected = e;
      break;
    }
    case Kind::TauLaurent:
      rep.got = ubar.commutator(ubar.normal_form(tau_expr(c.i)),
                                UElement{{Word{sym_t(c.t_power)}, Scalar(1)}});
      break;
    case Kind::SigmaLaurent:
      rep.got = ubar.commutator(ubar.normal_form(sigma_expr(c.s, c.i)),
                                UElement{{Word{sym_t(c.t_power)}, Scalar(1)}});
      break;
    case Kind::TauD0:
      rep.got = ubar.commutator(ubar.normal_form(tau_expr(c.i)), UElement{{Word{sym_d(0)}, Scalar(1)}});
      break;
    case Kind::SigmaD0:
      rep.got = ubar.commutator(ubar.normal_form(sigma_expr(c.s, c.i)),
                                UElement{{Word{sym_d(0)}, Scalar(1)}});
      break;
  }
  rep.pass = rep.got == rep.expected;
  return rep;
}

UElement extract_component(const UElement& u, const ComponentPattern& pattern) {
  UElement out;
  for (const auto& [w, c] : u) {
    int centrals = 0, matching_central = 0, currents = 0, non_central = 0;
    for (const BasisSymbol& s : w) {
      if (s.tag == Tag::Central) {
        ++centrals;
        if (s.gen == pattern.central_id) ++matching_central;
      } else {
        ++non_central;
        if (s.tag == Tag::X || s.tag == Tag::E || s.tag == Tag::H || s.tag == Tag::G ||
            s.tag == Tag::TX)
          ++currents;
      }
    }
    bool keep = false;
    switch (pattern.kind) {
      case ComponentPattern::Kind::CentralLinear:
        keep = centrals == 1 && matching_central == 1;
        break;
      case ComponentPattern::Kind::GeneratorLinear:
        keep = currents == 1 && centrals == 0;
        break;
      case ComponentPattern::Kind::Quadratic:
        keep = non_central == 2;
        break;
    }
    if (keep) out.emplace(w, c);
  }
  return out;
}

}  // namespace virw
