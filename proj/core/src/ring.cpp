#include "virw/ring.hpp"

#include <algorithm>
#include <sstream>

namespace virw {
namespace {

int popcount32(uint32_t v) {
  int c = 0;
  for (; v; v &= v - 1) ++c;
  return c;
}

// Sign of sorting the concatenation (ascending a-bits)(ascending b-bits) into
// ascending order: (-1)^{#{(i,j) : i in a, j in b, i > j}}.
int grassmann_sign(uint32_t a, uint32_t b) {
  int inversions = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(a >> i & 1)) continue;
    for (int j = 0; j < i; ++j)
      if (b >> j & 1) ++inversions;
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace

RingSpec RingSpec::trivial() {
  RingSpec r;
  r.family_ = Family::Trivial;
  r.monomials_ = {{"1", 0, false}};
  r.table_ = {{Scalar(1), 0}};
  return r;
}

RingSpec RingSpec::grassmann(int n) {
  if (n < 0 || n > 9) throw CatalogError("grassmann: variable count must be in [0, 9]");
  RingSpec r;
  r.family_ = Family::Grassmann;
  uint32_t size = 1u << n;
  r.monomials_.resize(size);
  for (uint32_t mask = 0; mask < size; ++mask) {
    std::string name;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) name += "x" + std::to_string(i + 1);
    if (name.empty()) name = "1";
    r.monomials_[mask] = {name, popcount32(mask) % 2, mask != 0};
  }
  r.table_.resize(size * size);
  for (uint32_t a = 0; a < size; ++a)
    for (uint32_t b = 0; b < size; ++b) {
      ProductTerm& t = r.table_[a * size + b];
      if (a & b) {
        t = {Scalar(0), 0};
      } else {
        t = {Scalar(grassmann_sign(a, b)), a | b};
      }
    }
  r.build_table_metadata();
  return r;
}

RingSpec RingSpec::trunc_poly(int k) {
  if (k < 1) throw CatalogError("trunc_poly: truncation order must be >= 1");
  RingSpec r;
  r.family_ = Family::TruncPoly;
  r.monomials_.resize(k);
  for (int a = 0; a < k; ++a) {
    std::string name = "1";
    if (a > 0) {
      name.clear();
      for (int i = 0; i < a; ++i) name += "e";
    }
    r.monomials_[a] = {name, 0, a != 0};
  }
  r.table_.resize(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      ProductTerm& t = r.table_[static_cast<size_t>(a) * k + b];
      if (a + b >= k)
        t = {Scalar(0), 0};
      else
        t = {Scalar(1), static_cast<uint32_t>(a + b)};
    }
  r.build_table_metadata();
  return r;
}

RingSpec RingSpec::product(const std::vector<RingSpec>& factors_in) {
  // Flatten nested products so generator renaming stays single-level.
  std::vector<RingSpec> factors;
  for (const RingSpec& f : factors_in) {
    if (f.family_ == Family::Product)
      throw CatalogError("product: nested products are not supported; pass a flat factor list");
    factors.push_back(f);
  }
  if (factors.empty()) return trivial();
  if (factors.size() == 1) return factors[0];

  // Rename generators to keep monomial names globally unique: Grassmann
  // variables are numbered consecutively across factors, truncated-polynomial
  // variables use successive letters e, f, g, h.
  int grassmann_seen = 0;
  int trunc_seen = 0;
  const char trunc_letters[] = {'e', 'f', 'g', 'h'};
  for (RingSpec& f : factors) {
    if (f.family_ == Family::Grassmann) {
      int n = 0;
      while ((1u << n) < f.size()) ++n;
      if (grassmann_seen + n > 9)
        throw CatalogError("product: at most 9 Grassmann variables in total");
      for (uint32_t mask = 1; mask < f.size(); ++mask) {
        std::string name;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) name += "x" + std::to_string(grassmann_seen + i + 1);
        f.monomials_[mask].name = name;
      }
      grassmann_seen += n;
    } else if (f.family_ == Family::TruncPoly) {
      if (trunc_seen >= 4)
        throw CatalogError("product: at most 4 truncated-polynomial factors");
      char letter = trunc_letters[trunc_seen++];
      for (uint32_t a = 1; a < f.size(); ++a) {
        std::string name;
        for (uint32_t i = 0; i < a; ++i) name += letter;
        f.monomials_[a].name = name;
      }
    }
  }

  RingSpec r;
  r.family_ = Family::Product;
  uint32_t size = 1;
  for (const RingSpec& f : factors) size *= f.size();
  if (size > 4096) throw CatalogError("product: ring dimension exceeds 4096");

  // Mixed-radix index: slot 0 is the fastest-varying digit.
  auto decode = [&](uint32_t idx) {
    std::vector<uint32_t> parts(factors.size());
    for (size_t j = 0; j < factors.size(); ++j) {
      parts[j] = idx % factors[j].size();
      idx /= factors[j].size();
    }
    return parts;
  };

  r.monomials_.resize(size);
  for (uint32_t idx = 0; idx < size; ++idx) {
    std::vector<uint32_t> parts = decode(idx);
    std::string name;
    int parity = 0;
    bool nilp = false;
    for (size_t j = 0; j < factors.size(); ++j) {
      const Monomial& m = factors[j].monomials_[parts[j]];
      if (parts[j] != 0) {
        if (!name.empty()) name += "_";
        name += m.name;
      }
      parity ^= m.parity;
      nilp = nilp || m.nilpotent;
    }
    if (name.empty()) name = "1";
    r.monomials_[idx] = {name, parity, nilp};
  }

  r.table_.resize(static_cast<size_t>(size) * size);
  for (uint32_t a = 0; a < size; ++a) {
    std::vector<uint32_t> pa = decode(a);
    for (uint32_t b = 0; b < size; ++b) {
      std::vector<uint32_t> pb = decode(b);
      // (a_0 x...x a_f)(b_0 x...x b_f): moving b_l leftwards past a_{l+1}..a_f
      // contributes (-1)^{|b_l| * sum_{j>l} |a_j|}.
      Scalar coeff(1);
      uint32_t idx = 0;
      uint32_t stride = 1;
      int sign_exp = 0;
      for (size_t l = 0; l < factors.size(); ++l) {
        int upper_parity = 0;
        for (size_t j = l + 1; j < factors.size(); ++j)
          upper_parity ^= factors[j].monomials_[pa[j]].parity;
        if (factors[l].monomials_[pb[l]].parity && upper_parity) sign_exp ^= 1;
        ProductTerm t = factors[l].multiply(pa[l], pb[l]);
        coeff = coeff * t.coeff;
        idx += t.index * stride;
        stride *= factors[l].size();
      }
      if (sign_exp) coeff = -coeff;
      if (coeff.is_zero()) idx = 0;
      r.table_[static_cast<size_t>(a) * size + b] = {coeff, idx};
    }
  }
  r.build_table_metadata();
  return r;
}

void RingSpec::build_table_metadata() {
  generators_.clear();
  factorizations_.assign(size(), {0, 0});
  if (family_ == Family::Trivial) return;

  // Generators: monomials that are not products of two non-identity monomials.
  std::vector<bool> composite(size(), false);
  for (uint32_t a = 1; a < size(); ++a)
    for (uint32_t b = 1; b < size(); ++b) {
      const ProductTerm& t = table_[static_cast<size_t>(a) * size() + b];
      if (!t.coeff.is_zero() && t.index != 0) composite[t.index] = true;
    }
  for (uint32_t m = 1; m < size(); ++m)
    if (!composite[m]) generators_.push_back(m);

  // Factorization m = g * rest with coefficient exactly 1, rest < m.
  for (uint32_t m = 1; m < size(); ++m) {
    bool found = false;
    for (uint32_t g : generators_) {
      for (uint32_t rest = 0; rest < m && !found; ++rest) {
        const ProductTerm& t = table_[static_cast<size_t>(g) * size() + rest];
        if (t.index == m && t.coeff == Scalar(1)) {
          factorizations_[m] = {g, rest};
          found = true;
        }
      }
      if (found) break;
    }
    if (!found && !composite[m]) factorizations_[m] = {m, 0};
  }
}

uint32_t RingSpec::monomial_by_name(const std::string& name) const {
  for (uint32_t i = 0; i < size(); ++i)
    if (monomials_[i].name == name) return i;
  throw ParseError("unknown ring monomial '" + name + "' in " + describe());
}

RingSpec::ProductTerm RingSpec::multiply(uint32_t a, uint32_t b) const {
  if (a >= size() || b >= size()) throw CatalogError("ring monomial index out of range");
  return table_[static_cast<size_t>(a) * size() + b];
}

std::pair<uint32_t, uint32_t> RingSpec::factorization(uint32_t idx) const {
  if (idx == 0 || idx >= size()) throw CatalogError("factorization: index must be a non-identity monomial");
  return factorizations_[idx];
}

void RingSpec::validate() const {
  // Unit row and column.
  for (uint32_t a = 0; a < size(); ++a) {
    ProductTerm left = multiply(0, a);
    ProductTerm right = multiply(a, 0);
    if (left.coeff != Scalar(1) || left.index != a || right.coeff != Scalar(1) || right.index != a)
      throw CatalogError("ring: monomial 0 is not a two-sided identity at " + monomial_name(a));
  }
  // Supercommutativity: a*b = (-1)^{|a||b|} b*a.
  for (uint32_t a = 0; a < size(); ++a)
    for (uint32_t b = 0; b < size(); ++b) {
      ProductTerm ab = multiply(a, b);
      ProductTerm ba = multiply(b, a);
      Scalar flipped = (parity(a) && parity(b)) ? -ba.coeff : ba.coeff;
      bool same = ab.coeff.is_zero() ? flipped.is_zero() : (ab.index == ba.index && ab.coeff == flipped);
      if (!same)
        throw CatalogError("ring: supercommutativity fails at " + monomial_name(a) + " * " + monomial_name(b));
    }
  // Associativity; for large rings restrict the left slot to generators
  // (generators generate, and bilinearity covers the rest).
  std::vector<uint32_t> left_slots;
  if (size() <= 32)
    for (uint32_t a = 0; a < size(); ++a) left_slots.push_back(a);
  else
    left_slots = generators_;
  for (uint32_t a : left_slots)
    for (uint32_t b = 0; b < size(); ++b)
      for (uint32_t c = 0; c < size(); ++c) {
        ProductTerm ab = multiply(a, b);
        ProductTerm ab_c = ab.coeff.is_zero() ? ProductTerm{Scalar(0), 0} : multiply(ab.index, c);
        Scalar lhs = ab.coeff * ab_c.coeff;
        ProductTerm bc = multiply(b, c);
        ProductTerm a_bc = bc.coeff.is_zero() ? ProductTerm{Scalar(0), 0} : multiply(a, bc.index);
        Scalar rhs = bc.coeff * a_bc.coeff;
        bool same = lhs.is_zero() ? rhs.is_zero() : (ab_c.index == a_bc.index && lhs == rhs);
        if (!same)
          throw CatalogError("ring: associativity fails at (" + monomial_name(a) + ", " + monomial_name(b) +
                             ", " + monomial_name(c) + ")");
      }
}

std::string RingSpec::describe() const {
  switch (family_) {
    case Family::Trivial:
      return "C";
    case Family::Grassmann: {
      int n = 0;
      while ((1u << n) < size()) ++n;
      return "Grassmann(" + std::to_string(n) + ")";
    }
    case Family::TruncPoly:
      return "C[e]/(e^" + std::to_string(size()) + ")";
    case Family::Product:
      return "product ring, dim " + std::to_string(size());
  }
  return "?";
}

PsiSpec PsiSpec::make(const RingSpec& ring, const std::map<std::string, Scalar>& generator_values) {
  PsiSpec psi;
  psi.ring_ = ring;
  psi.values_.assign(ring.size(), Scalar(0));
  psi.values_[0] = Scalar(1);

  std::vector<bool> consumed_names_ok(1, true);
  std::map<std::string, bool> used;
  for (const auto& [name, value] : generator_values) used[name] = false;

  std::vector<Scalar> gen_value(ring.size(), Scalar(0));
  for (uint32_t g : ring.generators()) {
    const std::string& name = ring.monomial_name(g);
    auto it = generator_values.find(name);
    if (it != generator_values.end()) {
      gen_value[g] = it->second;
      used[name] = true;
    } else if (ring.parity(g) || ring.nilpotent(g)) {
      gen_value[g] = Scalar(0);  // forced
    } else {
      throw CatalogError("psi: generator '" + name + "' has no assigned value");
    }
    psi.values_[g] = gen_value[g];
  }
  for (const auto& [name, was_used] : used)
    if (!was_used) throw CatalogError("psi: value given for unknown generator '" + name + "'");

  // Fill remaining monomials via their factorization (rest index < monomial
  // index, so increasing order is a valid evaluation order).
  for (uint32_t m = 1; m < ring.size(); ++m) {
    auto [g, rest] = ring.factorization(m);
    if (g == m && rest == 0) continue;  // generator, already set
    psi.values_[m] = psi.values_[g] * psi.values_[rest];
  }

  // Homomorphism property over the whole table.  This is what forces psi to
  // vanish on odd and nilpotent elements: e.g. psi(x)^2 = psi(x*x) = 0.
  for (uint32_t a = 0; a < ring.size(); ++a)
    for (uint32_t b = 0; b < ring.size(); ++b) {
      RingSpec::ProductTerm t = ring.multiply(a, b);
      Scalar lhs = psi.values_[a] * psi.values_[b];
      Scalar rhs = t.coeff * psi.values_[t.index];
      if (lhs != rhs)
        throw CatalogError("psi: not multiplicative at " + ring.monomial_name(a) + " * " + ring.monomial_name(b) +
                           " (psi(a)psi(b) = " + lhs.to_string() + ", psi(ab) = " + rhs.to_string() + ")");
    }
  return psi;
}

Scalar PsiSpec::apply_linear(const std::map<uint32_t, Scalar>& elem) const {
  Scalar out(0);
  for (const auto& [idx, c] : elem) out = out + c * values_.at(idx);
  return out;
}

}  // namespace virw
