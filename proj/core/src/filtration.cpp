#include "virw/filtration.hpp"

#include <map>
#include <vector>

namespace virw {

Element expand_witt_filtration(long long k, long long i) {
  Element out;
  for (long long j = 0; j <= k; ++j) {
    Scalar c = binomial(k, j);
    if ((k - j) % 2) c = -c;
    out.add_term(sym_d(i + j), c);
  }
  return out;
}

Element expand_current_filtration(int32_t s, long long k, long long i) {
  Element out;
  for (long long j = 0; j <= k; ++j) {
    Scalar c = binomial(k, j);
    if ((k - j) % 2) c = -c;
    out.add_term(sym_x(s, i + j), c);
  }
  return out;
}

namespace {

// Vanishing order of sum_i c_i t^i at t = 1 (the support is finite and
// nonempty).  Iterated deflation: divide by (t - 1) while the value at 1 is 0.
long long order_at_one(const std::map<int64_t, Scalar>& coeffs) {
  int64_t lo = coeffs.begin()->first;
  int64_t hi = coeffs.rbegin()->first;
  std::vector<Scalar> p(static_cast<size_t>(hi - lo + 1), Scalar(0));
  for (const auto& [i, c] : coeffs) p[static_cast<size_t>(i - lo)] = c;

  long long order = 0;
  for (;;) {
    Scalar at_one(0);
    for (const Scalar& c : p) at_one += c;
    if (!at_one.is_zero()) return order;
    // Synthetic division by (t - 1), exact because the remainder p(1) is 0.
    size_t deg = p.size() - 1;
    std::vector<Scalar> q(deg, Scalar(0));
    Scalar carry(0);
    for (size_t j = deg; j >= 1; --j) {
      carry += p[j];
      q[j - 1] = carry;
    }
    p = std::move(q);
    ++order;
    if (p.empty()) throw FiltrationError("internal: deflation exhausted a nonzero polynomial");
  }
}

struct SplitParts {
  std::map<int64_t, Scalar> witt;
  // Current coefficients per (tag, generator id).
  std::map<std::pair<int, int32_t>, std::map<int64_t, Scalar>> current;
};

SplitParts split(const Element& a) {
  SplitParts parts;
  for (const auto& [sym, c] : a.terms()) {
    switch (sym.tag) {
      case Tag::D:
        parts.witt[sym.index] = c;
        break;
      case Tag::X:
      case Tag::E:
      case Tag::H:
      case Tag::G:
        parts.current[{static_cast<int>(sym.tag), sym.gen}][sym.index] = c;
        break;
      default:
        throw FiltrationError("filtration domain is spanned by D and current symbols; got " +
                              symbol_to_string(sym));
    }
  }
  return parts;
}

}  // namespace

bool ValuationAtOne::in_filtration_level(long long k) const {
  bool witt_ok = !witt.has_value() || *witt >= k + 1;
  bool current_ok = !current.has_value() || *current >= k;
  return witt_ok && current_ok;
}

ValuationAtOne valuation_at_one(const Element& a) {
  SplitParts parts = split(a);
  ValuationAtOne v;
  if (!parts.witt.empty()) v.witt = order_at_one(parts.witt);
  for (const auto& [key, coeffs] : parts.current) {
    long long o = order_at_one(coeffs);
    if (!v.current || o < *v.current) v.current = o;
  }
  return v;
}

Element project_to_slice(const Element& a) {
  Element out;
  std::map<int64_t, Scalar> witt;
  std::map<int32_t, Scalar> current_sums;
  for (const auto& [sym, c] : a.terms()) {
    if (sym.tag == Tag::D) {
      witt[sym.index] = c;
    } else if (sym.tag == Tag::X) {
      auto [it, inserted] = current_sums.emplace(sym.gen, c);
      if (!inserted) it->second += c;
    } else {
      throw FiltrationError("slice projection is defined on D and X symbols; got " +
                            symbol_to_string(sym));
    }
  }
  if (!witt.empty()) {
    Scalar value(0), weighted(0);
    for (const auto& [i, c] : witt) {
      value += c;
      weighted += Scalar(i) * c;
    }
    if (!value.is_zero())
      throw FiltrationError("slice projection needs the D part to vanish at t = 1 (value " +
                            value.to_string() + ")");
    out.add_term(sym_ghat_d(), weighted);
  }
  for (const auto& [s, c] : current_sums) out.add_term(sym_ghat_x(s), c);
  return out;
}

}  // namespace virw
