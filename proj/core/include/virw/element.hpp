#pragma once
#include <map>
#include <string>

#include "virw/scalars.hpp"
#include "virw/symbols.hpp"

namespace virw {

class RingSpec;

/// Finite linear combination of basis symbols with exact coefficients.
/// Zero coefficients are never stored, so operator== is structural equality.
class Element {
public:
  using Terms = std::map<BasisSymbol, Scalar, SymbolLess>;

  Element() = default;
  static Element term(const BasisSymbol& s, const Scalar& c = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Scalar coeff(const BasisSymbol& s) const;

  void add_term(const BasisSymbol& s, const Scalar& c);

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element& operator+=(const Element& o);
  friend Element operator*(const Scalar& c, const Element& e);
  bool operator==(const Element& o) const { return terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  /// Split into homogeneous parts keyed by symbol degree.  Symbols without a
  /// degree (centrals) are collected under key 0.
  std::map<int64_t, Element> degree_decompose() const;

  /// "c*SYM + c*SYM + ...", symbols in canonical order; "0" when empty.
  /// Coefficients with an imaginary part are parenthesized.
  std::string to_string(const RingSpec* ring = nullptr) const;
  static Element parse(const std::string& text, const RingSpec* ring = nullptr);

private:
  Terms terms_;
};

}  // namespace virw
