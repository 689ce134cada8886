#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "virw/scalars.hpp"

namespace virw {

/// Thrown by catalog constructors and validators on inconsistent input.
struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite-dimensional supercommutative unital coefficient ring, given by a
/// monomial basis and its multiplication table.  Monomial 0 is always the
/// identity.  Supported families: the trivial ring C, Grassmann algebras in n
/// odd variables, truncated polynomial rings C[e]/(e^k), and finite products
/// (tensor products) of these.
class RingSpec {
public:
  enum class Family { Trivial, Grassmann, TruncPoly, Product };

  struct Monomial {
    std::string name;  // "x1", "x1x2", "e", "e2", ... ("1" for the identity)
    int parity = 0;
    bool nilpotent = false;  // true for every non-identity monomial in the catalog
  };

  /// Product of two basis monomials: coeff * monomial(index); coeff may be 0.
  struct ProductTerm {
    Scalar coeff;
    uint32_t index = 0;
  };

  static RingSpec trivial();
  static RingSpec grassmann(int n);
  static RingSpec trunc_poly(int k);  // C[e]/(e^k), k >= 1
  static RingSpec product(const std::vector<RingSpec>& factors);

  Family family() const { return family_; }
  uint32_t size() const { return static_cast<uint32_t>(monomials_.size()); }
  bool is_trivial() const { return size() == 1; }
  int parity(uint32_t idx) const { return monomials_.at(idx).parity; }
  bool nilpotent(uint32_t idx) const { return monomials_.at(idx).nilpotent; }
  const std::string& monomial_name(uint32_t idx) const { return monomials_.at(idx).name; }
  uint32_t monomial_by_name(const std::string& name) const;  // throws ParseError

  ProductTerm multiply(uint32_t a, uint32_t b) const;

  /// Indices of the distinguished ring generators (xi_i resp. e per factor).
  const std::vector<uint32_t>& generators() const { return generators_; }
  /// For a non-identity monomial m, a pair (g, rest) of basis indices with
  /// g a generator and g*rest = m exactly (coefficient 1 by construction).
  std::pair<uint32_t, uint32_t> factorization(uint32_t idx) const;

  /// Supercommutativity and associativity of the table; unit row/column.
  void validate() const;

  std::string describe() const;

private:
  Family family_ = Family::Trivial;
  std::vector<Monomial> monomials_;
  std::vector<ProductTerm> table_;  // size() x size(), row-major
  std::vector<uint32_t> generators_;
  std::vector<std::pair<uint32_t, uint32_t>> factorizations_;  // per monomial; {0,0} for identity

  void build_table_metadata();
};

/// An algebra character psi: R -> C.  Values on all basis monomials, derived
/// from generator values.  Construction validates the homomorphism property on
/// the full multiplication table and the forced vanishing on odd and nilpotent
/// elements.
class PsiSpec {
public:
  /// generator_values maps generator monomial names to values; generators that
  /// are forced to 0 (odd or nilpotent) may be omitted.
  static PsiSpec make(const RingSpec& ring, const std::map<std::string, Scalar>& generator_values);

  const RingSpec& ring() const { return ring_; }
  const Scalar& apply(uint32_t monomial) const { return values_.at(monomial); }
  /// Linear extension to a ring element given as monomial -> coefficient.
  Scalar apply_linear(const std::map<uint32_t, Scalar>& elem) const;

private:
  RingSpec ring_;
  std::vector<Scalar> values_;
};

}  // namespace virw
