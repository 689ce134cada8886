#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "virw/element.hpp"
#include "virw/gspec.hpp"
#include "virw/ring.hpp"

namespace virw {

/// Catalog of Lie (super)algebra families.  All are Z-graded by the
/// ad(d_0)-weight of the Laurent index.
enum class Family {
  Witt,                 // D(i): [d_m, d_n] = (n-m) d_{m+n}
  ExtendedWitt,         // + T(k) abelian, [d_i, t^k] = k t^{i+k}
  WittCurrent,          // D + currents X(s,k) over a GSpec
  ExtendedWittCurrent,  // WittCurrent + T(k)
  HVBeta,               // D, E, centrals: central extensions parametrized by beta
  AffineVirasoro,       // D, X, C: Virasoro + affinization (needs beta = 0 and a form)
  SuperHV,              // L, H, G (odd), C
  DerExt,               // GD, GX(s): the degree-zero slice C dbar + g
  Tau,                  // TD(i), TX(s,k): weight-zero subalgebra, plus T/D(0) prefix
  Map,                  // base tensor a supercommutative ring R
};

std::string family_name(Family f);

struct AlgebraOptions {
  bool validate = true;  // set false for negative-control constructions
};

/// Immutable handle to a catalog algebra: parity, structural bracket on basis
/// symbols, and finite basis windows for sweeps.  Cheap to copy.
class Algebra {
public:
  Family family() const;
  const std::string& label() const;
  /// The finite algebra datum, when the family has a current part.
  const GSpec* g() const;
  /// Coefficient ring (Map family only; trivial ring otherwise).
  const RingSpec& ring() const;
  const Algebra* base() const;  // Map family only
  /// The beta parameter of the HVBeta family.
  const Scalar& beta_param() const;

  bool owns(const BasisSymbol& sym) const;
  int parity(const BasisSymbol& sym) const;  // 0/1; throws on foreign symbols

  /// Structural bracket of two basis symbols.  Throws CatalogError on symbols
  /// the algebra does not own, naming the symbol.
  Element bracket_basis(const BasisSymbol& a, const BasisSymbol& b) const;
  /// Bilinear extension.
  Element bracket(const Element& a, const Element& b) const;

  /// All basis symbols with Laurent index in [-window, window] (centrals and
  /// index-free symbols included once), in canonical order.
  std::vector<BasisSymbol> basis_window(int window) const;

  /// Central charge ids present (empty for centerless families).
  std::vector<int32_t> centrals() const;
  /// Number of current generators (g-dim; 1 for HVBeta's E, 2 for SuperHV's H/G).
  int current_dim() const;
  /// The current symbol for generator s at Laurent index k (X/E/H/G by family).
  BasisSymbol current_symbol(int32_t s, int64_t k) const;
  /// The Witt-type symbol at index i (L for SuperHV, D otherwise).
  BasisSymbol witt_symbol(int64_t i) const;
  /// Derivation eigenvalue beta_s of generator s (current families).
  Scalar beta_of(int32_t s) const;

  bool has_laurent_part() const;  // T symbols owned
  std::string describe() const;

  // --- constructors ---
  static Algebra witt();
  static Algebra extended_witt();
  static Algebra witt_current(const GSpec& g, bool extended, AlgebraOptions opt = {});
  static Algebra hv_beta(const Scalar& beta);
  static Algebra affine_virasoro(const GSpec& g, AlgebraOptions opt = {});
  static Algebra super_hv();
  /// WittCurrent over the Heisenberg GSpec, x/y eigenvalues (beta, -beta).
  static Algebra witt_heisenberg(const Scalar& beta);
  static Algebra der_ext(const GSpec& g, AlgebraOptions opt = {});
  /// Weight-zero subalgebra datum for the given GSpec (pass std::nullopt for
  /// the plain Witt case with no currents).
  static Algebra tau(const std::optional<GSpec>& g, AlgebraOptions opt = {});
  static Algebra map(const Algebra& base, const RingSpec& ring, AlgebraOptions opt = {});

private:
  std::shared_ptr<const struct AlgebraData> d_;
  explicit Algebra(std::shared_ptr<const struct AlgebraData> d) : d_(std::move(d)) {}
};

/// Failed axiom instance: which law, on which symbols, with the nonzero
/// residual element.
struct AxiomWitness {
  std::string law;
  std::vector<BasisSymbol> syms;
  Element residual;
};

struct AxiomReport {
  bool pass = true;
  std::optional<AxiomWitness> witness;
  long pairs_checked = 0;
  long triples_checked = 0;
};

/// Sweep over basis_window(window): degree additivity and parity consistency
/// of every bracket output, super-antisymmetry on all pairs, and the super
/// Jacobi identity on canonically sorted triples (sufficient once antisymmetry
/// holds).  Stops at the first failure and records a witness.
AxiomReport verify_axioms(const Algebra& alg, int window);

}  // namespace virw
