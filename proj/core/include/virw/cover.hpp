#pragma once
#include <map>
#include <string>
#include <vector>

#include "virw/modules.hpp"

namespace virw {

/// Formal combination of generators mu(x, u): x a basis symbol of the chosen
/// generating part (Witt symbols or current symbols), u a module vector.
/// Scalar multiples are absorbed into u, so equal symbols merge.
class CoverElement {
public:
  using Terms = std::map<BasisSymbol, ModuleVector, SymbolLess>;

  void add(const BasisSymbol& x, const ModuleVector& u, const Scalar& coeff = Scalar(1));
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  CoverElement& operator+=(const CoverElement& o);
  CoverElement& operator*=(const Scalar& c);
  bool operator==(const CoverElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const CoverElement& o) const { return !(*this == o); }

  /// "mu(SYM; vector)" joined by " + "; "0" when empty.
  std::string to_string() const;

private:
  Terms terms_;
};

/// The functional cover of a weight module: generators mu(x, u) regarded as
/// maps on the Laurent line via mu(x, u)(t^r) = (t^r x) u, where t^r shifts
/// the Laurent index of x by r.  Carries the twisted action making the cover
/// an A-module: Laurent factors shift the generator symbol, algebra symbols
/// act by l mu(x,u) = mu([l,x], u) + (-1)^{|l||x|} mu(x, l u).
class Cover {
public:
  /// Chooses the generating part: current symbols when the current part acts
  /// nontrivially somewhere on the probe window, Witt symbols otherwise.
  /// Requires a centerless catalog algebra with a Witt part.
  explicit Cover(ModulePtr m, int probe_window = 3);

  const WeightModule& module() const { return *module_; }
  bool uses_witt_symbols() const { return witt_; }
  /// Number of generator families (1 for the Witt part, current_dim otherwise).
  int generator_families() const;
  /// The generator symbol for family s at Laurent index k.
  BasisSymbol generator_symbol(int32_t s, int64_t k) const;

  /// mu(x, u); validates that x belongs to the chosen generating part.
  CoverElement mu(const BasisSymbol& x, ModuleVector u) const;

  ModuleVector evaluate(const CoverElement& c, int64_t r) const;
  /// Evaluation at 0; intertwines the cover action with the module action.
  ModuleVector project(const CoverElement& c) const;

  CoverElement act_symbol(const BasisSymbol& l, const CoverElement& c) const;
  CoverElement act(const Element& l, const CoverElement& c) const;

  /// Rewrites mu(x, u) (u homogeneous of degree q) as a combination supported
  /// on degrees |q'| <= m/2, using the order-m alternating-binomial relation
  /// with the weight of q as the pivot.  Requires every such relation to
  /// annihilate the module (order m from min_annihilating_order).
  /// Throws when a pivot weight vanishes.
  CoverElement reduce_generator(const BasisSymbol& x, const ModuleVector& u, int m) const;

private:
  ModulePtr module_;
  bool witt_ = false;
  void check_generator(const BasisSymbol& x) const;
};

struct CoverRankReport {
  int rank = 0;
  bool stabilized = false;            // rank(window) == rank(window + m)
  std::vector<std::string> generators;  // the spanning set, printed
};

/// Rank of the weight-(p) spanning set {mu(x_s(p-k), basis of degree k) :
/// |k| <= m/2} under evaluation at |r| <= window.  Independence is exact;
/// dependence is evidence, qualified by the stabilization flag.
CoverRankReport cover_weight_rank(const Cover& cover, int64_t p, int m, int window);

}  // namespace virw
