#pragma once
#include <map>
#include <memory>
#include <optional>
#include <utility>

#include "virw/enveloping.hpp"
#include "virw/random.hpp"

namespace virw {

struct ModuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Vector in a weight module with support in a single coset of the integers:
/// coordinates are indexed by (integer degree offset, component within the
/// weight space).  The exact weight of degree j is module-specific (lambda+j).
class ModuleVector {
public:
  using Key = std::pair<int64_t, int32_t>;
  using Entries = std::map<Key, Scalar>;

  ModuleVector() = default;
  static ModuleVector unit(int64_t degree, int32_t component = 0);

  bool is_zero() const { return entries_.empty(); }
  const Entries& entries() const { return entries_; }
  const Scalar& at(int64_t degree, int32_t component) const;  // zero if absent

  void add(int64_t degree, int32_t component, const Scalar& c);

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& operator*=(const Scalar& c);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Scalar& c, ModuleVector v) { return v *= c; }
  bool operator==(const ModuleVector& o) const { return entries_ == o.entries_; }
  bool operator!=(const ModuleVector& o) const { return !(*this == o); }

  /// Degrees carrying nonzero entries, ascending.
  std::vector<int64_t> degrees() const;
  /// The homogeneous part of the given degree.
  ModuleVector slice(int64_t degree) const;
  /// Drop all entries with |degree| > cap.
  ModuleVector truncated(int64_t cap) const;

  /// "c*v(j,comp)" terms joined by " + "; "0" when empty.
  std::string to_string() const;
  /// Accepts the to_string form; "v(j)" is shorthand for "v(j,0)".
  static ModuleVector parse(const std::string& text);

private:
  Entries entries_;
};

/// Finite-dimensional datum for the degree-zero slice: the action of the
/// distinguished even derivation (d_matrix) and of each current generator
/// (x_matrices), on a parity-graded space of dimension dim.
struct FinDimModuleSpec {
  int dim = 1;
  std::vector<int> parity;                      // dim entries; empty = all even
  std::vector<Scalar> d_matrix;                 // dim*dim, row-major
  std::vector<std::vector<Scalar>> x_matrices;  // one dim*dim block per generator
  std::string label;
};

/// The slice-algebra datum a FinDimModuleSpec is validated against,
/// extracted from a catalog algebra: current generators with parities,
/// derivation eigenvalues, and structure constants.
struct SliceInfo {
  int gens = 0;
  std::vector<int> parity;
  std::vector<Scalar> beta;
  std::vector<Scalar> c;  // gens^3, (s*gens+p)*gens+q
  const Scalar& cc(int s, int p, int q) const { return c[(s * gens + p) * gens + q]; }
};

/// Derives the slice datum for algebras with a Witt part; throws for
/// families without one (tau, der_ext) and for map algebras (build
/// evaluation modules over those instead).
SliceInfo slice_info(const Algebra& alg);

/// Index of the slice generator a current-type symbol acts through.
int slice_gen_index(const Algebra& alg, const BasisSymbol& sym);

/// Checks shapes, parity grading, [D, X_s] = beta_s X_s, and the
/// supercommutator closure X_s X_p - (-1)^{|s||p|} X_p X_s = sum_q c X_q.
/// Odd generators must have zero matrices (the catalog constructs slice
/// modules with the odd part acting trivially).  Throws ModuleError.
void validate_findim(const FinDimModuleSpec& spec, const SliceInfo& info);

/// A weight module with support lambda + Z.  Immutable; act_symbol is pure.
class WeightModule {
public:
  virtual ~WeightModule() = default;

  const Algebra& algebra() const { return alg_; }
  virtual int components() const = 0;
  virtual Scalar weight_of(int64_t degree) const = 0;
  /// Whether Laurent factors act associatively (A-module structure).
  virtual bool a_module() const = 0;
  virtual ModuleVector act_symbol(const BasisSymbol& sym, const ModuleVector& v) const = 0;
  virtual std::string describe() const = 0;

protected:
  explicit WeightModule(Algebra alg) : alg_(std::move(alg)) {}
  Algebra alg_;
};

using ModulePtr = std::shared_ptr<const WeightModule>;

/// Linear extension of act_symbol over a catalog element.
ModuleVector act(const WeightModule& m, const Element& a, const ModuleVector& v);
/// Word action, rightmost factor first.
ModuleVector act_word(const WeightModule& m, const Word& w, const ModuleVector& v);
ModuleVector act_U(const WeightModule& m, const UElement& u, const ModuleVector& v);
ModuleVector act_raw(const WeightModule& m, const RawExpr& e, const ModuleVector& v);

/// Intermediate-series module: d_i v_j = (alpha + j + i*beta) v_{i+j},
/// t^i v_j = v_{i+j}, over the Witt or extended Witt algebra.
ModulePtr make_density_module(const Scalar& alpha, const Scalar& beta, bool extended = false);

/// Tensor module over A: degree-j line carries weight lambda + j; the Witt
/// symbol of index i acts by (lambda+j) + i*D on components, current symbols
/// act by their slice matrices, Laurent factors shift the degree, centrals
/// act as zero.
ModulePtr make_jet_module(const Algebra& alg, const Scalar& lambda, FinDimModuleSpec vbar);

/// The exceptional module over the one-dimensional-current catalog algebra
/// with derivation eigenvalue 1: d_i t^j = (lambda+j+i*b) t^{i+j} and
/// x(i) t^j = delta_{i,0} F t^j.  Not an A-module.
ModulePtr make_beta1_exceptional(const Scalar& lambda, const Scalar& b, const Scalar& F);

/// Evaluation module over a map algebra: (y tensor r) v = psi(r) (y v).
ModulePtr make_evaluation_module(const Algebra& map_alg, ModulePtr base, PsiSpec psi);

/// Smallest order m <= max_m for which every differentiator instance with
/// indices in [-window, window] (all generators, for the mixed variant)
/// annihilates every basis vector of the degree -1, 0, 1 weight spaces.
std::optional<int> min_annihilating_order(const WeightModule& m,
                                          DifferentiatorSpec::Variant variant, int max_m,
                                          int window);

/// Per-degree ranks of the cyclic span of v under generator symbols with
/// indices in [-window, window], restricted to degrees [-window, window]
/// (internal closure runs on degrees up to 2*window).
std::map<int64_t, int> cyclic_span_rank(const WeightModule& m, const ModuleVector& v, int window);

struct ModuleAxiomReport {
  bool pass = true;
  int checks = 0;
  std::string first_failure;  // empty when pass
};

/// Bracket compatibility act([a,b]) = [act(a), act(b)] (super-signed) over
/// all symbol pairs in the window on basis vectors of three weight spaces,
/// plus weight additivity and, for A-modules, associativity of the Laurent
/// action.
ModuleAxiomReport check_module_axioms(const WeightModule& m, int window);

/// A valid random slice datum (dim <= max_dim) for the algebra's slice,
/// drawn from per-family representation patterns with random parameters.
FinDimModuleSpec random_findim(const Algebra& alg, Rng& rng, int max_dim);

}  // namespace virw
