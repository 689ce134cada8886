#pragma once
#include <map>
#include <vector>

#include "virw/algebra.hpp"

namespace virw {

/// A product of basis symbols, left to right.  The empty word is the unit.
using Word = std::vector<BasisSymbol>;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

/// Linear combination of words with exact coefficients; zero coefficients are
/// never stored.
using UElement = std::map<Word, Scalar, WordLess>;

/// One summand of an unnormalized expression.
struct RawTerm {
  Scalar coeff;
  Word word;
};
using RawExpr = std::vector<RawTerm>;

/// Thrown on degree-guard overflows and mode violations.
struct NfError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class NfMode {
  U,       // plain enveloping algebra U(L)
  Ubar,    // quotient where the Laurent part acts associatively: T(a)T(b) = T(a+b), T(0) = 1
  Tensor,  // A[d0] (x) U(T): Laurent prefix times the weight-zero subalgebra
};

std::string nf_mode_name(NfMode mode);

/// Poincare-Birkhoff-Witt style normal forms for words over a catalog
/// algebra.  Rewriting is leftmost-first: scan for the first applicable rule
/// (drop T(0), merge adjacent T's in Ubar/Tensor, contract a repeated odd
/// symbol via x*x = [x,x]/2, or swap an out-of-order adjacent pair inserting
/// the bracket), recurse on the results, and cache per word.
class EnvelopingEngine {
public:
  /// degree_guard bounds the number of non-T factors in any word (default 8).
  explicit EnvelopingEngine(Algebra alg, NfMode mode, int degree_guard = 8);

  const Algebra& algebra() const { return alg_; }
  NfMode mode() const { return mode_; }
  int degree_guard() const { return guard_; }

  UElement straighten(const Word& w) const;
  UElement normal_form(const RawExpr& e) const;
  UElement normal_form(const UElement& e) const;

  UElement mul(const UElement& a, const UElement& b) const;
  /// Supercommutator a b - (-1)^{|a||b|} b a (terms must be parity-homogeneous).
  UElement commutator(const UElement& a, const UElement& b) const;

  int word_parity(const Word& w) const;
  bool is_normal(const Word& w) const;

  /// Human-readable description of the symbol order this mode straightens to.
  std::string order_description() const;

  /// Rank in the PBW order for this mode (lower = further left).
  bool pbw_less(const BasisSymbol& a, const BasisSymbol& b) const;

  std::string to_string(const UElement& e) const;
  UElement parse(const std::string& text) const;

private:
  Algebra alg_;
  NfMode mode_;
  int guard_;
  mutable std::map<Word, UElement, WordLess> memo_;

  int non_laurent_count(const Word& w) const;
  void check_guard(const Word& w) const;
};

UElement u_scale(const Scalar& c, const UElement& e);
UElement u_add(const UElement& a, const UElement& b);
UElement u_sub(const UElement& a, const UElement& b);
UElement u_one();

/// Alternating-binomial quadratic expressions.
///   Omega:     sum_i (-1)^i binom(m,i) d_{k-i} d_{s+i}
///   OmegaBar:  sum_i (-1)^i binom(m,i) x_gen(j-i) d_{p+i}
struct DifferentiatorSpec {
  enum class Variant { Omega, OmegaBar };
  Variant variant = Variant::Omega;
  int m = 1;
  long long k = 0, s = 0;  // Omega indices
  long long j = 0, p = 0;  // OmegaBar indices
  int32_t gen = 0;         // OmegaBar generator

  std::string to_string() const;
};

/// The literal sum of words, before normalization.
RawExpr differentiator_terms(const Algebra& alg, const DifferentiatorSpec& spec);
/// Normalized.
UElement differentiator(const EnvelopingEngine& eng, const DifferentiatorSpec& spec);

/// Telescoping collapse for brackets of a current generator with Omega:
///   [x_s(j+1), Om_{k,p-1}] - 2[x_s(j), Om_{k,p}] + [x_s(j-1), Om_{k,p+1}]
///   - [x_s(j), Om_{k+1,p-1}] + 2[x_s(j-1), Om_{k+1,p}] - [x_s(j-2), Om_{k+1,p+1}]
/// equals
///   (beta_s - 1) sum_{i=0}^{m+2} (-1)^i binom(m+2,i) x_s(j+k+1-i) d_{p-1+i}
/// in normal form, given the catalog convention
/// [d_i, x_s(k)] = (k + i beta_s) x_s(i+k).  residual = lhs - rhs.
struct CollapseReport {
  UElement lhs, rhs, residual;
  bool holds = false;
};
CollapseReport check_collapse_identity(const EnvelopingEngine& eng, int m, long long j, long long k,
                                       long long p, int32_t gen);

/// Image of the degree-decomposition embedding on a normalized element of the
/// Ubar engine:
///   d_i    |-> t^i tau_i + t^i d_0   (i != 0)
///   x_s(k) |-> t^k sigma_{s,k}
///   t^k, d_0, centrals map to themselves.
/// Target words live in the Tensor engine over the weight-zero subalgebra.
UElement iota_decompose(const EnvelopingEngine& src, const EnvelopingEngine& dst, const UElement& u);

/// Inverse on normalized Tensor words:
///   tau_i        |-> t^{-i} d_i - d_0
///   sigma_{s,k}  |-> t^{-k} x_s(k)
UElement iota_inverse(const EnvelopingEngine& dst, const EnvelopingEngine& src, const UElement& u);

/// Checks that tau_i = t^{-i} d_i - d_0 and sigma_{s,k} = t^{-k} x_s(k)
/// satisfy the weight-zero subalgebra relations inside the Ubar engine.
struct TClosureCase {
  enum class Kind { TauTau, TauSigma, SigmaSigma, TauLaurent, SigmaLaurent, TauD0, SigmaD0 };
  Kind kind = Kind::TauTau;
  long long i = 0, j = 0;  // tau indices / sigma index j
  int32_t s = 0, p = 0;    // generator ids
  long long t_power = 0;   // Laurent power for the *Laurent kinds
};
struct TClosureReport {
  UElement got, expected;
  bool pass = false;
};
TClosureReport check_T_closure(const EnvelopingEngine& ubar, const TClosureCase& c);

/// Component filters for reporting normalized expressions.
struct ComponentPattern {
  enum class Kind {
    CentralLinear,    // exactly one central factor, of the given id
    GeneratorLinear,  // exactly one current-type factor, no centrals
    Quadratic,        // exactly two non-central factors
  };
  Kind kind = Kind::CentralLinear;
  int32_t central_id = 0;
};
UElement extract_component(const UElement& u, const ComponentPattern& pattern);

}  // namespace virw
