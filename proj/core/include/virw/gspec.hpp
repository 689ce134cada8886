#pragma once
#include <optional>
#include <string>
#include <vector>

#include "virw/scalars.hpp"

namespace virw {

/// A finite-dimensional (super)algebra g with a fixed diagonalizable
/// derivation: basis x_0..x_{n-1}, parities, derivation eigenvalues beta_s,
/// structure constants [x_s, x_p] = sum_q c(s,p,q) x_q, and an optional
/// invariant supersymmetric bilinear form.  This is the datum the current-type
/// catalog families are built from.
struct GSpec {
  int dim = 0;
  std::vector<int> parity;              // dim entries, 0/1
  std::vector<Scalar> beta;             // dim entries
  std::vector<Scalar> c;                // dim^3, index (s*dim + p)*dim + q
  std::optional<std::vector<Scalar>> form;  // dim^2, index s*dim + p
  std::vector<std::string> names;       // display names; defaults to x0..x{n-1}
  std::string label;

  const Scalar& cc(int s, int p, int q) const;
  const Scalar& form_at(int s, int p) const;
  int par(int s) const { return parity.at(s); }

  /// Checks shape, super-antisymmetry and Jacobi for the structure constants,
  /// the derivation property (c(s,p,q) != 0 implies beta_s + beta_p = beta_q),
  /// and, when a form is present, supersymmetry and invariance
  /// (([a,b],c) = (a,[b,c])).  Throws CatalogError naming the failing indices.
  void validate() const;

  bool all_beta_zero() const;
};

/// dim 1, even, [x,x] = 0, derivation eigenvalue beta.
GSpec gspec_one_dim(const Scalar& beta);

/// Heisenberg: x, y, z with [x, y] = z, eigenvalues (beta, -beta, 0).
GSpec gspec_heisenberg(const Scalar& beta);

/// sl2: e, h, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h, derivation t*ad(h)
/// (eigenvalues 2t, 0, -2t), trace form (e,f) = 1, (h,h) = 2.
GSpec gspec_sl2(const Scalar& t);

/// The (1|1)-dimensional algebra <x, y | [x,y] = y> with x even (eigenvalue 0)
/// and y odd (eigenvalue -1/2).
GSpec gspec_super_hv();

}  // namespace virw
