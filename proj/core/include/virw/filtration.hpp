#pragma once
#include <optional>

#include "virw/algebra.hpp"
#include "virw/element.hpp"

namespace virw {

/// Thrown when a filtration operation is applied to an element outside its
/// domain (wrong symbol kinds, or insufficient vanishing order at t = 1).
struct FiltrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// (t-1)^k t^i d expanded in the d-basis:
///   sum_j binom(k,j) (-1)^{k-j} d_{i+j}.
Element expand_witt_filtration(long long k, long long i);

/// (t-1)^k x_s t^i expanded in the current basis:
///   sum_j binom(k,j) (-1)^{k-j} x_s(i+j).
Element expand_current_filtration(int32_t s, long long k, long long i);

/// Vanishing orders at t = 1 of the Witt part (D symbols) and the current
/// part (X/E/H/G symbols, grouped per generator).  nullopt means the part is
/// zero (order infinity).  T and central symbols are outside the domain.
struct ValuationAtOne {
  std::optional<long long> witt;
  std::optional<long long> current;

  /// a lies in the k-th filtration subalgebra iff witt >= k+1 and current >= k.
  bool in_filtration_level(long long k) const;
};

ValuationAtOne valuation_at_one(const Element& a);

/// Projection onto the degree-zero slice C dbar + g:
///   sum c_i d_i  |->  (sum i c_i) GD   (requires sum c_i = 0),
///   x_s(i)       |->  GX(s).
/// Throws FiltrationError when the Witt part does not vanish at t = 1.
Element project_to_slice(const Element& a);

}  // namespace virw
