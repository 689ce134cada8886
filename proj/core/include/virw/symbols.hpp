#pragma once
#include <cstdint>
#include <string>
#include <string_view>

#include "virw/scalars.hpp"

namespace virw {

class RingSpec;

/// Basis-symbol kinds across the whole algebra catalog.
///
///   D(i)    Witt generator t^{i+1} d/dt
///   T(k)    Laurent monomial t^k of the abelian part A
///   X(s,k)  current generator x_s t^k for generator s of the finite algebra g
///   E/H/G/L families for the centrally extended presentations
///           (E: rank-one current; H: even current; G: odd current; L: Witt copy)
///   TD(i)   weight-zero generator tau_i   = t^{-i} d_i - d_0
///   TX(s,i) weight-zero generator sigma_{s,i} = t^{-i} x_s t^i
///   GX(s)   generator of g inside the degree-zero slice ghat = C dbar + g
///   GD      the derivation class dbar (image of d_1 - d_0)
///   Central central charges C (gen=0) and C1..C4 (gen=1..4)
enum class Tag : uint8_t { Central, T, X, E, H, G, TX, TD, GX, GD, L, D };

/// One basis symbol: a tag plus generator id, Laurent index, and an optional
/// coefficient-ring monomial (0 = identity monomial; nonzero only for map
/// algebras g (x) R).
struct BasisSymbol {
  Tag tag = Tag::D;
  int32_t gen = 0;
  int64_t index = 0;
  uint32_t ring = 0;

  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
};

/// Canonical total order: tag rank, then generator id, then index, then ring
/// monomial.  Fixed once so equal elements always serialize identically.
bool symbol_less(const BasisSymbol& a, const BasisSymbol& b);

struct SymbolLess {
  bool operator()(const BasisSymbol& a, const BasisSymbol& b) const { return symbol_less(a, b); }
};

/// ad(d_0)-degree of the symbol (its Laurent index; 0 for centrals and the
/// finite-dimensional slices).
int64_t symbol_degree(const BasisSymbol& sym);

/// True for tags that carry a Laurent index.
bool has_index(Tag tag);

/// True for tags that carry a generator id.
bool has_gen(Tag tag);

inline BasisSymbol sym_d(int64_t i) { return {Tag::D, 0, i, 0}; }
inline BasisSymbol sym_t(int64_t k) { return {Tag::T, 0, k, 0}; }
inline BasisSymbol sym_x(int32_t s, int64_t k) { return {Tag::X, s, k, 0}; }
inline BasisSymbol sym_e(int64_t i) { return {Tag::E, 0, i, 0}; }
inline BasisSymbol sym_h(int64_t i) { return {Tag::H, 0, i, 0}; }
inline BasisSymbol sym_g(int64_t i) { return {Tag::G, 0, i, 0}; }
inline BasisSymbol sym_l(int64_t i) { return {Tag::L, 0, i, 0}; }
inline BasisSymbol sym_tau_d(int64_t i) { return {Tag::TD, 0, i, 0}; }
inline BasisSymbol sym_tau_x(int32_t s, int64_t i) { return {Tag::TX, s, i, 0}; }
inline BasisSymbol sym_ghat_d() { return {Tag::GD, 0, 0, 0}; }
inline BasisSymbol sym_ghat_x(int32_t s) { return {Tag::GX, s, 0, 0}; }
/// Central charges: id 0 prints as "C", ids 1..4 as "C1".."C4".
inline BasisSymbol sym_central(int32_t id) { return {Tag::Central, id, 0, 0}; }

inline BasisSymbol with_ring(BasisSymbol sym, uint32_t ring) {
  sym.ring = ring;
  return sym;
}

/// Text form: "D(3)", "X(0,2)", "C2", "GX(1)", plus "@monomial" when the ring
/// factor is not the identity (ring names come from the RingSpec).
std::string symbol_to_string(const BasisSymbol& sym, const RingSpec* ring = nullptr);

/// Inverse of symbol_to_string; `ring` is required to resolve "@monomial"
/// suffixes.  Throws ParseError on malformed input.
BasisSymbol parse_symbol(std::string_view text, const RingSpec* ring = nullptr);

}  // namespace virw
