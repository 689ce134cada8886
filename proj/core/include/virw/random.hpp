#pragma once
#include <cstdint>
#include <random>

#include "virw/scalars.hpp"

namespace virw {

/// Deterministic sampling helper.  mt19937_64 output is specified by the
/// standard, and we derive bounded draws from it directly (never through
/// std::uniform_int_distribution, whose mapping is implementation-defined),
/// so identical seeds yield identical samples on every platform.
class Rng {
public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t raw() { return engine_(); }

  /// Uniform-ish draw in [lo, hi] (tiny modulo bias is irrelevant here;
  /// determinism is what matters).
  int64_t uniform(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(engine_() % static_cast<uint64_t>(hi - lo + 1));
  }

  bool coin() { return (engine_() & 1) != 0; }

  /// Rational with |numerator| and denominator bounded (denominator >= 1).
  /// Small denominators keep exact arithmetic fast.
  Rational rational(int64_t max_num = 16, int64_t max_den = 16) {
    return Rational(uniform(-max_num, max_num), uniform(1, max_den));
  }

  /// Nonzero rational with the same bounds.
  Rational nonzero_rational(int64_t max_num = 16, int64_t max_den = 16) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  /// Rational avoiding a single excluded value (used to skip degenerate
  /// eigenvalues that dedicated suites probe deliberately).
  Rational rational_excluding(const Rational& excluded, int64_t max_num = 16,
                              int64_t max_den = 16) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!(r == excluded)) return r;
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace virw
