#pragma once

#include <cstdint>

#include "scarf/point_set.hpp"

namespace scarf {

/// Deterministic 64-bit generator (splitmix64). All sampling in the library
/// and the tools goes through this, so fixed seeds give identical outputs
/// across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform-ish integer in [lo, hi]; deterministic, slight modulo bias.
  long long range(long long lo, long long hi);

  /// Rational p/q with p in [-scale, scale], q in [1, scale].
  Rat rational(long long scale);

private:
  std::uint64_t state_;
};

/// Seeded integer antichain in [0, coordinate_range]^n that passes the
/// genericity test, produced by rejection. Throws when the budget runs out,
/// suggesting a larger coordinate range.
PointSet random_generic_antichain(int n, int count, std::uint64_t seed,
                                  long long coordinate_range = 50);

}  // namespace scarf
