#pragma once

#include <cstdint>
#include <string_view>

#include "polar/rational.hpp"

namespace polar {

/// splitmix64: small, portable and bit-reproducible across platforms, which
/// the seeded determinism of every pipeline stage relies on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// Independent stream seed for (seed, tag, index).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0);

/// Uniform over reduced fractions num/den with |num| <= height, 1 <= den <= height.
Rational sample_rational(Rng& rng, unsigned height);

}  // namespace polar
