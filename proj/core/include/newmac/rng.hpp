#pragma once

#include <cstdint>

#include "newmac/rational.hpp"

namespace newmac {

/// SplitMix64: tiny deterministic generator with value semantics, so a
/// sampling run is reproducible from its seed alone across platforms.
/// Constants are the standard ones from the reference implementation.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from {0, ..., bound-1} by modulo reduction. The slight
  /// modulo bias is irrelevant for sampling and keeps the mapping trivially
  /// reproducible, which is what the search contract needs.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  std::uint64_t state() const { return state_; }

private:
  std::uint64_t state_;
};

/// One random rational: numerator uniform in [-num_bound, num_bound],
/// denominator uniform in [1, den_bound]. Exactly two draws, numerator
/// first — every deterministic-sampling contract in the library counts on
/// this order.
inline Rational random_rational(SplitMix64& rng, std::uint64_t num_bound,
                                std::uint64_t den_bound) {
  const std::uint64_t span = 2 * num_bound + 1;
  const auto num = static_cast<long>(rng.next_below(span)) - static_cast<long>(num_bound);
  const auto den = static_cast<long>(1 + rng.next_below(den_bound));
  return Rational(Integer(num), Integer(den));
}

} // namespace newmac
