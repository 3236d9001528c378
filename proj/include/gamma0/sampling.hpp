#pragma once

#include <cstdint>
#include <random>

#include "gamma0/ordinal.hpp"
#include "gamma0/veblen.hpp"

namespace gamma0 {

/// Deterministic pseudo-random source. mt19937_64 output is pinned by the
/// standard, and bounds are applied by plain modulo, so a fixed seed yields
/// the same sample stream on every platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next(std::uint64_t bound) { return bound == 0 ? 0 : eng_() % bound; }

  bool chance(std::uint64_t percent) { return next(100) < percent; }

 private:
  std::mt19937_64 eng_;
};

/// Random canonical ordinal with nesting depth at most `depth`, at most four
/// summands per level and finite parts at most 5. Built through the public
/// constructors, so every sample is canonical by construction.
inline Ordinal random_ordinal(SampleRng& rng, int depth) {
  if (depth <= 0) return Ordinal::nat(rng.next(6));
  const std::uint64_t summands = rng.next(5);  // 0..4
  Ordinal acc = Ordinal::nat(rng.next(6));
  for (std::uint64_t i = 0; i < summands; ++i) {
    Ordinal level;
    const std::uint64_t pick = rng.next(100);
    if (pick < 45) level = Ordinal();
    else if (pick < 70) level = Ordinal::nat(1);
    else if (pick < 85) level = Ordinal::nat(2);
    else level = random_ordinal(rng, depth - 1);
    // Random insertion order exercises absorption in add().
    acc = add(acc, veblen(level, random_ordinal(rng, depth - 1)));
  }
  return acc;
}

/// Random ordinal below epsilon_0 (pure Cantor normal form trees).
inline Ordinal random_cnf_ordinal(SampleRng& rng, int depth) {
  if (depth <= 0) return Ordinal::nat(rng.next(6));
  const std::uint64_t summands = rng.next(5);
  Ordinal acc = Ordinal::nat(rng.next(6));
  for (std::uint64_t i = 0; i < summands; ++i)
    acc = add(acc, omega_pow(random_cnf_ordinal(rng, depth - 1)));
  return acc;
}

}  // namespace gamma0
