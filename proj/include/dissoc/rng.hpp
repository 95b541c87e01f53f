#pragma once

#include <cstdint>

namespace dissoc {

/// SplitMix64 finalizer. Deterministic across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Counter-based generator: the word depends only on (seed, index, lane,
/// draw), so samples can be produced in any order on any number of workers
/// and still agree bit for bit.
inline std::uint64_t counter_word(std::uint64_t seed, std::uint64_t index,
                                  std::uint64_t lane, std::uint64_t draw) {
  std::uint64_t h = splitmix64(seed ^ 0x6a09e667f3bcc909ull);
  h = splitmix64(h ^ splitmix64(index));
  h = splitmix64(h ^ (lane * 0xd6e8feb86659fd93ull));
  return splitmix64(h ^ (draw * 0xa2f9836e4e441529ull));
}

/// Uniform draw from [0, bound) by rejection; bound must be >= 1.
inline std::uint64_t counter_uniform(std::uint64_t seed, std::uint64_t index,
                                     std::uint64_t lane, std::uint64_t bound) {
  // Accept words in [2^64 mod bound, 2^64); that range holds an exact
  // multiple of `bound` values, so the residue is unbiased.
  const std::uint64_t min = (0 - bound) % bound;
  for (std::uint64_t draw = 0;; ++draw) {
    const std::uint64_t w = counter_word(seed, index, lane, draw);
    if (w >= min) return w % bound;
  }
}

}  // namespace dissoc
