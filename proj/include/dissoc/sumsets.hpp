#pragma once

#include <cstdint>
#include <vector>

#include "dissoc/bitmask.hpp"

namespace dissoc {

/// Per-structure memory cap, in bits of mask (or counter-array cells times
/// their width). Exceeding it raises capacity_error; nothing is truncated.
struct SumsetConfig {
  std::uint64_t mem_cap_bits = std::uint64_t{1} << 33;
};

/// The signed-sum set of an element multiset: all values sum(eps_i * g_i)
/// with eps_i in {-1,0,1}. The set is symmetric about 0, so only the
/// nonnegative half [0, total] is stored; membership of a negative value is
/// membership of its absolute value.
class SignedSumSet {
 public:
  explicit SignedSumSet(SumsetConfig cfg = {});

  std::size_t n() const { return n_; }
  std::uint64_t total() const { return total_; }
  const SumsetConfig& config() const { return cfg_; }

  /// Membership of |v|; values beyond total are never members.
  bool contains(std::uint64_t v) const { return mask_.test(v); }

  /// True iff every value in [1, hi] is a member. hi = 0 is vacuously true;
  /// hi > total is false.
  bool interval_covered(std::uint64_t hi) const;

  /// True iff every value in [lo, hi] is a member (empty range true).
  bool covered(std::uint64_t lo, std::uint64_t hi) const { return mask_.all_set(lo, hi); }

  /// Smallest value > from that is not a member. Because membership beyond
  /// total is false, the result is at most total + 1.
  std::uint64_t next_non_member(std::uint64_t from) const;

  /// The signed-sum set of the current elements plus gamma (gamma >= 1).
  SignedSumSet extended(std::uint64_t gamma) const;

  const BitMask& mask() const { return mask_; }

  bool operator==(const SignedSumSet& o) const {
    return total_ == o.total_ && mask_ == o.mask_;
  }

 private:
  SumsetConfig cfg_;
  std::size_t n_ = 0;
  std::uint64_t total_ = 0;
  BitMask mask_;  // length total_ + 1, bit 0 always set
};

/// Saturating table of subset-sum representation counts r(s) for s in
/// [0, total]: counts[s] = min(r(s), cap). Entries above the cap never
/// change a membership decision for the class the cap was chosen for.
class RepCountTable {
 public:
  /// cap must be in [1, 255]; for a class bound g use cap = g + 1.
  explicit RepCountTable(unsigned cap, SumsetConfig cfg = {});

  std::size_t n() const { return n_; }
  std::uint64_t total() const { return total_; }
  unsigned cap() const { return cap_; }

  /// min(r(s), cap); 0 outside [0, total].
  unsigned count_at(std::uint64_t s) const {
    return s <= total_ ? counts_[s] : 0u;
  }

  /// The table for the current elements plus x (x >= 1):
  /// counts'[s] = min(cap, counts[s] + counts[s - x]).
  RepCountTable extended(std::uint64_t x) const;

  /// max over s of counts[s] + counts[s - x], with saturated summands.
  /// Comparing the result against g decides whether appending x keeps every
  /// representation count at most g (assuming cap > g).
  unsigned max_pair_count(std::uint64_t x) const;

  const std::vector<std::uint8_t>& counts() const { return counts_; }

 private:
  SumsetConfig cfg_;
  unsigned cap_;
  std::size_t n_ = 0;
  std::uint64_t total_ = 0;
  std::vector<std::uint8_t> counts_;  // length total_ + 1, counts_[0] >= 1
};

/// Signed sums with coefficients in {-k..k}, nonnegative half over
/// [0, k * total]. For k = 1 this is exactly the SignedSumSet mask.
class KSignedSumSet {
 public:
  explicit KSignedSumSet(unsigned k, SumsetConfig cfg = {});

  unsigned k() const { return k_; }
  std::size_t n() const { return n_; }
  std::uint64_t total() const { return total_; }

  bool contains(std::uint64_t v) const { return mask_.test(v); }

  std::uint64_t next_non_member(std::uint64_t from) const;

  /// The k-signed-sum set of the current elements plus gamma (gamma >= 1):
  /// the union of the old set shifted by j*gamma for j in [-k, k].
  KSignedSumSet extended(std::uint64_t gamma) const;

  const BitMask& mask() const { return mask_; }

 private:
  SumsetConfig cfg_;
  unsigned k_;
  std::size_t n_ = 0;
  std::uint64_t total_ = 0;
  BitMask mask_;  // length k_ * total_ + 1
};

}  // namespace dissoc
