#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dissoc/sumsets.hpp"

namespace dissoc {

struct CheckerConfig {
  /// Largest |A| for which 2^|A| subset sums are enumerated outright.
  unsigned exhaustive_bound = 25;
  /// Largest (k+1)^|A| enumerated for the D_k check before falling back to
  /// the coefficient-array route.
  std::uint64_t enumeration_budget = std::uint64_t{1} << 24;
  /// Cap on the coefficient-array route, in array cells (k * sum(A) + 1).
  std::uint64_t coefficient_budget = std::uint64_t{1} << 33;
};

/// Classification of a concrete finite set.
struct SetClassReport {
  bool is_dissociated = false;
  unsigned min_g = 0;   ///< smallest g with every prefix's counts <= g
  unsigned max_k = 0;   ///< largest probed k passing the D_k check, 0 if none
};

/// True iff all 2^|A| subset sums of A are pairwise distinct.
/// A must be a set of positive integers (duplicates make it trivially false).
bool is_dissociated_bruteforce(std::span<const std::uint64_t> a,
                               const CheckerConfig& cfg = {});

/// Smallest g such that, for every prefix of the sorted set, every value is
/// hit by at most g subset sums. Nonempty input required.
unsigned min_representation_bound(std::span<const std::uint64_t> a,
                                  const CheckerConfig& cfg = {});

/// True iff all (k+1)^|A| values of sum(a_i * x_i), x_i in [0, k], are
/// distinct; equivalently every coefficient of prod(1 + z^a + ... + z^{ka})
/// is at most 1.
bool is_dk_set(std::span<const std::uint64_t> a, unsigned k,
               const CheckerConfig& cfg = {});

/// Appending x to the elements behind D keeps them dissociated iff x is not
/// a signed sum already, i.e. not a member of D. x must not be an element.
bool dissociated_accept(const SignedSumSet& d, std::uint64_t x);

/// Appending x keeps the elements a D_k set iff j*x is not a k-signed sum
/// for any j in [1, k].
bool dk_accept(const KSignedSumSet& d, std::uint64_t x);

/// Full classification: dissociated flag, minimal g, and the largest
/// k <= probe_k_max passing the D_k check.
SetClassReport classify(std::span<const std::uint64_t> a, unsigned probe_k_max = 3,
                        const CheckerConfig& cfg = {});

}  // namespace dissoc
