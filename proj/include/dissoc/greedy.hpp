#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dissoc/bigint.hpp"
#include "dissoc/sumsets.hpp"

namespace dissoc {

enum class VariantKind { Dissociated, SubsetBounded, SignBounded };

/// Which acceptance predicate drives the generator: plain dissociation,
/// representation counts bounded by g, or signed coefficients bounded by k.
struct Variant {
  VariantKind kind = VariantKind::Dissociated;
  unsigned g = 1;
  unsigned k = 1;

  static Variant dissociated() { return {}; }
  static Variant subset_bounded(unsigned g) { return {VariantKind::SubsetBounded, g, 1}; }
  static Variant sign_bounded(unsigned k) { return {VariantKind::SignBounded, 1, k}; }
};

struct GenerateOptions {
  std::uint64_t mem_cap_bits = std::uint64_t{1} << 33;
  /// When true (dissociated variant), switch to doubling arithmetic once the
  /// certificate holds instead of growing the mask further.
  bool use_certificate = true;
};

struct DoublingReport {
  std::size_t onset = 0;  ///< smallest observed index from which every step doubles
  std::optional<std::size_t> certificate_index;
  unsigned bound = 0;     ///< L + 2K + 5
  std::size_t horizon = 0;
};

/// A greedily generated sequence together with its running sums and, for
/// dissociated runs, the index where the doubling certificate first held.
class GreedySequence {
 public:
  std::uint64_t seed_a() const { return a_; }
  std::uint64_t seed_b() const { return b_; }
  const Variant& variant() const { return variant_; }
  const std::vector<bigint>& terms() const { return terms_; }
  /// S_n = sum of the first n terms; prefix_sums()[n-1], n >= 1.
  const std::vector<bigint>& prefix_sums() const { return prefix_sums_; }
  std::optional<std::size_t> certified_at() const { return certified_at_; }
  const GenerateOptions& options() const { return options_; }

 private:
  friend GreedySequence generate(std::uint64_t, std::uint64_t, const Variant&,
                                 std::size_t, const GenerateOptions&);
  std::uint64_t a_ = 0, b_ = 0;
  Variant variant_;
  std::vector<bigint> terms_;
  std::vector<bigint> prefix_sums_;
  std::optional<std::size_t> certified_at_;
  GenerateOptions options_;
};

/// The unique greedy sequence for the given seeds and variant, of the
/// requested length. Requires 1 <= a < b and horizon >= 2. Raises
/// capacity_error if the mask budget runs out before the horizon with no
/// certificate in hand.
GreedySequence generate(std::uint64_t a, std::uint64_t b, const Variant& variant,
                        std::size_t horizon, const GenerateOptions& options = {});

/// Observed doubling onset plus the certificate index and the closed-form
/// bound. Requires at least 3 terms.
DoublingReport detect_doubling(const GreedySequence& seq);

/// Re-verifies the doubling certificate at index n (1-based, n >= 2) by
/// rebuilding the signed-sum mask of the first n-1 terms:
/// [1, gamma_n - 1] covered and 2 gamma_n > S_{n-1}. Dissociated variant only.
bool certify_doubling(const GreedySequence& seq, std::size_t n);

/// L + 2K + 5 with L = ceil(log2(2b+2)), K = ceil(log2(L)); requires b >= 2.
unsigned n0_upper_bound(std::uint64_t a, std::uint64_t b);

/// Potentials T_n / 2^n (dissociated) or g T_n / 2^n (subset-bounded), with
/// T_n = S_n + 1, as exact rationals.
std::vector<bigrat> potential_trace(const GreedySequence& seq);

/// Consecutive term ratios gamma_{n+1} / gamma_n as exact rationals.
std::vector<bigrat> ratio_trace(const GreedySequence& seq);

}  // namespace dissoc
