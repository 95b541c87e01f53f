#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dissoc/bigint.hpp"
#include "dissoc/checkers.hpp"
#include "dissoc/greedy.hpp"

namespace dissoc {

/// Exact central binomial coefficients B_k = C(k, floor(k/2)), cached and
/// extended on demand. B_0 = B_1 = 1, B_2 = 2; strictly increasing from
/// k = 2 with B_{2j+1} = B_{2j} (2j+1)/(j+1) and B_{2j+2} = 2 B_{2j+1}.
class BinomialLadder {
 public:
  const bigint& value(unsigned k);
  unsigned cached_max() const { return static_cast<unsigned>(values_.size()) - 1; }

 private:
  std::vector<bigint> values_ = {bigint(1)};  // values_[k] = B_k
};

/// Exact C(k, floor(k/2)).
bigint central_binomial(unsigned k);

/// Two-sided floating-point estimate of B_k from factorial bounds
/// (sqrt(2 pi n) (n/e)^n e^(1/(12n+1)) < n! < sqrt(2 pi n) (n/e)^n e^(1/(12n))).
/// Diagnostic only; every decision in this module uses the exact ladder.
struct FloatRange {
  double lo = 0.0;
  double hi = 0.0;
};
FloatRange central_binomial_estimate(unsigned k);

/// The unique k >= 1 with B_k <= n < B_{k+1}; requires n >= 1.
unsigned big_U(const bigint& n);

/// Working-precision policy for threshold predicates. Comparisons start at
/// start_bits of mantissa and escalate up to max_bits before giving up with
/// precision_error; exactly representable cases are decided rationally.
struct PrecisionConfig {
  unsigned start_bits = 128;
  unsigned max_bits = 4000;
};

/// U(n) <= log2 n + (1/2) log2 log2 n + C, decided reliably. n >= 2.
bool in_NC(const bigint& n, double C, const PrecisionConfig& prec = {});

/// c_* = (1/2) log2(pi / 2).
double c_star();

/// 2 - 2^(c_* - C); requires C in the open interval (c_* - 1, c_*).
double theoretical_density(double C);

/// Exact membership fraction of N_C within one ladder interval.
struct DensityPoint {
  unsigned k = 0;
  double C = 0.0;
  bigint threshold;      ///< least n in [B_k, B_{k+1}) satisfying the predicate
  bigint member_count;   ///< |N_C intersect [B_k, B_{k+1})|
  bigint interval_size;  ///< B_{k+1} - B_k
  bigrat fraction;       ///< member_count / interval_size
  double limit = 0.0;    ///< 2 - 2^(c_* - C)
};

/// Exact |N_C ∩ [B_k, B_{k+1})| / |I_k| by binary search on the monotone
/// predicate (U is constant on the interval and the threshold expression is
/// increasing in n). Requires k >= 3 and C in (c_* - 1, c_*).
DensityPoint interval_density(unsigned k, double C, const PrecisionConfig& prec = {});

/// The finite main term of the counting bound (no o(1)):
/// dissociated / subset-bounded g:  log2 n + (1/2) log2 log2 n + c_* (+ log2 g)
/// sign-bounded k: log_{k+1} n + (1/2) log_{k+1} log2 n
///                 + (1/2) log_{k+1}((2 pi / 3) k (k+2)).
/// Requires n >= 3.
double size_bound_rhs(const bigint& n, const Variant& variant);

/// 2^m <= n*m + 1, exactly.
bool hard_count_inequality(unsigned m, const bigint& n);

/// 2^m <= g*(total + 1), exactly.
bool hard_subset_inequality(unsigned m, const bigint& total, unsigned g);

/// Exact maximum coefficient of (1 + x + ... + x^k)^m; attained at
/// t = floor(km/2). Budget guards the (km+1)-cell expansion.
bigint max_multinomial(unsigned m, unsigned k, std::uint64_t cell_budget = std::uint64_t{1} << 24);

/// The finite isoperimetric conclusion for a concrete set:
/// subset-bounded (and dissociated, g = 1): C(m, floor(m/2)) <= g (a_m + 1);
/// sign-bounded: a_m >= M_{m,k} / 2 - 1. The set must pass its class check.
bool isoperimetric_check(std::span<const std::uint64_t> a, const Variant& variant,
                         const CheckerConfig& cfg = {});

/// max over observed terms (from the second onward) of m - log2(gamma_m);
/// a single-term sequence is evaluated at its only term. Diagnostic only.
double conjecture_slack(std::span<const bigint> terms);

}  // namespace dissoc
