#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dissoc/bigint.hpp"

namespace dissoc {

/// The dyadic family over [n]: for t = 0..m-1, interval t holds the odd
/// integers q with floor(n / 2^(t+1)) < q <= floor(n / 2^t), and a family
/// member takes one q_t from each interval, contributing the element 2^t q_t.
struct FamilySpec {
  std::uint64_t n = 0;
  unsigned L = 0;
  unsigned m_tilde = 0;  ///< floor(log2 n)
  unsigned m = 0;        ///< m_tilde - L, the number of intervals

  struct Interval {
    std::uint64_t lo = 0;         ///< exclusive integer lower bound
    std::uint64_t hi = 0;         ///< inclusive integer upper bound
    std::uint64_t first_odd = 0;  ///< smallest odd in (lo, hi]
    std::uint64_t odd_count = 0;  ///< number of odd integers in (lo, hi]
  };
  std::vector<Interval> intervals;

  /// Exact sum over intervals of log2(odd_count); the family's log-size.
  double log2_family_size() const;
};

/// One sampled member: the chosen odd q_t per interval and the resulting
/// elements 2^t q_t, all in (n/2, n].
struct FamilySample {
  std::vector<std::uint64_t> q;
  std::vector<std::uint64_t> elements;
};

struct GpExperimentReport {
  std::uint64_t samples = 0;
  std::uint64_t with_gp = 0;
  bigrat fraction;           ///< with_gp / samples
  bigrat union_bound_exact;  ///< sum over k of (k/2) / |I_k|
  double union_bound = 0.0;
  bool all_dissociated = false;
  std::uint64_t seed = 0;
};

/// Materialize the interval bounds; requires n >= 16, L >= 1, at least one
/// interval, and every interval nonempty.
FamilySpec build_spec(std::uint64_t n, unsigned L);

/// Deterministic uniform member: q_t is drawn uniformly from the odd
/// integers of interval t, keyed by (seed, index, t). Repeated calls with
/// the same key return the identical sample on any worker layout.
FamilySample sample(const FamilySpec& spec, std::uint64_t seed, std::uint64_t index);

/// True iff some pairwise distinct a, b, c in A satisfy b^2 = a c.
bool has_three_term_gp(std::span<const std::uint64_t> a);

/// Structured detector for family members: x_j^2 = x_i x_k forces i + k = 2j
/// and q_j^2 = q_i q_k, so only those index triples are scanned. Must agree
/// with the generic detector on every sample; the experiment asserts it.
bool has_structured_gp(const FamilySample& s);

/// Exact union bound sum_{k=2}^{m-1} (k/2) / |I_k|.
bigrat gp_union_bound(const FamilySpec& spec);

/// Shrinkage preset ceil((A + 2) * log2(floor(log2 n))), the choice that
/// pushes the expected GP fraction below 1 / (log2 n)^(A+1). Exact integer
/// arithmetic: the smallest L with 2^L >= m_tilde^(A+2).
unsigned preset_shrinkage(std::uint64_t n, unsigned A);

/// Draw `samples` members, verify each is dissociated (theorem; a failure
/// here is a bug and raises invariant_violation), detect geometric triples
/// with both the generic scan and the structured index scan (they must
/// agree), and report the fraction alongside the exact union bound.
/// Deterministic for any worker count.
GpExperimentReport run_experiment(const FamilySpec& spec, std::uint64_t samples,
                                  std::uint64_t seed, unsigned workers = 1);

}  // namespace dissoc
