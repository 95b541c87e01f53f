#include "dissoc/checkers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "dissoc/errors.hpp"

namespace dissoc {

namespace {

void require_positive_set(std::span<const std::uint64_t> a, const char* who) {
  for (auto v : a) {
    if (v == 0) throw std::invalid_argument(std::string(who) + ": elements must be >= 1");
  }
}

/// All 2^|a| subset sums, built by prefix doubling. Order: sums of the
/// subsets of {a_0..a_{j}} indexed by bitmask.
std::vector<std::uint64_t> all_subset_sums(std::span<const std::uint64_t> a) {
  std::vector<std::uint64_t> sums(1, 0);
  sums.reserve(std::size_t{1} << a.size());
  for (auto v : a) {
    const std::size_t half = sums.size();
    for (std::size_t i = 0; i < half; ++i) sums.push_back(sums[i] + v);
  }
  return sums;
}

}  // namespace

bool is_dissociated_bruteforce(std::span<const std::uint64_t> a, const CheckerConfig& cfg) {
  require_positive_set(a, "is_dissociated_bruteforce");
  if (a.size() > cfg.exhaustive_bound) {
    throw budget_error("is_dissociated_bruteforce: |A| = " + std::to_string(a.size()) +
                       " exceeds the exhaustive bound " + std::to_string(cfg.exhaustive_bound));
  }
  auto sums = all_subset_sums(a);
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

unsigned min_representation_bound(std::span<const std::uint64_t> a, const CheckerConfig& cfg) {
  require_positive_set(a, "min_representation_bound");
  if (a.empty()) throw std::invalid_argument("min_representation_bound: empty set");
  if (a.size() > cfg.exhaustive_bound) {
    throw budget_error("min_representation_bound: |A| exceeds the exhaustive bound");
  }
  std::vector<std::uint64_t> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());

  // The class definition quantifies over every prefix; the maximum count is
  // non-decreasing in the prefix length, but each prefix is checked anyway.
  unsigned best = 0;
  std::vector<std::uint64_t> sums(1, 0);
  for (auto v : sorted) {
    const std::size_t half = sums.size();
    for (std::size_t i = 0; i < half; ++i) sums.push_back(sums[i] + v);
    std::unordered_map<std::uint64_t, unsigned> reps;
    reps.reserve(sums.size());
    for (auto s : sums) {
      const unsigned c = ++reps[s];
      if (c > best) best = c;
    }
  }
  return best;
}

bool is_dk_set(std::span<const std::uint64_t> a, unsigned k, const CheckerConfig& cfg) {
  require_positive_set(a, "is_dk_set");
  if (k < 1) throw std::invalid_argument("is_dk_set: k must be >= 1");
  if (a.empty()) return true;

  // Route 1: odometer enumeration of all (k+1)^m coefficient vectors, with
  // a seen-flag array over the reachable sums for duplicate detection.
  long double combos = 1.0L;
  std::uint64_t reach = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    combos *= (k + 1);
    reach += std::uint64_t{k} * a[i];
  }
  if (combos <= static_cast<long double>(cfg.enumeration_budget) &&
      reach + 1 <= cfg.coefficient_budget) {
    std::vector<std::uint8_t> seen(reach + 1, 0);
    std::vector<unsigned> digits(a.size(), 0);
    std::uint64_t sum = 0;
    while (true) {
      if (seen[sum]) return false;
      seen[sum] = 1;
      std::size_t i = 0;
      while (i < a.size() && digits[i] == k) {
        sum -= std::uint64_t{k} * a[i];
        digits[i] = 0;
        ++i;
      }
      if (i == a.size()) break;
      ++digits[i];
      sum += a[i];
    }
    return true;
  }

  // Route 2: coefficients of prod(1 + z^a + ... + z^{ka}) with saturation
  // at 2; any coefficient >= 2 can only grow under further factors.
  std::uint64_t span = 0;
  for (auto v : a) span += std::uint64_t{k} * v;
  if (span + 1 > cfg.coefficient_budget) {
    throw budget_error("is_dk_set: both the enumeration and coefficient budgets are exceeded");
  }
  std::vector<std::uint8_t> coeff(span + 1, 0);
  coeff[0] = 1;
  std::uint64_t degree = 0;
  for (auto v : a) {
    const std::uint64_t new_degree = degree + std::uint64_t{k} * v;
    for (std::uint64_t t = new_degree + 1; t-- > 0;) {
      unsigned c = 0;
      for (unsigned j = 0; j <= k; ++j) {
        const std::uint64_t off = std::uint64_t{j} * v;
        if (off > t) break;
        if (t - off <= degree) c += coeff[t - off];
        if (c >= 2) break;
      }
      coeff[t] = static_cast<std::uint8_t>(c >= 2 ? 2 : c);
      if (c >= 2) return false;
    }
    degree = new_degree;
  }
  return true;
}

bool dissociated_accept(const SignedSumSet& d, std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("dissociated_accept: x must be >= 1");
  return !d.contains(x);
}

bool dk_accept(const KSignedSumSet& d, std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("dk_accept: x must be >= 1");
  for (unsigned j = 1; j <= d.k(); ++j) {
    if (d.contains(std::uint64_t{j} * x)) return false;
  }
  return true;
}

SetClassReport classify(std::span<const std::uint64_t> a, unsigned probe_k_max,
                        const CheckerConfig& cfg) {
  SetClassReport report;
  report.is_dissociated = is_dissociated_bruteforce(a, cfg);
  report.min_g = a.empty() ? 1 : min_representation_bound(a, cfg);
  report.max_k = 0;
  for (unsigned k = 1; k <= probe_k_max; ++k) {
    if (!is_dk_set(a, k, cfg)) break;
    report.max_k = k;
  }
  return report;
}

}  // namespace dissoc
