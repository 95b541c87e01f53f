#pragma once

// Test-only oracles: independent brute-force enumerations used to pin the
// expected values of the fast paths. Nothing here touches the bit kernels.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

/// All values sum(eps_i * a_i) with eps in {-1,0,1}^m, as a signed set.
inline std::set<std::int64_t> signed_sums(const std::vector<std::uint64_t>& a) {
  std::set<std::int64_t> out{0};
  for (auto v : a) {
    std::set<std::int64_t> next;
    for (auto s : out) {
      next.insert(s - static_cast<std::int64_t>(v));
      next.insert(s);
      next.insert(s + static_cast<std::int64_t>(v));
    }
    out = next;
  }
  return out;
}

/// All values sum(eps_i * a_i) with eps in {-k..k}^m.
inline std::set<std::int64_t> ksigned_sums(const std::vector<std::uint64_t>& a, unsigned k) {
  std::set<std::int64_t> out{0};
  for (auto v : a) {
    std::set<std::int64_t> next;
    for (auto s : out) {
      for (int j = -static_cast<int>(k); j <= static_cast<int>(k); ++j) {
        next.insert(s + static_cast<std::int64_t>(j) * static_cast<std::int64_t>(v));
      }
    }
    out = next;
  }
  return out;
}

/// Exact subset-sum representation counts by explicit subset enumeration.
inline std::map<std::uint64_t, std::uint64_t> rep_counts(const std::vector<std::uint64_t>& a) {
  std::map<std::uint64_t, std::uint64_t> counts;
  const std::size_t m = a.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) sum += a[i];
    }
    ++counts[sum];
  }
  return counts;
}

/// Nonnegative-half membership flags of the signed-sum set, by odometer
/// enumeration of all 3^m coefficient vectors. flags[v] == 1 iff v or -v is
/// a signed sum; the array has sum(a) + 1 entries.
inline std::vector<std::uint8_t> signed_half_dense(const std::vector<std::uint64_t>& a) {
  std::int64_t total = 0;
  for (auto v : a) total += static_cast<std::int64_t>(v);
  std::vector<std::uint8_t> flags(total + 1, 0);
  std::vector<int> digit(a.size(), 0);  // digit - 1 is the coefficient
  std::int64_t sum = -total;            // all coefficients at -1
  while (true) {
    flags[static_cast<std::size_t>(sum < 0 ? -sum : sum)] = 1;
    std::size_t i = 0;
    while (i < a.size() && digit[i] == 2) {
      digit[i] = 0;
      sum -= 2 * static_cast<std::int64_t>(a[i]);
      ++i;
    }
    if (i == a.size()) break;
    ++digit[i];
    sum += static_cast<std::int64_t>(a[i]);
  }
  return flags;
}

/// Same for coefficients in [-k, k]: flags has k * sum(a) + 1 entries.
inline std::vector<std::uint8_t> ksigned_half_dense(const std::vector<std::uint64_t>& a,
                                                    unsigned k) {
  std::int64_t total = 0;
  for (auto v : a) total += static_cast<std::int64_t>(v);
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(k) * total + 1, 0);
  std::vector<unsigned> digit(a.size(), 0);  // digit - k is the coefficient
  std::int64_t sum = -static_cast<std::int64_t>(k) * total;
  while (true) {
    flags[static_cast<std::size_t>(sum < 0 ? -sum : sum)] = 1;
    std::size_t i = 0;
    while (i < a.size() && digit[i] == 2 * k) {
      digit[i] = 0;
      sum -= 2 * static_cast<std::int64_t>(k) * static_cast<std::int64_t>(a[i]);
      ++i;
    }
    if (i == a.size()) break;
    ++digit[i];
    sum += static_cast<std::int64_t>(a[i]);
  }
  return flags;
}

/// Greedy sequence built solely from an acceptance predicate on whole
/// prefixes. candidate_cap(prefix_sum) bounds the search so the loop
/// terminates even for predicates with sparse acceptances.
inline std::vector<std::uint64_t> greedy(
    std::uint64_t a, std::uint64_t b, std::size_t horizon,
    const std::function<bool(const std::vector<std::uint64_t>&)>& acceptable,
    const std::function<std::uint64_t(std::uint64_t)>& candidate_cap) {
  std::vector<std::uint64_t> seq{a, b};
  std::uint64_t sum = a + b;
  while (seq.size() < horizon) {
    std::uint64_t chosen = 0;
    const std::uint64_t cap = candidate_cap(sum);
    for (std::uint64_t x = seq.back() + 1; x <= cap; ++x) {
      seq.push_back(x);
      const bool ok = acceptable(seq);
      seq.pop_back();
      if (ok) {
        chosen = x;
        break;
      }
    }
    if (chosen == 0) break;  // no acceptable candidate below the cap
    seq.push_back(chosen);
    sum += chosen;
  }
  return seq;
}

}  // namespace oracle
