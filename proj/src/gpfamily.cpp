#include "dissoc/gpfamily.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "dissoc/checkers.hpp"
#include "dissoc/errors.hpp"
#include "dissoc/rng.hpp"

namespace dissoc {

namespace {

std::uint64_t odd_count_up_to(std::uint64_t x) { return (x + 1) / 2; }

std::uint64_t integer_sqrt(unsigned __int128 v) {
  if (v == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  // settle the rounding of the double estimate
  while (static_cast<unsigned __int128>(r) * r > v) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

bool has_structured_gp(const FamilySample& s) {
  const std::size_t m = s.q.size();
  for (std::size_t j = 1; j + 1 < m; ++j) {
    for (std::size_t d = 1; j >= d && j + d < m; ++d) {
      const unsigned __int128 lhs = static_cast<unsigned __int128>(s.q[j]) * s.q[j];
      const unsigned __int128 rhs = static_cast<unsigned __int128>(s.q[j - d]) * s.q[j + d];
      if (lhs == rhs) return true;
    }
  }
  return false;
}

double FamilySpec::log2_family_size() const {
  double sum = 0.0;
  for (const auto& iv : intervals) sum += std::log2(static_cast<double>(iv.odd_count));
  return sum;
}

FamilySpec build_spec(std::uint64_t n, unsigned L) {
  if (n < 16) throw std::invalid_argument("build_spec: n must be >= 16");
  if (L < 1) throw std::invalid_argument("build_spec: L must be >= 1");

  FamilySpec spec;
  spec.n = n;
  spec.L = L;
  spec.m_tilde = floor_log2(bigint(n));
  if (L >= spec.m_tilde) {
    throw std::invalid_argument("build_spec: need at least one interval (L <= floor(log2 n) - 1)");
  }
  spec.m = spec.m_tilde - L;

  spec.intervals.reserve(spec.m);
  for (unsigned t = 0; t < spec.m; ++t) {
    FamilySpec::Interval iv;
    iv.lo = n >> (t + 1);
    iv.hi = n >> t;
    iv.odd_count = odd_count_up_to(iv.hi) - odd_count_up_to(iv.lo);
    if (iv.odd_count == 0) {
      throw std::invalid_argument("build_spec: interval " + std::to_string(t) +
                                  " contains no odd integer");
    }
    iv.first_odd = iv.lo % 2 == 0 ? iv.lo + 1 : iv.lo + 2;
    spec.intervals.push_back(iv);
  }
  return spec;
}

FamilySample sample(const FamilySpec& spec, std::uint64_t seed, std::uint64_t index) {
  FamilySample s;
  s.q.reserve(spec.m);
  s.elements.reserve(spec.m);
  for (unsigned t = 0; t < spec.m; ++t) {
    const auto& iv = spec.intervals[t];
    const std::uint64_t pick = counter_uniform(seed, index, t, iv.odd_count);
    const std::uint64_t q = iv.first_odd + 2 * pick;
    s.q.push_back(q);
    s.elements.push_back(q << t);
  }
  return s;
}

bool has_three_term_gp(std::span<const std::uint64_t> a) {
  if (a.size() < 3) return false;
  std::vector<std::uint64_t> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::unordered_set<std::uint64_t> members(sorted.begin(), sorted.end());

  // b^2 = a*c with a < c forces a < b < c, so scanning unordered pairs and
  // testing the geometric mean covers every triple of distinct members.
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const unsigned __int128 prod =
          static_cast<unsigned __int128>(sorted[i]) * sorted[j];
      const std::uint64_t root = integer_sqrt(prod);
      if (static_cast<unsigned __int128>(root) * root == prod && members.count(root)) {
        return true;
      }
    }
  }
  return false;
}

bigrat gp_union_bound(const FamilySpec& spec) {
  bigrat bound = 0;
  for (unsigned k = 2; k + 1 <= spec.m; ++k) {
    bound += bigrat(bigint(k), 2 * bigint(spec.intervals[k].odd_count));
  }
  return bound;
}

unsigned preset_shrinkage(std::uint64_t n, unsigned A) {
  if (n < 16) throw std::invalid_argument("preset_shrinkage: n must be >= 16");
  const unsigned m_tilde = floor_log2(bigint(n));
  bigint power = 1;
  for (unsigned i = 0; i < A + 2; ++i) power *= m_tilde;
  return ceil_log2(power);
}

GpExperimentReport run_experiment(const FamilySpec& spec, std::uint64_t samples,
                                  std::uint64_t seed, unsigned workers) {
  if (samples < 1) throw std::invalid_argument("run_experiment: samples must be >= 1");
  if (workers < 1) workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, samples));

  // Per-index verdicts; the merge is a straight sum, so the worker layout
  // cannot affect the outcome.
  std::vector<std::uint8_t> verdict(samples, 0);
  std::vector<std::uint8_t> dissociated(samples, 0);
  std::vector<std::exception_ptr> errors(workers);

  auto run_range = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    try {
      CheckerConfig check_cfg;
      for (std::uint64_t i = lo; i < hi; ++i) {
        const FamilySample s = sample(spec, seed, i);
        const bool generic = has_three_term_gp(s.elements);
        const bool structured = has_structured_gp(s);
        if (generic != structured) {
          throw invariant_violation(
              "run_experiment: generic and structured GP detectors disagree at index " +
              std::to_string(i));
        }
        verdict[i] = generic ? 1 : 0;
        dissociated[i] = is_dissociated_bruteforce(s.elements, check_cfg) ? 1 : 0;
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run_range(0, 0, samples);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (samples + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, samples);
      const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, samples);
      pool.emplace_back(run_range, w, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  GpExperimentReport report;
  report.samples = samples;
  report.seed = seed;
  report.all_dissociated = true;
  for (std::uint64_t i = 0; i < samples; ++i) {
    report.with_gp += verdict[i];
    if (!dissociated[i]) report.all_dissociated = false;
  }
  if (!report.all_dissociated) {
    throw invariant_violation("run_experiment: a sampled member failed the dissociation check; "
                              "this contradicts the construction and indicates a bug");
  }
  report.fraction = bigrat(bigint(report.with_gp), bigint(samples));
  report.union_bound_exact = gp_union_bound(spec);
  report.union_bound = report.union_bound_exact.convert_to<double>();
  return report;
}

}  // namespace dissoc
