#include "dissoc/greedy.hpp"

#include <stdexcept>
#include <string>

#include "dissoc/checkers.hpp"
#include "dissoc/errors.hpp"

namespace dissoc {

namespace {

constexpr std::uint64_t kU64Guard = std::uint64_t{1} << 62;

std::uint64_t to_u64(const bigint& v, const char* who) {
  if (v < 0 || v > kU64Guard) {
    throw capacity_error(std::string(who) + ": term too large for mask arithmetic");
  }
  return v.convert_to<std::uint64_t>();
}

/// Level masks over the rep-count table: level c holds {s : counts[s] >= c}.
/// Appending x violates the bound g iff some split c has
/// counts[s] >= c and counts[s - x] >= g + 1 - c.
struct LevelMasks {
  std::vector<BitMask> levels;

  void rebuild(const RepCountTable& table, unsigned g) {
    levels.assign(g, BitMask(table.total() + 1));
    for (std::uint64_t s = 0; s <= table.total(); ++s) {
      const unsigned c = table.count_at(s);
      for (unsigned lvl = 1; lvl <= g && lvl <= c; ++lvl) levels[lvl - 1].set(s);
    }
  }

  bool rejects(std::uint64_t x, unsigned g) const {
    for (unsigned c = 1; c <= g; ++c) {
      if (levels[c - 1].intersects_shifted(levels[g - c], x)) return true;
    }
    return false;
  }
};

void validate_inputs(std::uint64_t a, std::uint64_t b, const Variant& variant,
                     std::size_t horizon) {
  if (a < 1 || b <= a) throw std::invalid_argument("generate: seeds must satisfy 1 <= a < b");
  if (horizon < 2) throw std::invalid_argument("generate: horizon must be >= 2");
  switch (variant.kind) {
    case VariantKind::SubsetBounded:
      if (variant.g < 1 || variant.g > 254) {
        throw std::invalid_argument("generate: g must be in [1, 254]");
      }
      break;
    case VariantKind::SignBounded:
      if (variant.k < 1) throw std::invalid_argument("generate: k must be >= 1");
      break;
    case VariantKind::Dissociated:
      break;
  }
}

}  // namespace

GreedySequence generate(std::uint64_t a, std::uint64_t b, const Variant& variant,
                        std::size_t horizon, const GenerateOptions& options) {
  validate_inputs(a, b, variant, horizon);

  GreedySequence seq;
  seq.a_ = a;
  seq.b_ = b;
  seq.variant_ = variant;
  seq.options_ = options;
  seq.terms_.reserve(horizon);
  seq.prefix_sums_.reserve(horizon);

  const SumsetConfig cfg{options.mem_cap_bits};
  const bool dissociated = variant.kind == VariantKind::Dissociated;

  SignedSumSet signed_set(cfg);
  RepCountTable rep_table(variant.kind == VariantKind::SubsetBounded ? variant.g + 1 : 2, cfg);
  KSignedSumSet ksigned_set(variant.kind == VariantKind::SignBounded ? variant.k : 1, cfg);
  LevelMasks levels;

  std::uint64_t running_sum = 0;  // valid while mask-backed
  bool analytic = false;

  auto absorb = [&](std::uint64_t x) {
    switch (variant.kind) {
      case VariantKind::Dissociated:
        signed_set = signed_set.extended(x);
        break;
      case VariantKind::SubsetBounded:
        rep_table = rep_table.extended(x);
        levels.rebuild(rep_table, variant.g);
        break;
      case VariantKind::SignBounded:
        ksigned_set = ksigned_set.extended(x);
        break;
    }
    running_sum += x;
    seq.terms_.emplace_back(x);
    seq.prefix_sums_.push_back(seq.prefix_sums_.empty() ? bigint(x)
                                                        : seq.prefix_sums_.back() + x);
  };

  auto accepts = [&](std::uint64_t x) {
    switch (variant.kind) {
      case VariantKind::Dissociated:
        return dissociated_accept(signed_set, x);
      case VariantKind::SubsetBounded:
        return !levels.rejects(x, variant.g);
      case VariantKind::SignBounded:
        return dk_accept(ksigned_set, x);
    }
    return false;
  };

  // The certificate at index n: [1, gamma_n - 1] all representable from the
  // first n-1 terms and 2 gamma_n > S_{n-1}. Once it holds, every later term
  // is exactly double its predecessor, so the mask can stop growing.
  auto certificate_holds = [&](std::uint64_t x) {
    return signed_set.interval_covered(x > 0 ? x - 1 : 0) && 2 * x > running_sum;
  };

  absorb(a);

  // gamma_2 = b is seeded, not chosen; it still must keep the pair inside
  // the variant's class (only the sign-bounded variant can fail here).
  if (!accepts(b)) {
    throw std::invalid_argument("generate: seeds {a, b} do not form a valid pair for this variant");
  }
  if (dissociated && options.use_certificate && certificate_holds(b)) {
    seq.certified_at_ = 2;
    analytic = true;
    seq.terms_.emplace_back(b);
    seq.prefix_sums_.push_back(seq.prefix_sums_.back() + b);
  } else {
    absorb(b);
  }

  while (seq.terms_.size() < horizon) {
    if (analytic) {
      const bigint next = 2 * seq.terms_.back();
      seq.terms_.push_back(next);
      seq.prefix_sums_.push_back(seq.prefix_sums_.back() + next);
      continue;
    }

    const std::uint64_t prev = to_u64(seq.terms_.back(), "generate");
    std::uint64_t x = prev + 1;
    while (true) {
      if (variant.kind == VariantKind::Dissociated) {
        x = signed_set.next_non_member(x);
        break;  // first non-member above prev is the greedy choice
      }
      if (variant.kind == VariantKind::SignBounded) {
        x = ksigned_set.next_non_member(x);  // j = 1 filter
        if (dk_accept(ksigned_set, x)) break;
        ++x;
        continue;
      }
      if (accepts(x)) break;
      ++x;
    }

    if (dissociated && options.use_certificate && certificate_holds(x)) {
      seq.certified_at_ = seq.terms_.size() + 1;
      analytic = true;
      seq.terms_.emplace_back(x);
      seq.prefix_sums_.push_back(seq.prefix_sums_.back() + x);
      continue;
    }
    absorb(x);
  }

  return seq;
}

DoublingReport detect_doubling(const GreedySequence& seq) {
  const auto& t = seq.terms();
  if (t.size() < 3) throw std::invalid_argument("detect_doubling: need at least 3 terms");

  std::size_t last_non_doubling = 0;
  for (std::size_t m = 2; m <= t.size(); ++m) {
    if (t[m - 1] != 2 * t[m - 2]) last_non_doubling = m;
  }
  DoublingReport report;
  report.onset = last_non_doubling == 0 ? 2 : last_non_doubling + 1;
  report.certificate_index = seq.certified_at();
  report.bound = n0_upper_bound(seq.seed_a(), seq.seed_b());
  report.horizon = t.size();
  return report;
}

bool certify_doubling(const GreedySequence& seq, std::size_t n) {
  if (seq.variant().kind != VariantKind::Dissociated) {
    throw variant_error("certify_doubling: certificate is established for the dissociated variant only");
  }
  if (n < 2 || n > seq.terms().size()) {
    throw std::invalid_argument("certify_doubling: index out of range (need 2 <= n <= horizon)");
  }
  const SumsetConfig cfg{seq.options().mem_cap_bits};
  SignedSumSet d(cfg);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    d = d.extended(to_u64(seq.terms()[i], "certify_doubling"));
  }
  const bigint& gamma_n = seq.terms()[n - 1];
  const bigint& sum_prev = seq.prefix_sums()[n - 2];
  if (2 * gamma_n <= sum_prev) return false;
  const std::uint64_t g = to_u64(gamma_n, "certify_doubling");
  return d.interval_covered(g - 1);
}

unsigned n0_upper_bound(std::uint64_t a, std::uint64_t b) {
  (void)a;
  if (b < 2) throw std::invalid_argument("n0_upper_bound: b must be >= 2");
  const unsigned L = ceil_log2(2 * bigint(b) + 2);
  const unsigned K = ceil_log2(bigint(L));
  return L + 2 * K + 5;
}

std::vector<bigrat> potential_trace(const GreedySequence& seq) {
  const auto kind = seq.variant().kind;
  if (kind == VariantKind::SignBounded) {
    throw variant_error("potential_trace: defined for dissociated and subset-bounded variants");
  }
  const unsigned g = kind == VariantKind::SubsetBounded ? seq.variant().g : 1;
  std::vector<bigrat> out;
  out.reserve(seq.terms().size());
  bigint pow2 = 1;
  for (const auto& s : seq.prefix_sums()) {
    pow2 *= 2;
    out.emplace_back(bigint(g * (s + 1)), pow2);
  }
  return out;
}

std::vector<bigrat> ratio_trace(const GreedySequence& seq) {
  const auto& t = seq.terms();
  if (t.size() < 2) throw std::invalid_argument("ratio_trace: need at least 2 terms");
  std::vector<bigrat> out;
  out.reserve(t.size() - 1);
  for (std::size_t i = 1; i < t.size(); ++i) out.emplace_back(t[i], t[i - 1]);
  return out;
}

}  // namespace dissoc
