#include "dissoc/sumsets.hpp"

#include <stdexcept>
#include <string>

#include "dissoc/errors.hpp"

namespace dissoc {

namespace {

void check_mask_capacity(std::uint64_t nbits, const SumsetConfig& cfg, const char* who) {
  if (nbits > cfg.mem_cap_bits) {
    throw capacity_error(std::string(who) + ": mask of " + std::to_string(nbits) +
                         " bits exceeds the memory cap of " +
                         std::to_string(cfg.mem_cap_bits) + " bits");
  }
}

void check_positive(std::uint64_t gamma, const char* who) {
  if (gamma == 0) throw std::invalid_argument(std::string(who) + ": element must be >= 1");
}

}  // namespace

SignedSumSet::SignedSumSet(SumsetConfig cfg) : cfg_(cfg), mask_(1) {
  mask_.set(0);  // the empty signing
}

bool SignedSumSet::interval_covered(std::uint64_t hi) const {
  if (hi == 0) return true;
  return mask_.all_set(1, hi);
}

std::uint64_t SignedSumSet::next_non_member(std::uint64_t from) const {
  return mask_.find_next_zero(from);
}

SignedSumSet SignedSumSet::extended(std::uint64_t gamma) const {
  check_positive(gamma, "signed_extend");
  const std::uint64_t new_total = total_ + gamma;
  check_mask_capacity(new_total + 1, cfg_, "signed_extend");

  SignedSumSet out(cfg_);
  out.n_ = n_ + 1;
  out.total_ = new_total;
  out.mask_ = BitMask(new_total + 1);
  // Full set is D | (D + gamma) | (D - gamma) with D symmetric. On the
  // stored half that is the mask itself, its left and right shifts, and the
  // reflection gamma - u for stored u <= gamma.
  out.mask_.or_shifted_left(mask_, 0);
  out.mask_.or_shifted_left(mask_, gamma);
  out.mask_.or_shifted_right(mask_, gamma);
  out.mask_.or_reflected(mask_, gamma);
  return out;
}

RepCountTable::RepCountTable(unsigned cap, SumsetConfig cfg)
    : cfg_(cfg), cap_(cap), counts_(1, 1) {
  if (cap_ < 1 || cap_ > 255) {
    throw std::invalid_argument("RepCountTable: cap must be in [1, 255]");
  }
}

RepCountTable RepCountTable::extended(std::uint64_t x) const {
  check_positive(x, "rep_extend");
  const std::uint64_t new_total = total_ + x;
  if (new_total > cfg_.mem_cap_bits / 8) {
    throw capacity_error("rep_extend: table of " + std::to_string(new_total) +
                         " + 1 byte cells exceeds the memory cap of " +
                         std::to_string(cfg_.mem_cap_bits) + " bits");
  }
  check_mask_capacity((new_total + 1) * 8, cfg_, "rep_extend");

  RepCountTable out(cap_, cfg_);
  out.n_ = n_ + 1;
  out.total_ = new_total;
  out.counts_.assign(new_total + 1, 0);
  for (std::uint64_t s = 0; s <= new_total; ++s) {
    unsigned c = count_at(s) + (s >= x ? count_at(s - x) : 0u);
    out.counts_[s] = static_cast<std::uint8_t>(c > cap_ ? cap_ : c);
  }
  return out;
}

unsigned RepCountTable::max_pair_count(std::uint64_t x) const {
  check_positive(x, "max_pair_count");
  // s ranges over [0, total + x]; wherever one summand is zero the pair is a
  // single entry, and every single entry already appears as counts_[s] in
  // this scan, so [0, total] suffices.
  unsigned best = 0;
  for (std::uint64_t s = 0; s <= total_; ++s) {
    const unsigned c = counts_[s] + (s >= x ? count_at(s - x) : 0u);
    if (c > best) best = c;
  }
  return best;
}

KSignedSumSet::KSignedSumSet(unsigned k, SumsetConfig cfg) : cfg_(cfg), k_(k), mask_(1) {
  if (k_ < 1) throw std::invalid_argument("KSignedSumSet: k must be >= 1");
  mask_.set(0);
}

std::uint64_t KSignedSumSet::next_non_member(std::uint64_t from) const {
  return mask_.find_next_zero(from);
}

KSignedSumSet KSignedSumSet::extended(std::uint64_t gamma) const {
  check_positive(gamma, "ksigned_extend");
  const std::uint64_t new_total = total_ + gamma;
  if (new_total > (cfg_.mem_cap_bits - 1) / k_) {
    throw capacity_error("ksigned_extend: mask of k * " + std::to_string(new_total) +
                         " + 1 bits exceeds the memory cap of " +
                         std::to_string(cfg_.mem_cap_bits) + " bits");
  }
  check_mask_capacity(k_ * new_total + 1, cfg_, "ksigned_extend");

  KSignedSumSet out(k_, cfg_);
  out.n_ = n_ + 1;
  out.total_ = new_total;
  out.mask_ = BitMask(k_ * new_total + 1);
  out.mask_.or_shifted_left(mask_, 0);
  for (unsigned j = 1; j <= k_; ++j) {
    const std::uint64_t shift = std::uint64_t{j} * gamma;
    out.mask_.or_shifted_left(mask_, shift);
    out.mask_.or_shifted_right(mask_, shift);
    out.mask_.or_reflected(mask_, shift);
  }
  return out;
}

}  // namespace dissoc
