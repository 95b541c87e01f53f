#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dissoc {

/// Dense bit vector over the index range [0, size), word-packed.
///
/// This is the kernel behind the sumset engines: extending a sumset by one
/// element is a handful of shifted ORs over these words, and the greedy
/// candidate scan is a first-zero search. All shift amounts are in bits and
/// may exceed the word width.
class BitMask {
 public:
  using word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMask() = default;
  explicit BitMask(std::uint64_t nbits)
      : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, 0) {}

  std::uint64_t size() const { return nbits_; }

  bool test(std::uint64_t i) const {
    if (i >= nbits_) return false;
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }

  void set(std::uint64_t i) {
    if (i >= nbits_) throw std::out_of_range("BitMask::set: index beyond size");
    words_[i / kWordBits] |= word{1} << (i % kWordBits);
  }

  /// OR `src` shifted left by `shift` bits into *this. Bits of src that land
  /// at or beyond size() are dropped.
  void or_shifted_left(const BitMask& src, std::uint64_t shift) {
    const std::size_t word_shift = shift / kWordBits;
    const unsigned bit_shift = static_cast<unsigned>(shift % kWordBits);
    const std::size_t nw = words_.size();
    for (std::size_t i = 0; i < src.words_.size(); ++i) {
      const word w = src.words_[i];
      if (w == 0) continue;
      const std::size_t lo = i + word_shift;
      if (lo >= nw) break;
      words_[lo] |= w << bit_shift;
      if (bit_shift != 0 && lo + 1 < nw) {
        words_[lo + 1] |= w >> (kWordBits - bit_shift);
      }
    }
    mask_tail();
  }

  /// OR `src` shifted right by `shift` bits into *this.
  void or_shifted_right(const BitMask& src, std::uint64_t shift) {
    const std::size_t word_shift = shift / kWordBits;
    const unsigned bit_shift = static_cast<unsigned>(shift % kWordBits);
    const std::size_t nw = words_.size();
    for (std::size_t i = word_shift; i < src.words_.size(); ++i) {
      const word w = src.words_[i];
      if (w == 0) continue;
      const std::size_t lo = i - word_shift;
      if (lo < nw) words_[lo] |= w >> bit_shift;
      if (bit_shift != 0 && lo >= 1 && lo - 1 < nw) {
        words_[lo - 1] |= w << (kWordBits - bit_shift);
      }
    }
    mask_tail();
  }

  /// For every set bit u of `src` with u <= pivot, set bit pivot - u of *this.
  /// This is the reflected overlap used when only the nonnegative half of a
  /// symmetric set is stored.
  void or_reflected(const BitMask& src, std::uint64_t pivot) {
    if (src.nbits_ == 0) return;
    const std::uint64_t hi = std::min<std::uint64_t>(pivot, src.nbits_ - 1);
    for (std::uint64_t u = src.find_next_one(0); u <= hi; u = src.find_next_one(u + 1)) {
      const std::uint64_t v = pivot - u;
      if (v < nbits_) words_[v / kWordBits] |= word{1} << (v % kWordBits);
    }
  }

  /// First index >= from with an unset bit; indices >= size() count as unset,
  /// so the result is min(answer, size()).
  std::uint64_t find_next_zero(std::uint64_t from) const {
    if (from >= nbits_) return nbits_;
    std::size_t wi = from / kWordBits;
    unsigned bi = static_cast<unsigned>(from % kWordBits);
    word w = ~words_[wi] & (~word{0} << bi);
    while (true) {
      if (w != 0) {
        const std::uint64_t idx = wi * kWordBits + std::countr_zero(w);
        return std::min(idx, nbits_);
      }
      if (++wi == words_.size()) return nbits_;
      w = ~words_[wi];
    }
  }

  /// First index >= from with a set bit, or size() if none.
  std::uint64_t find_next_one(std::uint64_t from) const {
    if (from >= nbits_) return nbits_;
    std::size_t wi = from / kWordBits;
    unsigned bi = static_cast<unsigned>(from % kWordBits);
    word w = words_[wi] & (~word{0} << bi);
    while (true) {
      if (w != 0) return wi * kWordBits + std::countr_zero(w);
      if (++wi == words_.size()) return nbits_;
      w = words_[wi];
    }
  }

  /// True iff every bit in [lo, hi] is set. Empty range (lo > hi) is true.
  bool all_set(std::uint64_t lo, std::uint64_t hi) const {
    if (lo > hi) return true;
    if (hi >= nbits_) return false;
    return find_next_zero(lo) > hi;
  }

  /// True iff some index s has this->test(s + shift) and other.test(s).
  /// Equivalent to (*this >> shift) & other being nonempty, without
  /// materializing the shift.
  bool intersects_shifted(const BitMask& other, std::uint64_t shift) const {
    const std::size_t word_shift = shift / kWordBits;
    const unsigned bit_shift = static_cast<unsigned>(shift % kWordBits);
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
      const word ow = other.words_[i];
      if (ow == 0) continue;
      const std::size_t hi_idx = i + word_shift;
      word w = 0;
      if (hi_idx < words_.size()) w = words_[hi_idx] >> bit_shift;
      if (bit_shift != 0 && hi_idx + 1 < words_.size()) {
        w |= words_[hi_idx + 1] << (kWordBits - bit_shift);
      }
      if (w & ow) return true;
    }
    return false;
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (word w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  bool operator==(const BitMask& other) const {
    return nbits_ == other.nbits_ && words_ == other.words_;
  }

 private:
  void mask_tail() {
    const unsigned tail = static_cast<unsigned>(nbits_ % kWordBits);
    if (tail != 0 && !words_.empty()) words_.back() &= (word{1} << tail) - 1;
  }

  std::uint64_t nbits_ = 0;
  std::vector<word> words_;
};

}  // namespace dissoc
