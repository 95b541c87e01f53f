#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "dissoc/bitmask.hpp"
#include "dissoc/rng.hpp"

using dissoc::BitMask;

namespace {

// Plain bit-by-bit reference model.
struct Naive {
  std::vector<char> bits;
  explicit Naive(std::uint64_t n) : bits(n, 0) {}
  static Naive random(std::uint64_t n, std::uint64_t seed) {
    Naive m(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      m.bits[i] = dissoc::counter_word(seed, i, 0, 0) % 3 == 0;
    }
    return m;
  }
};

BitMask to_mask(const Naive& n) {
  BitMask m(n.bits.size());
  for (std::uint64_t i = 0; i < n.bits.size(); ++i) {
    if (n.bits[i]) m.set(i);
  }
  return m;
}

bool equal(const BitMask& m, const Naive& n) {
  for (std::uint64_t i = 0; i < n.bits.size(); ++i) {
    if (m.test(i) != static_cast<bool>(n.bits[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("shifted ORs match the bit-by-bit model") {
  const std::uint64_t sizes[] = {1, 7, 64, 65, 127, 200, 513};
  const std::uint64_t shifts[] = {0, 1, 5, 63, 64, 65, 128, 250, 600};
  for (std::uint64_t src_size : sizes) {
    for (std::uint64_t dst_size : sizes) {
      const Naive src = Naive::random(src_size, src_size * 31 + dst_size);
      const BitMask src_mask = to_mask(src);
      for (std::uint64_t shift : shifts) {
        Naive expect_left(dst_size);
        Naive expect_right(dst_size);
        for (std::uint64_t i = 0; i < src_size; ++i) {
          if (!src.bits[i]) continue;
          if (i + shift < dst_size) expect_left.bits[i + shift] = 1;
          if (i >= shift && i - shift < dst_size) expect_right.bits[i - shift] = 1;
        }
        BitMask left(dst_size), right(dst_size);
        left.or_shifted_left(src_mask, shift);
        right.or_shifted_right(src_mask, shift);
        CHECK(equal(left, expect_left));
        CHECK(equal(right, expect_right));
      }
    }
  }
}

TEST_CASE("reflection matches the bit-by-bit model") {
  for (std::uint64_t size : {1ull, 64ull, 100ull, 130ull}) {
    const Naive src = Naive::random(size, size);
    const BitMask src_mask = to_mask(src);
    for (std::uint64_t pivot : {0ull, 1ull, 63ull, 64ull, 99ull, 150ull, 400ull}) {
      const std::uint64_t dst_size = pivot + 1;
      Naive expect(dst_size);
      for (std::uint64_t u = 0; u < size && u <= pivot; ++u) {
        if (src.bits[u]) expect.bits[pivot - u] = 1;
      }
      BitMask out(dst_size);
      out.or_reflected(src_mask, pivot);
      CHECK(equal(out, expect));
    }
  }
}

TEST_CASE("zero and one scans") {
  const Naive n = Naive::random(300, 17);
  const BitMask m = to_mask(n);
  for (std::uint64_t from = 0; from <= 305; ++from) {
    std::uint64_t naive_zero = 300;
    for (std::uint64_t i = from; i < 300; ++i) {
      if (!n.bits[i]) {
        naive_zero = i;
        break;
      }
    }
    std::uint64_t naive_one = 300;
    for (std::uint64_t i = from; i < 300; ++i) {
      if (n.bits[i]) {
        naive_one = i;
        break;
      }
    }
    CHECK(m.find_next_zero(from) == naive_zero);
    CHECK(m.find_next_one(from) == naive_one);
  }
}

TEST_CASE("all_set ranges") {
  BitMask m(200);
  for (std::uint64_t i = 10; i <= 150; ++i) m.set(i);
  CHECK(m.all_set(10, 150));
  CHECK(m.all_set(11, 149));
  CHECK(m.all_set(50, 50));
  CHECK(m.all_set(5, 4));  // empty range
  CHECK_FALSE(m.all_set(9, 150));
  CHECK_FALSE(m.all_set(10, 151));
  CHECK_FALSE(m.all_set(0, 500));  // beyond size
}

TEST_CASE("intersects_shifted matches the definition") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Naive a = Naive::random(190, seed * 2 + 1);
    const Naive b = Naive::random(140, seed * 2 + 2);
    const BitMask ma = to_mask(a), mb = to_mask(b);
    for (std::uint64_t shift : {0ull, 1ull, 17ull, 64ull, 65ull, 189ull, 400ull}) {
      bool naive = false;
      for (std::uint64_t s = 0; s < b.bits.size(); ++s) {
        if (b.bits[s] && s + shift < a.bits.size() && a.bits[s + shift]) {
          naive = true;
          break;
        }
      }
      CHECK(ma.intersects_shifted(mb, shift) == naive);
    }
  }
}

TEST_CASE("count and equality") {
  Naive n = Naive::random(129, 5);
  BitMask m = to_mask(n);
  std::uint64_t expected = 0;
  for (char c : n.bits) expected += c;
  CHECK(m.count() == expected);
  CHECK(m == to_mask(n));
}
