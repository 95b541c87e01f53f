#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <vector>

#include "dissoc/density.hpp"
#include "dissoc/errors.hpp"

using namespace dissoc;

namespace {

// Independent binomial: plain multiplicative formula.
bigint comb(unsigned n, unsigned r) {
  bigint v = 1;
  for (unsigned i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

bigint scan_count(unsigned k, double C) {
  BinomialLadder ladder;
  bigint count = 0;
  for (bigint n = ladder.value(k); n < ladder.value(k + 1); ++n) {
    if (in_NC(n, C)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("central binomial values and ladder invariants") {
  CHECK(central_binomial(4) == 6);
  CHECK(central_binomial(8) == 70);
  CHECK(central_binomial(0) == 1);
  BinomialLadder ladder;
  CHECK(ladder.value(1) == 1);
  CHECK(ladder.value(2) == 2);
  for (unsigned k = 0; k <= 40; ++k) CHECK(ladder.value(k) == comb(k, k / 2));
  for (unsigned k = 2; k <= 40; ++k) CHECK(ladder.value(k + 1) > ladder.value(k));
  for (unsigned j = 1; j <= 19; ++j) {
    CHECK(ladder.value(2 * j + 1) * (j + 1) == ladder.value(2 * j) * (2 * j + 1));
    CHECK(ladder.value(2 * j + 2) == 2 * ladder.value(2 * j + 1));
  }
}

TEST_CASE("float estimate brackets the exact ladder") {
  using boost::multiprecision::cpp_bin_float_50;
  BinomialLadder ladder;
  for (unsigned k = 2; k <= 300; ++k) {
    const FloatRange est = central_binomial_estimate(k);
    const double exact = static_cast<double>(cpp_bin_float_50(ladder.value(k)));
    CHECK(est.lo <= exact);
    CHECK(exact <= est.hi);
    // the window narrows like 1/(16 k^2)
    CHECK(est.hi / est.lo < 1.0 + 1.0 / (8.0 * k * k));
  }
}

TEST_CASE("big_U worked examples and boundaries") {
  CHECK(big_U(bigint(10)) == 5);
  CHECK(big_U(bigint(100)) == 8);
  CHECK(big_U(bigint(1)) == 1);
  BinomialLadder ladder;
  for (unsigned k = 3; k <= 40; ++k) {
    CHECK(big_U(ladder.value(k)) == k);
    CHECK(big_U(ladder.value(k) - 1) == k - 1);
  }
  CHECK_THROWS_AS(big_U(bigint(0)), std::domain_error);
}

TEST_CASE("in_NC worked examples") {
  CHECK(in_NC(bigint(100), 0.0));
  CHECK_FALSE(in_NC(bigint(70), 0.0));
  CHECK_FALSE(in_NC(bigint(99), 0.0));
  CHECK_THROWS_AS(in_NC(bigint(1), 0.0), std::domain_error);
}

TEST_CASE("in_NC decides exact ties rationally") {
  // n = 2^16: threshold is 16 + 2/2 + 0 = 18 exactly, and U(65536) = 18.
  CHECK(big_U(bigint(65536)) == 18);
  CHECK(in_NC(bigint(65536), 0.0));
  CHECK_FALSE(in_NC(bigint(65535), 0.0));
  // any negative C breaks the tie downward
  CHECK_FALSE(in_NC(bigint(65536), -1e-18));
  // n = 16: threshold 4 + 1 + 0 = 5 = U(16)
  CHECK(big_U(bigint(16)) == 5);
  CHECK(in_NC(bigint(16), 0.0));
  CHECK_FALSE(in_NC(bigint(16), -1e-18));
}

TEST_CASE("interval_density worked example k=8, C=0") {
  const DensityPoint p = interval_density(8, 0.0);
  CHECK(p.threshold == 100);
  CHECK(p.member_count == 26);
  CHECK(p.interval_size == 56);
  CHECK(p.fraction == bigrat(26, 56));
  CHECK(p.limit == doctest::Approx(0.7466858626845).epsilon(1e-10));
}

TEST_CASE("interval_density equals the exhaustive scan") {
  for (unsigned k = 3; k <= 14; ++k) {
    const DensityPoint p = interval_density(k, 0.0);
    CHECK(p.member_count == scan_count(k, 0.0));
  }
  // off-center offsets too
  for (double C : {-0.4, 0.2, 0.31}) {
    for (unsigned k : {5u, 9u, 12u}) {
      CHECK(interval_density(k, C).member_count == scan_count(k, C));
    }
  }
}

TEST_CASE("binary search lands exactly on the rational tie at k=18") {
  // n = 2^16 sits exactly on the threshold line for C = 0, so the search
  // has to resolve a true tie; the rational path decides it upward.
  const DensityPoint p = interval_density(18, 0.0);
  CHECK(p.threshold == 65536);
  CHECK(p.member_count == central_binomial(19) - 65536);
}

TEST_CASE("interval_density is monotone in C and guards its domain") {
  const auto f1 = interval_density(10, -0.3).fraction;
  const auto f2 = interval_density(10, 0.0).fraction;
  const auto f3 = interval_density(10, 0.3).fraction;
  CHECK(f1 <= f2);
  CHECK(f2 <= f3);
  // near the bottom of the offset range the interval can be empty of members
  const DensityPoint none = interval_density(10, -0.67);
  CHECK(none.member_count == 0);
  CHECK(none.fraction == 0);
  CHECK(none.member_count == scan_count(10, -0.67));
  CHECK_THROWS_AS(interval_density(2, 0.0), std::domain_error);
  CHECK_THROWS_AS(interval_density(8, 0.4), std::out_of_range);
  CHECK_THROWS_AS(interval_density(8, -0.7), std::out_of_range);
}

TEST_CASE("theoretical_density") {
  CHECK(theoretical_density(0.0) == doctest::Approx(2 - std::sqrt(M_PI / 2)).epsilon(1e-12));
  CHECK(theoretical_density(c_star() - 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(theoretical_density(c_star() - 1 + 1e-9) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK_THROWS_AS(theoretical_density(0.4), std::out_of_range);
  CHECK_THROWS_AS(theoretical_density(-0.7), std::out_of_range);
  CHECK(c_star() == doctest::Approx(0.5 * std::log2(M_PI / 2)).epsilon(1e-12));
}

TEST_CASE("size_bound_rhs values and domain") {
  const double expected32 = 5.0 + 0.5 * std::log2(5.0) + 0.5 * std::log2(M_PI / 2);
  CHECK(size_bound_rhs(bigint(32), Variant::dissociated()) ==
        doctest::Approx(expected32).epsilon(1e-12));
  CHECK(size_bound_rhs(bigint(32), Variant::subset_bounded(2)) ==
        doctest::Approx(expected32 + 1.0).epsilon(1e-12));
  const double l3 = std::log(3.0);
  const double expected_k2 = std::log(16.0) / l3 + 0.5 * std::log(std::log2(16.0)) / l3 +
                             0.5 * std::log(2 * M_PI / 3 * 2 * 4) / l3;
  CHECK(size_bound_rhs(bigint(16), Variant::sign_bounded(2)) ==
        doctest::Approx(expected_k2).epsilon(1e-12));
  CHECK_THROWS_AS(size_bound_rhs(bigint(1), Variant::dissociated()), std::domain_error);
  CHECK_THROWS_AS(size_bound_rhs(bigint(2), Variant::dissociated()), std::domain_error);
}

TEST_CASE("hard inequalities, exactly") {
  // powers of two at n = 32, m = 5: 32 <= 161
  CHECK(hard_count_inequality(5, bigint(32)));
  // {1,2,3,4,8}, g = 2: 2^5 = 32 <= 2 * 19 = 38
  CHECK(hard_subset_inequality(5, bigint(18), 2));
  CHECK_FALSE(hard_count_inequality(10, bigint(3)));
}

TEST_CASE("max_multinomial") {
  CHECK(max_multinomial(4, 1) == 6);
  CHECK(max_multinomial(2, 2) == 3);
  CHECK(max_multinomial(3, 2) == 7);
  for (unsigned m = 1; m <= 12; ++m) CHECK(max_multinomial(m, 1) == central_binomial(m));
  CHECK_THROWS_AS(max_multinomial(10, 10, 50), budget_error);
}

TEST_CASE("isoperimetric_check") {
  const std::vector<std::uint64_t> pow2{1, 2, 4, 8, 16};
  CHECK(isoperimetric_check(pow2, Variant::dissociated()));
  const std::vector<std::uint64_t> tight{3, 5, 6, 7};
  CHECK(isoperimetric_check(tight, Variant::dissociated()));
  const std::vector<std::uint64_t> base3{1, 3, 9};
  CHECK(isoperimetric_check(base3, Variant::sign_bounded(2)));
  const std::vector<std::uint64_t> not_dissociated{1, 2, 3};
  CHECK_THROWS_AS(isoperimetric_check(not_dissociated, Variant::dissociated()), class_error);
  CHECK(isoperimetric_check(not_dissociated, Variant::subset_bounded(2)));
}

TEST_CASE("conjecture_slack") {
  const std::vector<bigint> pow2{1, 2, 4, 8, 16};
  CHECK(conjecture_slack(pow2) == doctest::Approx(1.0).epsilon(1e-12));
  const std::vector<bigint> greedy13{1, 3, 5, 10, 20};
  CHECK(conjecture_slack(greedy13) == doctest::Approx(3 - std::log2(5.0)).epsilon(1e-12));
  const std::vector<bigint> single{5};
  CHECK(conjecture_slack(single) == doctest::Approx(1 - std::log2(5.0)).epsilon(1e-12));
}
