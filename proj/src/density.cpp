#include "dissoc/density.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dissoc/errors.hpp"

namespace dissoc {

namespace mp = boost::multiprecision;

namespace {

template <unsigned Digits10>
using bin_float = mp::number<mp::cpp_bin_float<Digits10>>;

/// sign of log2(n) + (1/2) log2(log2(n)) + C - k, or 0 when the working
/// precision cannot separate it from zero.
template <unsigned Digits10>
int threshold_sign(const bigint& n, unsigned k, double C) {
  using F = bin_float<Digits10>;
  const F ln2 = log(F(2));
  const F l2n = log(F(n)) / ln2;
  const F ll2n = log(l2n) / ln2;
  const F f = l2n + ll2n / 2 + F(C) - F(k);
  const F margin = std::numeric_limits<F>::epsilon() * 64 * (abs(l2n) + abs(ll2n) + 64);
  if (f > margin) return 1;
  if (f < -margin) return -1;
  return 0;
}

template <unsigned Digits10>
bin_float<Digits10> c_star_value() {
  using F = bin_float<Digits10>;
  const F pi = boost::math::constants::pi<F>();
  return log(pi / 2) / (2 * log(F(2)));
}

constexpr unsigned kLadderDigits[] = {40, 90, 200, 450, 1000};

unsigned digits_to_bits(unsigned digits10) {
  return static_cast<unsigned>(digits10 * 3.3219280948873623);
}

void require_c_in_range(double C) {
  using F = bin_float<90>;
  const F cs = c_star_value<90>();
  if (!(F(C) > cs - 1 && F(C) < cs)) {
    throw std::out_of_range("C must lie strictly between c_* - 1 and c_* (c_* ~ 0.3257)");
  }
}

}  // namespace

const bigint& BinomialLadder::value(unsigned k) {
  while (values_.size() <= k) {
    const unsigned next = static_cast<unsigned>(values_.size());
    if (next % 2 == 1) {
      // B_{2j+1} = B_{2j} * (2j+1) / (j+1)
      const unsigned j = next / 2;
      values_.push_back(values_.back() * (2 * j + 1) / (j + 1));
    } else {
      values_.push_back(values_.back() * 2);
    }
  }
  return values_[k];
}

bigint central_binomial(unsigned k) {
  BinomialLadder ladder;
  return ladder.value(k);
}

unsigned big_U(const bigint& n) {
  if (n < 1) throw std::domain_error("big_U: n must be >= 1");
  BinomialLadder ladder;
  unsigned k = 1;
  while (ladder.value(k + 1) <= n) ++k;
  return k;
}

FloatRange central_binomial_estimate(unsigned k) {
  if (k < 2) return {1.0, 1.0};  // B_0 = B_1 = 1
  // log n! bracketed by Stirling with the 1/(12n+1) and 1/(12n) tails
  const auto log_fact = [](unsigned n, bool upper) {
    const double nd = n;
    return 0.5 * std::log(2 * M_PI * nd) + nd * (std::log(nd) - 1) +
           (upper ? 1.0 / (12 * nd) : 1.0 / (12 * nd + 1));
  };
  const unsigned lo_half = k / 2, hi_half = k - k / 2;
  const double log_lo = log_fact(k, false) - log_fact(lo_half, true) - log_fact(hi_half, true);
  const double log_hi = log_fact(k, true) - log_fact(lo_half, false) - log_fact(hi_half, false);
  return {std::exp(log_lo), std::exp(log_hi)};
}

bool in_NC(const bigint& n, double C, const PrecisionConfig& prec) {
  if (n < 2) throw std::domain_error("in_NC: n must be >= 2 (log2 log2 n)");
  const unsigned k = big_U(n);

  // Exactly representable case: n = 2^t with t itself a power of two makes
  // the whole threshold rational (t + s/2 + C), so compare exactly. These
  // are the genuine ties (e.g. n = 65536, C = 0 sits exactly on the line).
  if ((n & (n - 1)) == 0) {
    const unsigned t = static_cast<unsigned>(msb(n));
    if ((t & (t - 1)) == 0) {
      const unsigned s = static_cast<unsigned>(msb(bigint(t)));
      const bigrat rhs = bigrat(t) + bigrat(s, 2) + bigrat(C);
      return bigrat(k) <= rhs;
    }
  }

  const unsigned last_bits = digits_to_bits(kLadderDigits[std::size(kLadderDigits) - 1]);
  const unsigned start = std::min(prec.start_bits, last_bits);
  const unsigned cap = std::max(prec.max_bits, start);
  for (unsigned digits : kLadderDigits) {
    const unsigned bits = digits_to_bits(digits);
    if (bits < start) continue;
    if (bits > cap) break;
    int sign = 0;
    switch (digits) {
      case 40:   sign = threshold_sign<40>(n, k, C); break;
      case 90:   sign = threshold_sign<90>(n, k, C); break;
      case 200:  sign = threshold_sign<200>(n, k, C); break;
      case 450:  sign = threshold_sign<450>(n, k, C); break;
      case 1000: sign = threshold_sign<1000>(n, k, C); break;
      default: break;
    }
    if (sign != 0) return sign >= 0;
  }
  throw precision_error("in_NC: comparison undecided at the maximum working precision (n = " +
                        n.str() + ", C = " + std::to_string(C) + ")");
}

double c_star() {
  return c_star_value<40>().convert_to<double>();
}

double theoretical_density(double C) {
  require_c_in_range(C);
  using F = bin_float<40>;
  const F cs = c_star_value<40>();
  const F v = 2 - exp((cs - F(C)) * log(F(2)));
  return v.convert_to<double>();
}

DensityPoint interval_density(unsigned k, double C, const PrecisionConfig& prec) {
  if (k < 3) throw std::domain_error("interval_density: k must be >= 3");
  require_c_in_range(C);

  BinomialLadder ladder;
  const bigint lo = ladder.value(k);
  const bigint hi = ladder.value(k + 1);  // exclusive

  DensityPoint point;
  point.k = k;
  point.C = C;
  point.interval_size = hi - lo;
  point.limit = theoretical_density(C);

  // The predicate is monotone in n on [B_k, B_{k+1}): U is constant and the
  // right-hand side increases. Find the least satisfying n.
  if (!in_NC(hi - 1, C, prec)) {
    point.threshold = hi;  // no member in the interval
    point.member_count = 0;
    point.fraction = 0;
    return point;
  }
  bigint lo_search = lo, hi_search = hi - 1;  // invariant: P(hi_search) true
  if (in_NC(lo_search, C, prec)) {
    point.threshold = lo;
  } else {
    // P(lo_search) false, P(hi_search) true
    while (hi_search - lo_search > 1) {
      const bigint mid = (lo_search + hi_search) / 2;
      if (in_NC(mid, C, prec)) {
        hi_search = mid;
      } else {
        lo_search = mid;
      }
    }
    point.threshold = hi_search;
  }
  point.member_count = hi - point.threshold;
  point.fraction = bigrat(point.member_count, point.interval_size);
  return point;
}

double size_bound_rhs(const bigint& n, const Variant& variant) {
  if (n < 3) throw std::domain_error("size_bound_rhs: n must be >= 3");
  using F = bin_float<90>;
  const F ln2 = log(F(2));
  const F l2n = log(F(n)) / ln2;
  const F ll2n = log(l2n) / ln2;
  const F pi = boost::math::constants::pi<F>();

  F rhs;
  switch (variant.kind) {
    case VariantKind::Dissociated:
    case VariantKind::SubsetBounded: {
      const unsigned g = variant.kind == VariantKind::SubsetBounded ? variant.g : 1;
      const F cs = log(pi / 2) / (2 * ln2);
      rhs = l2n + ll2n / 2 + cs + log(F(g)) / ln2;
      break;
    }
    case VariantKind::SignBounded: {
      const unsigned k = variant.k;
      const F lkp1 = log(F(k + 1));
      const F arg = 2 * pi / 3 * F(k) * F(k + 2);
      rhs = log(F(n)) / lkp1 + (log(l2n) / lkp1) / 2 + (log(arg) / lkp1) / 2;
      break;
    }
  }
  return rhs.convert_to<double>();
}

bool hard_count_inequality(unsigned m, const bigint& n) {
  return (bigint(1) << m) <= n * m + 1;
}

bool hard_subset_inequality(unsigned m, const bigint& total, unsigned g) {
  return (bigint(1) << m) <= g * (total + 1);
}

bigint max_multinomial(unsigned m, unsigned k, std::uint64_t cell_budget) {
  if (m < 1 || k < 1) throw std::invalid_argument("max_multinomial: m and k must be >= 1");
  const std::uint64_t cells = std::uint64_t{m} * k + 1;
  if (cells > cell_budget) {
    throw budget_error("max_multinomial: k*m + 1 = " + std::to_string(cells) +
                       " exceeds the cell budget");
  }
  // Repeated multiplication by (1 + x + ... + x^k) via windowed prefix sums.
  std::vector<bigint> coeff(cells, 0);
  coeff[0] = 1;
  std::uint64_t degree = 0;
  std::vector<bigint> prefix;
  for (unsigned step = 0; step < m; ++step) {
    const std::uint64_t new_degree = degree + k;
    prefix.assign(degree + 2, 0);
    for (std::uint64_t t = 0; t <= degree; ++t) prefix[t + 1] = prefix[t] + coeff[t];
    for (std::uint64_t t = 0; t <= new_degree; ++t) {
      const std::uint64_t lo = t > k ? t - k : 0;
      const std::uint64_t hi = std::min(t, degree);
      coeff[t] = lo <= hi ? bigint(prefix[hi + 1] - prefix[lo]) : bigint(0);
    }
    degree = new_degree;
  }
  bigint best = 0;
  for (std::uint64_t t = 0; t <= degree; ++t) best = std::max(best, coeff[t]);
  return best;
}

bool isoperimetric_check(std::span<const std::uint64_t> a, const Variant& variant,
                         const CheckerConfig& cfg) {
  if (a.empty()) throw std::invalid_argument("isoperimetric_check: empty set");
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] <= a[i - 1]) {
      throw std::invalid_argument("isoperimetric_check: set must be strictly increasing");
    }
  }
  const unsigned m = static_cast<unsigned>(a.size());
  const bigint a_m(a.back());

  switch (variant.kind) {
    case VariantKind::Dissociated:
    case VariantKind::SubsetBounded: {
      const unsigned g = variant.kind == VariantKind::SubsetBounded ? variant.g : 1;
      if (min_representation_bound(a, cfg) > g) {
        throw class_error("isoperimetric_check: set is not subset-bounded by g = " +
                          std::to_string(g));
      }
      return central_binomial(m) <= g * (a_m + 1);
    }
    case VariantKind::SignBounded: {
      if (!is_dk_set(a, variant.k, cfg)) {
        throw class_error("isoperimetric_check: set fails the sign-bounded check for k = " +
                          std::to_string(variant.k));
      }
      // a_m >= M_{m,k}/2 - 1, cleared of the half: 2 a_m + 2 >= M_{m,k}.
      return 2 * a_m + 2 >= max_multinomial(m, variant.k);
    }
  }
  return false;
}

double conjecture_slack(std::span<const bigint> terms) {
  if (terms.empty()) throw std::invalid_argument("conjecture_slack: empty sequence");
  using F = bin_float<40>;
  const F ln2 = log(F(2));
  const std::size_t first = terms.size() == 1 ? 0 : 1;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = first; i < terms.size(); ++i) {
    if (terms[i] < 1) throw std::invalid_argument("conjecture_slack: terms must be >= 1");
    const F l2 = log(F(terms[i])) / ln2;
    best = std::max(best, (F(i + 1) - l2).convert_to<double>());
  }
  return best;
}

}  // namespace dissoc
