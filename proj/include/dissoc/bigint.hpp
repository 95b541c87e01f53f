#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dissoc {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

/// Exact ceil(log2(x)) for x >= 1.
inline unsigned ceil_log2(const bigint& x) {
  if (x <= 0) throw std::invalid_argument("ceil_log2: x must be >= 1");
  const bigint y = x - 1;
  return y == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(y)) + 1u;
}

/// Exact floor(log2(x)) for x >= 1.
inline unsigned floor_log2(const bigint& x) {
  if (x <= 0) throw std::invalid_argument("floor_log2: x must be >= 1");
  return static_cast<unsigned>(boost::multiprecision::msb(x));
}

}  // namespace dissoc
