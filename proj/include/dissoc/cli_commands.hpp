#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dissoc/greedy.hpp"
#include "dissoc/report.hpp"

namespace dissoc {

struct CommonOptions {
  std::uint64_t mem_cap_bits = std::uint64_t{1} << 33;
  unsigned precision_bits = 128;
};

/// Comma-separated strictly increasing naturals ("3,5,6,7").
std::vector<std::uint64_t> parse_set(const std::string& text);

Report cmd_greedy(std::uint64_t a, std::uint64_t b, const Variant& variant,
                  std::size_t horizon, bool certify, const CommonOptions& opts);

Report cmd_check(const std::vector<std::uint64_t>& set, std::optional<unsigned> g,
                 std::optional<unsigned> k, const CommonOptions& opts);

Report cmd_density(double C, unsigned k_lo, unsigned k_hi, bool oracle_scan,
                   const CommonOptions& opts);

Report cmd_gp(std::uint64_t n, unsigned L, std::uint64_t samples, std::uint64_t seed,
              unsigned workers, const CommonOptions& opts);

Report cmd_bounds(const std::vector<std::uint64_t>& set, const Variant& variant,
                  std::optional<std::pair<std::uint64_t, std::uint64_t>> seeds,
                  const CommonOptions& opts);

}  // namespace dissoc
