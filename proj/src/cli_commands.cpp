#include "dissoc/cli_commands.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dissoc/checkers.hpp"
#include "dissoc/density.hpp"
#include "dissoc/errors.hpp"
#include "dissoc/gpfamily.hpp"

namespace dissoc {

namespace {

std::string json_scalar(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

/// CSV rows are a flat projection of the JSON rows: same keys, same values,
/// serialized with the same number formatter.
void project_rows(Report& report, const ordered_json& rows) {
  if (!rows.is_array() || rows.empty()) return;
  for (const auto& item : rows.front().items()) report.csv_header.push_back(item.key());
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    cells.reserve(report.csv_header.size());
    for (const auto& key : report.csv_header) cells.push_back(json_scalar(row.at(key)));
    report.csv_rows.push_back(cells);
  }
}

ordered_json variant_json(const Variant& v) {
  ordered_json j;
  switch (v.kind) {
    case VariantKind::Dissociated: j["kind"] = "dissociated"; break;
    case VariantKind::SubsetBounded: j["kind"] = "subset_bounded"; j["g"] = v.g; break;
    case VariantKind::SignBounded: j["kind"] = "sign_bounded"; j["k"] = v.k; break;
  }
  return j;
}

RunManifest make_manifest(const std::string& command, ordered_json params) {
  RunManifest m;
  m.command = command;
  m.params = std::move(params);
  m.started = iso8601_utc_now();
  return m;
}

}  // namespace

std::vector<std::uint64_t> parse_set(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_set: '" + token + "' is not a natural number");
    }
    if (pos != token.size()) {
      throw std::invalid_argument("parse_set: trailing characters in '" + token + "'");
    }
    if (v == 0) throw std::invalid_argument("parse_set: elements must be >= 1");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("parse_set: empty set");
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) {
      throw std::invalid_argument("parse_set: elements must be strictly increasing");
    }
  }
  return out;
}

Report cmd_greedy(std::uint64_t a, std::uint64_t b, const Variant& variant,
                  std::size_t horizon, bool certify, const CommonOptions& opts) {
  ordered_json params;
  params["a"] = a;
  params["b"] = b;
  params["variant"] = variant_json(variant);
  params["terms"] = horizon;
  params["certify"] = certify;
  params["mem_cap_bits"] = opts.mem_cap_bits;
  params["precision_bits"] = opts.precision_bits;

  Report report;
  report.schema = "dissoc.greedy.v1";
  report.manifest = make_manifest("greedy", params);

  GenerateOptions gen_opts;
  gen_opts.mem_cap_bits = opts.mem_cap_bits;
  const GreedySequence seq = generate(a, b, variant, horizon, gen_opts);
  const auto ratios = ratio_trace(seq);
  const bool has_potentials = variant.kind != VariantKind::SignBounded;
  const auto potentials = has_potentials ? potential_trace(seq) : std::vector<bigrat>{};

  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < seq.terms().size(); ++i) {
    ordered_json row;
    row["index"] = i + 1;
    row["term_exact"] = exact_str(seq.terms()[i]);
    row["ratio_exact"] = i == 0 ? ordered_json() : ordered_json(exact_str(ratios[i - 1]));
    row["ratio_approx"] = i == 0 ? ordered_json() : ordered_json(approx(ratios[i - 1]));
    row["potential_exact"] =
        has_potentials ? ordered_json(exact_str(potentials[i])) : ordered_json();
    row["potential_approx"] =
        has_potentials ? ordered_json(approx(potentials[i])) : ordered_json();
    rows.push_back(row);
  }

  ordered_json body;
  body["a"] = a;
  body["b"] = b;
  body["variant"] = variant_json(variant);
  body["horizon"] = horizon;
  body["rows"] = rows;

  if (seq.terms().size() >= 3) {
    const DoublingReport doubling = detect_doubling(seq);
    ordered_json d;
    d["onset"] = doubling.onset;
    d["onset_is_certified"] = doubling.certificate_index.has_value();
    d["certificate_index"] = doubling.certificate_index
                                 ? ordered_json(*doubling.certificate_index)
                                 : ordered_json();
    d["bound"] = doubling.bound;
    d["bound_holds"] = doubling.onset <= doubling.bound;
    if (certify && doubling.certificate_index) {
      d["certificate_verified"] = certify_doubling(seq, *doubling.certificate_index);
    } else {
      d["certificate_verified"] = ordered_json();
    }
    body["doubling"] = d;
  } else {
    body["doubling"] = ordered_json();
  }
  if (variant.kind == VariantKind::Dissociated) {
    body["conjecture_slack_approx"] = conjecture_slack(seq.terms());
  }

  report.body = body;
  project_rows(report, rows);
  report.manifest.finished = iso8601_utc_now();
  return report;
}

Report cmd_check(const std::vector<std::uint64_t>& set, std::optional<unsigned> g,
                 std::optional<unsigned> k, const CommonOptions& opts) {
  ordered_json params;
  params["set"] = set;
  params["g"] = g ? ordered_json(*g) : ordered_json();
  params["k"] = k ? ordered_json(*k) : ordered_json();
  params["mem_cap_bits"] = opts.mem_cap_bits;
  params["precision_bits"] = opts.precision_bits;

  Report report;
  report.schema = "dissoc.check.v1";
  report.manifest = make_manifest("check", params);

  CheckerConfig cfg;
  const unsigned probe_k = std::max(3u, k.value_or(1));
  const SetClassReport cls = classify(set, probe_k, cfg);

  ordered_json body;
  body["set"] = set;
  body["is_dissociated"] = cls.is_dissociated;
  body["min_g"] = cls.min_g;
  body["max_k"] = cls.max_k;

  ordered_json subset_ok, sign_ok;
  if (g) subset_ok = cls.min_g <= *g;
  if (k) sign_ok = is_dk_set(set, *k, cfg);
  body["is_subset_bounded"] = subset_ok;
  body["is_sign_bounded"] = sign_ok;

  // Finite inequalities are theorems for sets inside the class, so they are
  // only evaluated when the class membership holds.
  ordered_json iso, hard;
  if (g && cls.min_g <= *g) {
    iso = isoperimetric_check(set, Variant::subset_bounded(*g), cfg);
  } else if (k && sign_ok.is_boolean() && sign_ok.get<bool>()) {
    iso = isoperimetric_check(set, Variant::sign_bounded(*k), cfg);
  } else if (!g && !k && cls.is_dissociated) {
    iso = isoperimetric_check(set, Variant::dissociated(), cfg);
  }
  if (cls.is_dissociated) {
    hard = hard_count_inequality(static_cast<unsigned>(set.size()), bigint(set.back()));
  }
  body["isoperimetric_ok"] = iso;
  body["hard_count_ok"] = hard;

  report.body = body;

  ordered_json row;
  std::string joined;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) joined += ' ';
    joined += std::to_string(set[i]);
  }
  row["set"] = joined;
  row["is_dissociated"] = cls.is_dissociated;
  row["min_g"] = cls.min_g;
  row["max_k"] = cls.max_k;
  row["is_subset_bounded"] = subset_ok;
  row["is_sign_bounded"] = sign_ok;
  row["isoperimetric_ok"] = iso;
  row["hard_count_ok"] = hard;
  ordered_json rows = ordered_json::array({row});
  project_rows(report, rows);

  report.manifest.finished = iso8601_utc_now();
  return report;
}

Report cmd_density(double C, unsigned k_lo, unsigned k_hi, bool oracle_scan,
                   const CommonOptions& opts) {
  if (k_hi < k_lo) throw std::invalid_argument("cmd_density: k range is empty");
  ordered_json params;
  params["C"] = C;
  params["interval_k"] = k_lo;
  params["interval_k_max"] = k_hi;
  params["oracle"] = oracle_scan ? "scan" : "";
  params["mem_cap_bits"] = opts.mem_cap_bits;
  params["precision_bits"] = opts.precision_bits;

  Report report;
  report.schema = "dissoc.density.v1";
  report.manifest = make_manifest("density", params);

  PrecisionConfig prec;
  prec.start_bits = opts.precision_bits;

  constexpr unsigned kScanCap = 22;
  ordered_json rows = ordered_json::array();
  for (unsigned k = k_lo; k <= k_hi; ++k) {
    const DensityPoint point = interval_density(k, C, prec);
    ordered_json row;
    row["k"] = k;
    row["threshold_exact"] = exact_str(point.threshold);
    row["member_count_exact"] = exact_str(point.member_count);
    row["interval_size_exact"] = exact_str(point.interval_size);
    row["fraction_exact"] = exact_str(point.fraction);
    row["fraction_approx"] = approx(point.fraction);
    row["limit_approx"] = point.limit;
    row["gap_approx"] = point.limit - approx(point.fraction);
    if (oracle_scan) {
      if (k > kScanCap) {
        throw budget_error("cmd_density: exhaustive scan is limited to k <= " +
                           std::to_string(kScanCap));
      }
      BinomialLadder ladder;
      bigint count = 0;
      for (bigint n = ladder.value(k); n < ladder.value(k + 1); ++n) {
        if (in_NC(n, C, prec)) ++count;
      }
      row["scan_count_exact"] = exact_str(count);
      row["scan_matches"] = count == point.member_count;
    }
    rows.push_back(row);
  }

  ordered_json body;
  body["C"] = C;
  body["c_star_approx"] = c_star();
  body["limit_approx"] = theoretical_density(C);
  body["rows"] = rows;
  report.body = body;
  project_rows(report, rows);
  report.manifest.finished = iso8601_utc_now();
  return report;
}

Report cmd_gp(std::uint64_t n, unsigned L, std::uint64_t samples, std::uint64_t seed,
              unsigned workers, const CommonOptions& opts) {
  ordered_json params;
  params["n"] = n;
  params["L"] = L;
  params["samples"] = samples;
  params["seed"] = seed;
  params["workers"] = workers;
  params["mem_cap_bits"] = opts.mem_cap_bits;
  params["precision_bits"] = opts.precision_bits;

  Report report;
  report.schema = "dissoc.gp.v1";
  report.manifest = make_manifest("gp", params);

  const FamilySpec spec = build_spec(n, L);
  const GpExperimentReport exp = run_experiment(spec, samples, seed, workers);

  ordered_json body;
  body["n"] = n;
  body["L"] = L;
  body["m_tilde"] = spec.m_tilde;
  body["m"] = spec.m;
  body["samples"] = exp.samples;
  body["seed"] = exp.seed;
  body["with_gp"] = exp.with_gp;
  body["fraction_exact"] = exact_str(exp.fraction);
  body["fraction_approx"] = approx(exp.fraction);
  body["union_bound_exact"] = exact_str(exp.union_bound_exact);
  body["union_bound_approx"] = exp.union_bound;
  body["fraction_within_bound"] = exp.fraction <= exp.union_bound_exact;
  body["all_dissociated"] = exp.all_dissociated;
  body["log2_family_size_approx"] = spec.log2_family_size();
  body["half_m_squared"] = 0.5 * spec.m * spec.m;

  ordered_json intervals = ordered_json::array();
  for (unsigned t = 0; t < spec.m; ++t) {
    const auto& iv = spec.intervals[t];
    ordered_json j;
    j["t"] = t;
    j["lo_exclusive"] = iv.lo;
    j["hi_inclusive"] = iv.hi;
    j["odd_count"] = iv.odd_count;
    intervals.push_back(j);
  }
  body["intervals"] = intervals;
  report.body = body;

  ordered_json row;
  for (const char* key : {"n", "L", "m_tilde", "m", "samples", "seed", "with_gp",
                          "fraction_exact", "fraction_approx", "union_bound_exact",
                          "union_bound_approx", "fraction_within_bound", "all_dissociated"}) {
    row[key] = body.at(key);
  }
  ordered_json rows = ordered_json::array({row});
  project_rows(report, rows);

  report.manifest.finished = iso8601_utc_now();
  return report;
}

Report cmd_bounds(const std::vector<std::uint64_t>& set, const Variant& variant,
                  std::optional<std::pair<std::uint64_t, std::uint64_t>> seeds,
                  const CommonOptions& opts) {
  ordered_json params;
  params["set"] = set;
  params["variant"] = variant_json(variant);
  params["a"] = seeds ? ordered_json(seeds->first) : ordered_json();
  params["b"] = seeds ? ordered_json(seeds->second) : ordered_json();
  params["mem_cap_bits"] = opts.mem_cap_bits;
  params["precision_bits"] = opts.precision_bits;

  Report report;
  report.schema = "dissoc.bounds.v1";
  report.manifest = make_manifest("bounds", params);

  CheckerConfig cfg;
  ordered_json rows = ordered_json::array();
  bigint running = 0;
  for (std::size_t m = 1; m <= set.size(); ++m) {
    running += set[m - 1];
    const std::span<const std::uint64_t> prefix(set.data(), m);
    const bigint a_m(set[m - 1]);

    ordered_json row;
    row["m"] = m;
    row["a_m"] = set[m - 1];
    switch (variant.kind) {
      case VariantKind::Dissociated:
        row["hard_ok"] = hard_count_inequality(static_cast<unsigned>(m), a_m);
        break;
      case VariantKind::SubsetBounded:
        row["hard_ok"] = hard_subset_inequality(static_cast<unsigned>(m), running, variant.g);
        break;
      case VariantKind::SignBounded:
        row["hard_ok"] = isoperimetric_check(prefix, variant, cfg);
        break;
    }
    row["isoperimetric_ok"] = isoperimetric_check(prefix, variant, cfg);
    if (a_m >= 3) {
      const double rhs = size_bound_rhs(a_m, variant);
      row["rhs_approx"] = rhs;
      row["slack_approx"] = rhs - static_cast<double>(m);
    } else {
      row["rhs_approx"] = ordered_json();
      row["slack_approx"] = ordered_json();
    }
    rows.push_back(row);
  }

  ordered_json body;
  body["set"] = set;
  body["variant"] = variant_json(variant);
  body["rows"] = rows;
  if (seeds) {
    body["n0_bound"] = n0_upper_bound(seeds->first, seeds->second);
  } else {
    body["n0_bound"] = ordered_json();
  }
  report.body = body;
  project_rows(report, rows);
  report.manifest.finished = iso8601_utc_now();
  return report;
}

}  // namespace dissoc
