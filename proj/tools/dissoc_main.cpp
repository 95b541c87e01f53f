#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dissoc/cli_commands.hpp"
#include "dissoc/errors.hpp"

namespace {

struct EmitOptions {
  std::string format = "json";
  std::string out;
};

void emit(const dissoc::Report& report, const EmitOptions& emit_opts) {
  const std::string content = emit_opts.format == "csv" ? dissoc::to_csv(report)
                                                        : dissoc::to_canonical_json(report);
  if (emit_opts.out.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
  } else {
    dissoc::write_atomic(emit_opts.out, content);
  }
}

void add_common(CLI::App* cmd, EmitOptions& emit_opts, dissoc::CommonOptions& common) {
  cmd->add_option("--format", emit_opts.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", emit_opts.out, "Write the report to PATH (atomic)");
  cmd->add_option("--mem-cap", common.mem_cap_bits, "Per-structure memory cap in bits")
      ->capture_default_str();
  cmd->add_option("--precision", common.precision_bits,
                  "Starting working precision in bits for threshold predicates")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dissociated-set toolkit: greedy generators, class checkers, "
               "density computations, and the random dyadic family experiment"};
  app.require_subcommand(1);

  EmitOptions emit_opts;
  dissoc::CommonOptions common;

  // greedy
  auto* greedy = app.add_subcommand("greedy", "Generate a greedy sequence and its diagnostics");
  std::uint64_t a = 0, b = 0;
  std::size_t terms = 0;
  unsigned g_flag = 0, k_flag = 0;
  bool certify = false;
  greedy->add_option("--a", a, "First seed")->required();
  greedy->add_option("--b", b, "Second seed (b > a)")->required();
  greedy->add_option("--terms", terms, "Number of terms to generate")->required();
  auto* greedy_g = greedy->add_option("--g", g_flag, "Subset-bounded variant with bound g");
  auto* greedy_k = greedy->add_option("--k", k_flag, "Sign-bounded variant with coefficient bound k");
  greedy_g->excludes(greedy_k);
  greedy->add_flag("--certify", certify, "Re-verify the doubling certificate by mask replay");
  add_common(greedy, emit_opts, common);

  // check
  auto* check = app.add_subcommand("check", "Classify a concrete set");
  std::string set_text;
  unsigned check_g = 0, check_k = 0;
  check->add_option("--set", set_text, "Comma-separated strictly increasing naturals")->required();
  auto* check_g_opt = check->add_option("--g", check_g, "Also test the subset-bounded class for g");
  auto* check_k_opt = check->add_option("--k", check_k, "Also test the sign-bounded class for k");
  add_common(check, emit_opts, common);

  // density
  auto* density = app.add_subcommand("density", "Exact per-interval density of the threshold set");
  double C = 0.0;
  unsigned interval_k = 0, interval_k_max = 0;
  std::string oracle;
  density->add_option("--C", C, "Offset inside (c_* - 1, c_*)")->required();
  density->add_option("--interval-k,--k", interval_k, "Ladder interval index (k >= 3)")->required();
  auto* kmax_opt = density->add_option("--k-max", interval_k_max, "Sweep intervals k..k-max");
  density->add_option("--oracle", oracle, "Set to 'scan' to cross-check by full enumeration")
      ->check(CLI::IsMember({"scan"}));
  add_common(density, emit_opts, common);

  // gp
  auto* gp = app.add_subcommand("gp", "Random dyadic family experiment");
  std::uint64_t gp_n = 0, gp_samples = 0, gp_seed = 0;
  unsigned gp_L = 0, gp_workers = 1;
  gp->add_option("--n", gp_n, "Scale (n >= 16)")->required();
  gp->add_option("--L", gp_L, "Shrinkage parameter")->required();
  gp->add_option("--samples", gp_samples, "Number of sampled members")->required();
  gp->add_option("--seed", gp_seed, "RNG seed (required; no ambient entropy)")->required();
  gp->add_option("--workers", gp_workers, "Worker threads (output is worker-count independent)")
      ->capture_default_str();
  add_common(gp, emit_opts, common);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Finite inequalities and bound values for a set");
  std::string bounds_set_text;
  unsigned bounds_g = 0, bounds_k = 0;
  std::uint64_t bounds_a = 0, bounds_b = 0;
  bounds->add_option("--set", bounds_set_text, "Comma-separated strictly increasing naturals")
      ->required();
  auto* bounds_g_opt = bounds->add_option("--g", bounds_g, "Evaluate as a subset-bounded set");
  auto* bounds_k_opt = bounds->add_option("--k", bounds_k, "Evaluate as a sign-bounded set");
  bounds_g_opt->excludes(bounds_k_opt);
  auto* bounds_a_opt = bounds->add_option("--a", bounds_a, "Seed a for the onset bound");
  auto* bounds_b_opt = bounds->add_option("--b", bounds_b, "Seed b for the onset bound");
  bounds_a_opt->needs(bounds_b_opt);
  bounds_b_opt->needs(bounds_a_opt);
  add_common(bounds, emit_opts, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 1;
  }

  try {
    dissoc::Report report;
    if (greedy->parsed()) {
      dissoc::Variant variant = dissoc::Variant::dissociated();
      if (*greedy_g) variant = dissoc::Variant::subset_bounded(g_flag);
      if (*greedy_k) variant = dissoc::Variant::sign_bounded(k_flag);
      report = dissoc::cmd_greedy(a, b, variant, terms, certify, common);
    } else if (check->parsed()) {
      const auto set = dissoc::parse_set(set_text);
      std::optional<unsigned> g_query, k_query;
      if (*check_g_opt) g_query = check_g;
      if (*check_k_opt) k_query = check_k;
      report = dissoc::cmd_check(set, g_query, k_query, common);
    } else if (density->parsed()) {
      const unsigned hi = *kmax_opt ? interval_k_max : interval_k;
      report = dissoc::cmd_density(C, interval_k, hi, oracle == "scan", common);
    } else if (gp->parsed()) {
      report = dissoc::cmd_gp(gp_n, gp_L, gp_samples, gp_seed, gp_workers, common);
    } else if (bounds->parsed()) {
      const auto set = dissoc::parse_set(bounds_set_text);
      dissoc::Variant variant = dissoc::Variant::dissociated();
      if (*bounds_g_opt) variant = dissoc::Variant::subset_bounded(bounds_g);
      if (*bounds_k_opt) variant = dissoc::Variant::sign_bounded(bounds_k);
      std::optional<std::pair<std::uint64_t, std::uint64_t>> seeds;
      if (*bounds_a_opt) seeds = {bounds_a, bounds_b};
      report = dissoc::cmd_bounds(set, variant, seeds, common);
    }
    emit(report, emit_opts);
    return 0;
  } catch (const dissoc::invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
