#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dissoc/cli_commands.hpp"
#include "dissoc/report.hpp"

using namespace dissoc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exact markers") {
  CHECK(exact_str(bigint("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  CHECK(exact_str(bigrat(26, 56)) == "13/28");
  CHECK(approx(bigrat(1, 4)) == 0.25);
}

TEST_CASE("canonical JSON round-trips byte-identically for every command") {
  const Report reports[] = {
      cmd_greedy(1, 3, Variant::dissociated(), 6, true, CommonOptions{}),
      cmd_check({1, 2, 3}, 2u, std::nullopt, CommonOptions{}),
      cmd_density(0.0, 8, 8, true, CommonOptions{}),
      cmd_gp(1024, 3, 50, 1, 1, CommonOptions{}),
      cmd_bounds({1, 2, 4, 8}, Variant::dissociated(),
                 std::make_pair<std::uint64_t, std::uint64_t>(1, 2), CommonOptions{}),
  };
  for (const Report& report : reports) {
    const std::string once = to_canonical_json(report);
    const auto parsed = ordered_json::parse(once);
    CHECK(parsed.dump(2) + "\n" == once);
  }
}

TEST_CASE("CSV escaping follows RFC 4180") {
  Report r;
  r.csv_header = {"plain", "with,comma", "with\"quote"};
  r.csv_rows = {{"a", "b,c", "d\"e"}, {"x\r\ny", "", "z"}};
  const std::string csv = to_csv(r);
  CHECK(csv ==
        "plain,\"with,comma\",\"with\"\"quote\"\r\n"
        "a,\"b,c\",\"d\"\"e\"\r\n"
        "\"x\r\ny\",,z\r\n");
}

TEST_CASE("CSV and JSON carry identical row values") {
  const Report report = cmd_density(0.0, 8, 10, false, CommonOptions{});
  const auto& rows = report.body.at("rows");
  REQUIRE(rows.size() == report.csv_rows.size());
  for (std::size_t i = 0; i < report.csv_rows.size(); ++i) {
    for (std::size_t c = 0; c < report.csv_header.size(); ++c) {
      const auto& v = rows[i].at(report.csv_header[c]);
      const std::string expected = v.is_string() ? v.get<std::string>() : v.dump();
      CHECK(report.csv_rows[i][c] == expected);
    }
  }
}

TEST_CASE("report bodies are reproducible, timestamps aside") {
  const Report r1 = cmd_gp(1024, 3, 200, 7, 1, CommonOptions{});
  const Report r2 = cmd_gp(1024, 3, 200, 7, 4, CommonOptions{});
  CHECK(r1.body.dump(2) == r2.body.dump(2));
  CHECK(to_csv(r1) == to_csv(r2));

  const Report g1 = cmd_greedy(2, 7, Variant::dissociated(), 12, false, CommonOptions{});
  const Report g2 = cmd_greedy(2, 7, Variant::dissociated(), 12, false, CommonOptions{});
  CHECK(g1.body.dump(2) == g2.body.dump(2));
}

TEST_CASE("atomic write leaves no partial files") {
  const std::string path = "test_report_atomic.json";
  write_atomic(path, "{\"x\": 1}\n");
  CHECK(slurp(path) == "{\"x\": 1}\n");
  write_atomic(path, "second\n");
  CHECK(slurp(path) == "second\n");
  std::ifstream tmp(path + ".tmp");
  CHECK_FALSE(tmp.good());
  std::remove(path.c_str());
}

TEST_CASE("manifest embeds command, params, and version") {
  const Report report = cmd_check({3, 5, 6, 7}, std::nullopt, std::nullopt, CommonOptions{});
  const auto doc = ordered_json::parse(to_canonical_json(report));
  CHECK(doc.at("manifest").at("command") == "check");
  CHECK(doc.at("manifest").at("artifact_version") == kArtifactVersion);
  CHECK(doc.at("manifest").at("params").at("set").size() == 4);
  CHECK_FALSE(doc.at("manifest").at("started").get<std::string>().empty());
  CHECK(doc.at("schema") == "dissoc.check.v1");
}

TEST_CASE("parse_set accepts sorted naturals and rejects everything else") {
  CHECK(parse_set("3,5,6,7") == std::vector<std::uint64_t>{3, 5, 6, 7});
  CHECK(parse_set("42") == std::vector<std::uint64_t>{42});
  CHECK_THROWS_AS(parse_set(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("3,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("5,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("1,2.5"), std::invalid_argument);
}
