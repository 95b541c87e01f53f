#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dissoc/bigint.hpp"

namespace dissoc {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Inputs of a run, embedded in every JSON report. Re-running the same
/// manifest reproduces the report body byte for byte; only the timestamps
/// differ.
struct RunManifest {
  std::string command;
  ordered_json params = ordered_json::object();
  std::string started;
  std::string finished;
  std::string artifact_version = kArtifactVersion;

  ordered_json to_json() const;
};

/// A finished report: canonical JSON body plus a flat tabular projection
/// for CSV emission. Exact values are decimal/rational strings under
/// *_exact keys; floating point values live under *_approx keys.
struct Report {
  std::string schema;
  RunManifest manifest;
  ordered_json body = ordered_json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

std::string iso8601_utc_now();

/// Decimal string of an exact integer.
std::string exact_str(const bigint& v);
/// "p/q" (reduced) string of an exact rational.
std::string exact_str(const bigrat& v);
double approx(const bigrat& v);

/// The full canonical JSON document: schema, manifest, body. Stable key
/// order, two-space indentation, trailing newline.
std::string to_canonical_json(const Report& report);

/// RFC 4180 table: header row plus data rows, CRLF line endings, minimal
/// quoting. The manifest lives in the JSON emission only.
std::string to_csv(const Report& report);

/// Write-to-temp-then-rename so a failed run never leaves a partial file.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace dissoc
