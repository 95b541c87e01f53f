#include "dissoc/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace dissoc {

ordered_json RunManifest::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["params"] = params;
  j["started"] = started;
  j["finished"] = finished;
  j["artifact_version"] = artifact_version;
  return j;
}

std::string iso8601_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string exact_str(const bigint& v) { return v.str(); }

std::string exact_str(const bigrat& v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

double approx(const bigrat& v) { return v.convert_to<double>(); }

std::string to_canonical_json(const Report& report) {
  ordered_json doc;
  doc["schema"] = report.schema;
  doc["manifest"] = report.manifest.to_json();
  doc["body"] = report.body;
  return doc.dump(2) + "\n";
}

namespace {

std::string csv_cell(const std::string& value) {
  const bool needs_quoting =
      value.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quoting) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string to_csv(const Report& report) {
  std::string out;
  auto emit_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i]);
    }
    out += "\r\n";
  };
  emit_row(report.csv_header);
  for (const auto& row : report.csv_rows) emit_row(row);
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("write_atomic: cannot open " + tmp);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f.flush()) throw std::runtime_error("write_atomic: short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::system_error(errno, std::generic_category(), "write_atomic: rename to " + path);
  }
}

}  // namespace dissoc
