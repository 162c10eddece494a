#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace fincat::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = true;
  /// Constructed-object summaries; key order is preserved on output.
  Json details = Json::object();
  /// Emitted only for failed checks.
  std::string witness;
  double timing_ms = 0.0;
  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  bool pass() const;
  friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { Text, Structured };

/// Structured layout, in this field order:
///   {"command", "verdict", "checks": [{"name", "verdict", "details",
///    "witness" (failures only), "timing_ms" (unless disabled)}]}
Json to_json(const Report& r, bool timing = true);
/// Inverse of to_json for documents it produced.
Report report_from_json(const Json& j);

std::string emit_report(const Report& r, Format format, bool timing = true);

struct InputError {
  std::string kind;
  std::string file;  // empty when not tied to a file
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

/// {"error": {"kind", "file", "line", "column", "message"}} in structured form.
std::string emit_error(const InputError& e, Format format);

}  // namespace fincat::cli
