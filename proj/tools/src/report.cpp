#include "fincat/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace fincat::cli {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json to_json(const Report& r, bool timing) {
  Json out;
  out["command"] = r.command;
  out["verdict"] = r.pass() ? "pass" : "fail";
  out["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["verdict"] = c.pass ? "pass" : "fail";
    j["details"] = c.details;
    if (!c.pass) j["witness"] = c.witness;
    if (timing) j["timing_ms"] = c.timing_ms;
    out["checks"].push_back(std::move(j));
  }
  return out;
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  for (const auto& c : j.at("checks")) {
    Check k;
    k.name = c.at("name").get<std::string>();
    k.pass = c.at("verdict").get<std::string>() == "pass";
    k.details = c.at("details");
    if (c.contains("witness")) k.witness = c.at("witness").get<std::string>();
    if (c.contains("timing_ms")) k.timing_ms = c.at("timing_ms").get<double>();
    r.checks.push_back(std::move(k));
  }
  return r;
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string emit_report(const Report& r, Format format, bool timing) {
  if (format == Format::Structured) return to_json(r, timing).dump(2) + "\n";
  std::ostringstream os;
  os << r.command << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (timing) {
      std::ostringstream t;
      t.setf(std::ios::fixed);
      t.precision(3);
      t << c.timing_ms;
      os << " (" << t.str() << " ms)";
    }
    os << "\n";
    for (const auto& [key, value] : c.details.items()) os << "      " << key << ": " << scalar(value) << "\n";
    if (!c.pass) os << "      witness: " << c.witness << "\n";
  }
  return os.str();
}

std::string emit_error(const InputError& e, Format format) {
  if (format == Format::Structured) {
    Json body;
    body["kind"] = e.kind;
    body["file"] = e.file;
    body["line"] = e.line;
    body["column"] = e.column;
    body["message"] = e.message;
    Json out;
    out["error"] = body;
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "error: " << e.kind;
  if (!e.file.empty()) os << " in " << e.file;
  if (e.line > 0) os << " at " << e.line << ":" << e.column;
  os << ": " << e.message << "\n";
  return os.str();
}

}  // namespace fincat::cli
