#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "verona/cli/json_io.hpp"

namespace verona::cli {

inline constexpr const char* kReportVersion = "verona-report/1";

enum class Status { Ok, VerdictFailure, Error };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::VerdictFailure: return "verdict-failure";
    case Status::Error: return "error";
  }
  return "error";
}

inline Status parse_status(const std::string& name) {
  if (name == "ok") return Status::Ok;
  if (name == "verdict-failure") return Status::VerdictFailure;
  if (name == "error") return Status::Error;
  fail(ErrorKind::ParseError, "unknown report status \"" + name + "\"");
}

struct ReportError {
  std::string kind;
  std::string message;
  friend bool operator==(const ReportError&, const ReportError&) = default;
};

struct Report {
  std::string command;
  Status status = Status::Ok;
  std::map<std::string, bool> verdicts;
  /// Verdicts that must hold for the command itself to succeed.
  std::vector<std::string> required;
  std::vector<std::string> failed_expectations;
  Json results = Json::object();
  std::optional<ReportError> error;
  /// Wall time; rendered in text only so JSON stays byte-stable.
  double seconds = 0;

  int exit_code() const { return status == Status::Ok ? 0 : status == Status::VerdictFailure ? 1 : 2; }

  friend bool operator==(const Report& a, const Report& b) {
    return a.command == b.command && a.status == b.status && a.verdicts == b.verdicts && a.required == b.required &&
           a.failed_expectations == b.failed_expectations && a.results == b.results && a.error == b.error;
  }
};

inline Json to_json(const Report& r) {
  Json out{{"format", kReportVersion},
           {"command", r.command},
           {"status", status_name(r.status)},
           {"verdicts", r.verdicts},
           {"required", r.required},
           {"failed_expectations", r.failed_expectations},
           {"results", r.results}};
  out["error"] = r.error ? Json{{"kind", r.error->kind}, {"message", r.error->message}} : Json(nullptr);
  return out;
}

inline Report report_from_json(const Json& j) {
  require(as_string(field(j, "format"), "format") == kReportVersion, ErrorKind::ParseError, "unknown report format");
  Report r;
  r.command = as_string(field(j, "command"), "command");
  r.status = parse_status(as_string(field(j, "status"), "status"));
  r.verdicts = field(j, "verdicts").get<std::map<std::string, bool>>();
  r.required = field(j, "required").get<std::vector<std::string>>();
  r.failed_expectations = field(j, "failed_expectations").get<std::vector<std::string>>();
  r.results = field(j, "results");
  const Json& err = field(j, "error");
  if (!err.is_null()) r.error = ReportError{as_string(field(err, "kind"), "kind"), as_string(field(err, "message"), "message")};
  return r;
}

/// Canonical form: sorted keys, two-space indent, trailing newline.
inline std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\nstatus:  " << status_name(r.status) << "\n";
  if (r.error) out << "error:   " << r.error->kind << ": " << r.error->message << "\n";
  for (const auto& [name, value] : r.verdicts) {
    const bool required = std::find(r.required.begin(), r.required.end(), name) != r.required.end();
    out << "  " << (value ? "[yes] " : "[no]  ") << name << (required ? " (required)" : "") << "\n";
  }
  for (const auto& name : r.failed_expectations) out << "  expectation failed: " << name << "\n";
  if (!r.results.empty()) out << "results:\n" << r.results.dump(2) << "\n";
  out << "elapsed: " << r.seconds << " s\n";
  return out.str();
}

}  // namespace verona::cli
