#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "verona/cli/json_io.hpp"
#include "verona/integrability.hpp"
#include "verona/webs.hpp"

namespace verona::cli {

inline constexpr const char* kScenarioVersion = "verona-scenario/1";

struct NamedSubspace {
  std::string name;
  Subspace space;
};

/// One command plus its inputs. Optional blocks are present only when the document has them.
struct Scenario {
  std::string command;
  std::size_t ambient = 0;
  std::size_t p = 0;
  std::size_t c = 0;
  std::vector<NamedSubspace> subspaces;
  std::vector<ProjParam> params;
  std::optional<VeroneseWebSpec> web;
  std::optional<OperatorField> op;
  std::vector<PolyVectorField> frame;
  std::optional<std::vector<PolyForm>> forms;
  std::optional<GrassCurve> curve;
  std::optional<QVector> point;
  Json options = Json::object();
  std::map<std::string, bool> expect;
  std::optional<std::string> expect_error;

  std::vector<Subspace> spaces() const {
    std::vector<Subspace> out;
    for (const auto& s : subspaces) out.push_back(s.space);
    return out;
  }
  std::vector<Scalar> finite_params() const {
    std::vector<Scalar> out;
    for (const auto& t : params) {
      require(t.is_finite(), ErrorKind::ValidationError, "command needs finite parameters");
      out.push_back(t.value());
    }
    return out;
  }
};

inline const std::set<std::string>& known_commands() {
  static const std::set<std::string> names{"check-position", "interpolate-pencil", "interpolate-veronese",
                                           "verify-unicity", "is-veronese",        "conic",
                                           "sample-web",     "gz-model",           "nijenhuis",
                                           "frobenius",      "panasiuk"};
  return names;
}

inline std::size_t optional_count(const Json& doc, const char* key) {
  return doc.contains(key) ? as_count(doc.at(key), key) : 0;
}

inline Scenario parse_scenario(const Json& doc) {
  if (!doc.is_object()) fail(ErrorKind::ParseError, "scenario must be a JSON object");
  const std::string version = as_string(field(doc, "version"), "version");
  require(version == kScenarioVersion, ErrorKind::ValidationError, "unsupported scenario version \"" + version + "\"");
  Scenario s;
  s.command = as_string(field(doc, "command"), "command");
  require(known_commands().count(s.command) == 1, ErrorKind::ValidationError, "unknown command \"" + s.command + "\"");
  s.p = optional_count(doc, "p");
  s.c = optional_count(doc, "c");
  s.ambient = optional_count(doc, "ambient");
  if (s.ambient == 0 && s.p > 0 && s.c > 0) s.ambient = s.p * s.c;

  if (doc.contains("subspaces")) {
    require(s.ambient > 0, ErrorKind::ValidationError, "subspaces need an ambient dimension");
    std::set<std::string> seen;
    std::map<std::string, Subspace> by_name;
    std::vector<std::string> order;
    for (const auto& entry : as_array(doc.at("subspaces"), "subspaces")) {
      std::string name = as_string(field(entry, "name"), "subspace name");
      require(seen.insert(name).second, ErrorKind::ValidationError, "subspace \"" + name + "\" defined twice");
      by_name.emplace(name, canonicalize(read_matrix(field(entry, "basis"), s.ambient)));
      order.push_back(std::move(name));
    }
    if (doc.contains("use")) {
      order.clear();
      for (const auto& name : as_array(doc.at("use"), "use")) order.push_back(as_string(name, "subspace name"));
    }
    for (const auto& name : order) {
      auto it = by_name.find(name);
      require(it != by_name.end(), ErrorKind::ValidationError, "unknown subspace \"" + name + "\"");
      s.subspaces.push_back({name, it->second});
    }
  }
  if (doc.contains("params"))
    for (const auto& t : as_array(doc.at("params"), "params")) s.params.push_back(read_param(t));

  const std::size_t n = s.p * s.c;
  if (doc.contains("web")) {
    require(n > 0, ErrorKind::ValidationError, "web needs p and c");
    VeroneseWebSpec web{s.p, s.c, {}};
    const Json& rows = as_array(field(doc.at("web"), "coframe"), "coframe");
    for (const auto& row : rows) {
      web.coframe.emplace_back();
      for (const auto& form : as_array(row, "coframe row")) web.coframe.back().push_back(read_one_form(form, n));
    }
    web.validate();
    s.web = std::move(web);
  }
  if (doc.contains("operator")) {
    const std::size_t dim = n > 0 ? n : s.ambient;
    require(dim > 0, ErrorKind::ValidationError, "operator needs a chart dimension");
    s.op = read_operator(doc.at("operator"), dim);
  }
  if (doc.contains("frame")) {
    const std::size_t dim = n > 0 ? n : s.ambient;
    for (const auto& f : as_array(doc.at("frame"), "frame")) s.frame.push_back(read_field(f, dim));
  }
  if (doc.contains("forms")) {
    require(n > 0, ErrorKind::ValidationError, "forms need p and c");
    std::vector<PolyForm> forms;
    for (const auto& f : as_array(doc.at("forms"), "forms")) forms.push_back(read_one_form(f, n));
    s.forms = std::move(forms);
  }
  if (doc.contains("curve")) s.curve = read_curve(doc.at("curve"));
  if (doc.contains("point")) s.point = read_vector(doc.at("point"));
  if (doc.contains("options")) {
    require(doc.at("options").is_object(), ErrorKind::ParseError, "options must be an object");
    s.options = doc.at("options");
  }
  if (doc.contains("expect")) {
    const Json& e = doc.at("expect");
    require(e.is_object(), ErrorKind::ParseError, "expect must be an object");
    for (const auto& [key, value] : e.items()) {
      require(value.is_boolean(), ErrorKind::ParseError, "expected verdict \"" + key + "\" must be a boolean");
      s.expect[key] = value.get<bool>();
    }
  }
  if (doc.contains("expect_error")) s.expect_error = as_string(doc.at("expect_error"), "expect_error");
  return s;
}

inline Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    fail(ErrorKind::ParseError, std::string("malformed JSON: ") + err.what());
  }
}

}  // namespace verona::cli
