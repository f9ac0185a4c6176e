#pragma once

#include <nlohmann/json.hpp>

#include <charconv>
#include <string>
#include <vector>

#include "verona/calculus.hpp"
#include "verona/grass_curve.hpp"

namespace verona::cli {

using Json = nlohmann::json;

inline const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

inline std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(ErrorKind::ParseError, std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline std::size_t as_count(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) fail(ErrorKind::ParseError, std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

inline const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::ParseError, std::string(what) + " must be an array");
  return j;
}

// Rationals are strings "a/b" or "a"; bare JSON numbers are rejected to keep input exact.
inline Scalar read_scalar(const Json& j) { return parse_scalar(as_string(j, "rational")); }
inline Json write_scalar(const Scalar& s) { return to_string(s); }

inline ProjParam read_param(const Json& j) { return parse_param(as_string(j, "parameter")); }
inline Json write_param(const ProjParam& p) { return to_string(p); }

inline QVector read_vector(const Json& j) {
  QVector out;
  for (const auto& x : as_array(j, "vector")) out.push_back(read_scalar(x));
  return out;
}
inline Json write_vector(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(write_scalar(x));
  return out;
}

inline QMatrix read_matrix(const Json& j, std::size_t cols) {
  std::vector<QVector> rows;
  for (const auto& r : as_array(j, "matrix")) {
    rows.push_back(read_vector(r));
    require(rows.back().size() == cols, ErrorKind::ValidationError,
            "matrix row has " + std::to_string(rows.back().size()) + " entries, expected " + std::to_string(cols));
  }
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < cols; ++k) m(r, k) = rows[r][k];
  return m;
}
inline Json write_matrix(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(write_vector(m.row_vector(r)));
  return out;
}

inline Json write_subspace(const Subspace& s) {
  return Json{{"ambient", s.ambient_dim()}, {"dim", s.dim()}, {"basis", write_matrix(s.basis())}};
}

// Monomials are written "1", "x1^2*x3", "t"; x1..xn are chart coordinates and t is variable n.
inline Monomial read_monomial(const std::string& text, std::size_t n) {
  Monomial m{};
  if (text == "1") return m;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('*', pos), text.size());
    const std::string factor = text.substr(pos, end - pos);
    const std::size_t caret = factor.find('^');
    const std::string name = factor.substr(0, caret);
    unsigned exponent = 1;
    if (caret != std::string::npos) {
      const std::string e = factor.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exponent);
      if (ec != std::errc() || ptr != e.data() + e.size() || exponent == 0 || exponent > 255)
        fail(ErrorKind::ParseError, "bad exponent in monomial \"" + text + "\"");
    }
    std::size_t var = 0;
    if (name == "t") {
      var = n;
    } else {
      if (name.size() < 2 || name[0] != 'x') fail(ErrorKind::ParseError, "bad variable in monomial \"" + text + "\"");
      auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), var);
      if (ec != std::errc() || ptr != name.data() + name.size() || var == 0 || var > n)
        fail(ErrorKind::ParseError, "variable " + name + " outside the chart x1..x" + std::to_string(n));
      --var;
    }
    if (var >= kMaxVars) fail(ErrorKind::ValidationError, "too many variables");
    if (m[var] + exponent > 255) fail(ErrorKind::ParseError, "exponent overflow in \"" + text + "\"");
    m[var] = static_cast<std::uint8_t>(m[var] + exponent);
    pos = end + 1;
  }
  return m;
}

inline std::string write_monomial(const Monomial& m, std::size_t n) {
  std::string out;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += v == n ? std::string("t") : "x" + std::to_string(v + 1);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

inline MultiPoly read_poly(const Json& j, std::size_t n) {
  if (j.is_string()) return MultiPoly(read_scalar(j));
  if (!j.is_object()) fail(ErrorKind::ParseError, "polynomial must be a rational string or a monomial table");
  MultiPoly out;
  for (const auto& [mono, coeff] : j.items()) out += MultiPoly::monomial(read_monomial(mono, n), read_scalar(coeff));
  return out;
}
inline Json write_poly(const MultiPoly& f, std::size_t n) {
  Json out = Json::object();
  for (const auto& [m, c] : f.terms()) out[write_monomial(m, n)] = write_scalar(c);
  return out;
}

inline PolyVectorField read_field(const Json& j, std::size_t n) {
  std::vector<MultiPoly> comps;
  for (const auto& c : as_array(j, "vector field")) comps.push_back(read_poly(c, n));
  require(comps.size() == n, ErrorKind::ValidationError, "vector field needs " + std::to_string(n) + " components");
  return PolyVectorField(std::move(comps));
}
inline Json write_field(const PolyVectorField& x) {
  Json out = Json::array();
  for (const auto& c : x.components) out.push_back(write_poly(c, x.dim()));
  return out;
}

// A 1-form is the list of its dx_1..dx_n coefficients.
inline PolyForm read_one_form(const Json& j, std::size_t n) {
  std::vector<MultiPoly> coeffs;
  for (const auto& c : as_array(j, "1-form")) coeffs.push_back(read_poly(c, n));
  require(coeffs.size() == n, ErrorKind::ValidationError, "1-form needs " + std::to_string(n) + " coefficients");
  return PolyForm::one_form(coeffs);
}

inline Json write_form(const PolyForm& w) {
  Json out = Json::object();
  for (const auto& [idx, f] : w.coefficients()) {
    std::string key;
    for (auto k : idx) key += (key.empty() ? "dx" : "^dx") + std::to_string(k + 1);
    out[key.empty() ? "1" : key] = write_poly(f, w.dim());
  }
  return out;
}

inline OperatorField read_operator(const Json& j, std::size_t n) {
  const Json& rows = as_array(j, "operator");
  require(rows.size() == n, ErrorKind::ValidationError, "operator needs " + std::to_string(n) + " rows");
  OperatorField g(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = as_array(rows[r], "operator row");
    require(row.size() == n, ErrorKind::ValidationError, "operator row needs " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) g(r, k) = read_poly(row[k], n);
  }
  return g;
}
inline Json write_operator(const OperatorField& g) {
  Json out = Json::array();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t k = 0; k < g.cols(); ++k) row.push_back(write_poly(g(r, k), g.rows()));
    out.push_back(std::move(row));
  }
  return out;
}

inline UniPoly read_unipoly(const Json& j) {
  std::vector<Scalar> coeffs;
  for (const auto& c : as_array(j, "univariate coefficients")) coeffs.push_back(read_scalar(c));
  return UniPoly(std::move(coeffs));
}
inline Json write_unipoly(const UniPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(write_scalar(c));
  return out;
}

inline std::string display_generator(const PolyVector& g) {
  std::string out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + g[k].to_string() + ")*e" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

// Curve: {"ambient": n, "degree": q, "generators": [[coefficients low to high, per coordinate], ...]}.
inline GrassCurve read_curve(const Json& j) {
  const std::size_t n = as_count(field(j, "ambient"), "ambient");
  const std::size_t q = as_count(field(j, "degree"), "degree");
  std::vector<PolyVector> gens;
  for (const auto& g : as_array(field(j, "generators"), "generators")) {
    PolyVector v;
    for (const auto& c : as_array(g, "generator")) v.push_back(read_unipoly(c));
    gens.push_back(std::move(v));
  }
  return GrassCurve(n, std::move(gens), q);
}
inline Json write_curve(const GrassCurve& c) {
  Json gens = Json::array(), display = Json::array();
  for (const auto& g : c.generators()) {
    Json row = Json::array();
    for (const auto& entry : g) row.push_back(write_unipoly(entry));
    gens.push_back(std::move(row));
    display.push_back(display_generator(g));
  }
  return Json{{"ambient", c.ambient_dim()}, {"degree", c.degree()}, {"generators", gens}, {"display", display}};
}

}  // namespace verona::cli
