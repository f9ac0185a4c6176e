#pragma once

#include <chrono>
#include <fstream>
#include <sstream>

#include "verona/cli/report.hpp"
#include "verona/cli/scenario.hpp"
#include "verona/verona.hpp"

namespace verona::cli {

namespace detail {

inline void set_verdict(Report& r, const std::string& name, bool value, bool required = false) {
  r.verdicts[name] = value;
  if (required) r.required.push_back(name);
}

inline Json write_spaces(const std::vector<Subspace>& spaces) {
  Json out = Json::array();
  for (const auto& s : spaces) out.push_back(write_subspace(s));
  return out;
}

inline Json write_polys(const std::vector<MultiPoly>& polys, std::size_t n) {
  Json out = Json::array();
  for (const auto& f : polys) out.push_back(write_poly(f, n));
  return out;
}

inline Json write_params(const std::vector<ProjParam>& params) {
  Json out = Json::array();
  for (const auto& t : params) out.push_back(write_param(t));
  return out;
}

inline bool curve_interpolates(const GrassCurve& curve, const std::vector<Subspace>& spaces,
                               const std::vector<ProjParam>& params) {
  for (std::size_t i = 0; i < params.size(); ++i)
    if (eval_curve(curve, params[i]) != spaces[i]) return false;
  return true;
}

inline std::vector<ProjParam> with_infinity(const std::vector<Scalar>& params) {
  std::vector<ProjParam> out(params.begin(), params.end());
  out.push_back(ProjParam::infinity());
  return out;
}

inline void require_spaces(const Scenario& s, std::size_t count) {
  require(s.subspaces.size() == count, ErrorKind::ValidationError,
          s.command + " needs " + std::to_string(count) + " subspaces, got " + std::to_string(s.subspaces.size()));
}

inline DistributionFamily family_of(const Scenario& s) {
  if (s.web) return family_from_web(*s.web);
  require(s.op.has_value(), ErrorKind::ValidationError, s.command + " needs a web or an operator with a frame");
  DistributionFamily f;
  f.p = s.p;
  f.c = s.c;
  f.G = *s.op;
  f.frame = s.frame;
  f.forms = s.forms;
  f.validate();
  return f;
}

inline Json write_pencil(const Pencil& pencil) {
  return Json{{"G", write_matrix(pencil.G)},
              {"f_inf", write_subspace(pencil.f_inf)},
              {"adapted_frame", write_matrix(pencil.basis.frame)},
              {"params", write_vector(pencil.params)},
              {"curve", write_curve(pencil_curve(pencil))}};
}

}  // namespace detail

inline void run_check_position(const Scenario& s, Report& r) {
  require(s.c > 0, ErrorKind::ValidationError, "check-position needs c");
  const auto spaces = s.spaces();
  detail::set_verdict(r, "general_position", check_general_position(spaces, s.c));
  r.results["subspaces"] = detail::write_spaces(spaces);
}

inline void run_interpolate_pencil(const Scenario& s, Report& r) {
  const auto spaces = s.spaces();
  if (s.params.size() == spaces.size()) {
    const GrassCurve curve = interpolate_pencil_at(spaces, s.params);
    detail::set_verdict(r, "interpolates", detail::curve_interpolates(curve, spaces, s.params), true);
    r.results["curve"] = write_curve(curve);
    return;
  }
  detail::require_spaces(s, s.params.size() + 1);
  Pencil pencil = pencil_interpolate(spaces, s.finite_params());
  if (s.options.value("make_invertible", false)) pencil = make_invertible(pencil);
  detail::set_verdict(r, "interpolates",
                      detail::curve_interpolates(pencil_curve(pencil), spaces, detail::with_infinity(pencil.params)),
                      true);
  detail::set_verdict(r, "operator_invertible", !is_zero(determinant(pencil.G)));
  r.results["pencil"] = detail::write_pencil(pencil);
}

inline void run_interpolate_veronese(const Scenario& s, Report& r) {
  const auto spaces = s.spaces();
  detail::require_spaces(s, s.params.size() + 1);
  const auto params = s.finite_params();
  const GrassCurve curve = veronese_interpolate(spaces, params);
  detail::set_verdict(r, "interpolates", detail::curve_interpolates(curve, spaces, detail::with_infinity(params)), true);
  detail::set_verdict(r, "degree_is_p_minus_1", curve.actual_degree() == static_cast<long>(params.size()) - 1);
  r.results["curve"] = write_curve(curve);
  if (curve.generator_count() == 1) detail::set_verdict(r, "is_veronese", is_veronese_curve(curve));
  if (curve.generator_count() == 1 && curve.ambient_dim() == 3 && curve.degree() == 2)
    r.results["conic"] = write_matrix(conic_form(curve));
}

inline void run_verify_unicity(const Scenario& s, Report& r) {
  const auto spaces = s.spaces();
  detail::require_spaces(s, s.params.size() + 1);
  const Pencil base = normalize_pencil(pencil_interpolate(spaces, s.finite_params()));
  Pencil other = base;
  if (s.options.contains("delta")) {
    std::vector<QVector> delta;
    for (const auto& v : as_array(s.options.at("delta"), "delta")) delta.push_back(read_vector(v));
    other = apply_delta(base, delta);
  } else if (s.options.contains("other_params")) {
    std::vector<Scalar> alt;
    for (const auto& t : as_array(s.options.at("other_params"), "other_params")) alt.push_back(read_scalar(t));
    other = normalize_pencil(pencil_interpolate(spaces, alt));
  }
  const ImageComparison cmp = compare_pencil_images(base, other);
  detail::set_verdict(r, "lemma_equal", cmp.lemma_equal);
  detail::set_verdict(r, "sampled_equal", cmp.sampled_equal);
  detail::set_verdict(r, "methods_agree", cmp.lemma_equal == cmp.sampled_equal, true);
  r.results["normalized_params"] = write_vector(base.params);
  r.results["other_params"] = write_vector(other.params);
  r.results["G"] = write_matrix(base.G);
  r.results["other_G"] = write_matrix(other.G);
}

inline void run_is_veronese(const Scenario& s, Report& r) {
  require(s.curve.has_value(), ErrorKind::ValidationError, "is-veronese needs a curve");
  detail::set_verdict(r, "is_veronese", is_veronese_curve(*s.curve));
  r.results["curve"] = write_curve(*s.curve);
}

inline void run_conic(const Scenario& s, Report& r) {
  require(s.curve.has_value(), ErrorKind::ValidationError, "conic needs a curve");
  const QMatrix q = conic_form(*s.curve);
  UniPoly identity;
  const auto& g = s.curve->generators().front();
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (!is_zero(q(a, b))) identity += UniPoly(q(a, b)) * g[a] * g[b];
  detail::set_verdict(r, "on_conic", identity.is_zero(), true);
  detail::set_verdict(r, "nondegenerate", rank(q) == 3);
  r.results["conic"] = write_matrix(q);
}

inline void run_sample_web(const Scenario& s, Report& r) {
  require(s.web.has_value(), ErrorKind::ValidationError, "sample-web needs a web");
  const QVector point = s.point.value_or(QVector(s.web->dim()));
  const SampledWeb sampled = sample_web(*s.web, s.params, point);
  detail::set_verdict(r, "general_position", sampled.general_position, true);
  std::vector<Scalar> finite;
  for (const auto& t : s.params)
    if (t.is_finite()) finite.push_back(t.value());
  r.results["leaves"] = detail::write_spaces(sampled.leaves);
  r.results["vdm_det"] = write_scalar(vdm_det(finite));
  r.results["point"] = write_vector(point);
}

inline void run_gz_model(const Scenario& s, Report& r) {
  require(s.p >= 2, ErrorKind::ValidationError, "gz-model needs p >= 2");
  const GzModel model = gz_local_model(s.p);
  const auto beta = gz_beta(s.p);
  bool vanishes = true;
  for (const auto& entry : contract(model.pencil, beta)) vanishes = vanishes && entry.is_zero();
  bool kernels = true;
  for (long k = 0; k < 5; ++k) {
    QVector value(beta.size());
    for (std::size_t a = 0; a < beta.size(); ++a) value[a] = beta[a](Scalar(k));
    kernels = kernels && pencil_kernel(model.pencil, Scalar(k)) == span_of({value}, beta.size());
  }
  detail::set_verdict(r, "contraction_vanishes", vanishes, true);
  detail::set_verdict(r, "kernel_is_beta", kernels, true);
  Json beta_table = Json::array();
  for (const auto& b : beta) beta_table.push_back(write_unipoly(b));
  Json web = Json::array();
  for (const auto& form : model.web.coframe[0]) web.push_back(write_form(form));
  r.results["pi0"] = write_matrix(model.pencil.pi0);
  r.results["pi_inf"] = write_matrix(model.pencil.pi_inf);
  r.results["beta"] = beta_table;
  r.results["web_coframe"] = web;
}

inline void run_nijenhuis(const Scenario& s, Report& r) {
  require(s.op.has_value(), ErrorKind::ValidationError, "nijenhuis needs an operator");
  const std::size_t n = s.op->rows();
  std::vector<PolyVectorField> fields = s.frame;
  if (fields.empty())
    for (std::size_t k = 0; k < n; ++k) fields.push_back(PolyVectorField::coordinate(n, k));
  Json values = Json::array();
  bool vanishes = true;
  for (std::size_t i = 0; i < fields.size(); ++i)
    for (std::size_t j = i + 1; j < fields.size(); ++j) {
      const auto value = nijenhuis(*s.op, fields[i], fields[j]);
      vanishes = vanishes && value.is_zero();
      values.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"value", write_field(value)}});
    }
  detail::set_verdict(r, "vanishes", vanishes);
  r.results["values"] = values;
}

inline void run_frobenius(const Scenario& s, Report& r) {
  const DistributionFamily family = detail::family_of(s);
  const auto minors = frobenius_contravariant(family);
  detail::set_verdict(r, "integrable", minors.empty());
  r.results["contravariant_minors"] = detail::write_polys(minors, family.dim());
  if (family.forms) {
    const auto covariant = frobenius_covariant(*family.forms);
    detail::set_verdict(r, "covariant_integrable", covariant.empty());
    detail::set_verdict(r, "representations_agree", covariant.empty() == minors.empty(), true);
    r.results["covariant_coefficients"] = detail::write_polys(covariant, family.dim());
  }
}

inline void run_panasiuk(const Scenario& s, Report& r) {
  const DistributionFamily family = detail::family_of(s);
  const PanasiukReport rep = panasiuk_verify(family, s.params);
  const bool all_samples =
      std::all_of(rep.sample_verdicts.begin(), rep.sample_verdicts.end(), [](bool b) { return b; });
  detail::set_verdict(r, "consistent", rep.ok(), true);
  detail::set_verdict(r, "family_integrable", rep.family_integrable);
  detail::set_verdict(r, "all_samples_integrable", all_samples);
  detail::set_verdict(r, "nijenhuis_vanishes_on_frame", rep.nijenhuis_vanishes_on_frame);
  detail::set_verdict(r, "degree_bounds_hold", rep.degree_bounds_hold);
  if (rep.representations_agree) detail::set_verdict(r, "representations_agree", *rep.representations_agree);
  if (rep.torsion_consistent) detail::set_verdict(r, "torsion_consistent", *rep.torsion_consistent);
  Json samples = Json::array();
  for (std::size_t k = 0; k < rep.samples.size(); ++k)
    samples.push_back(Json{{"t", write_param(rep.samples[k])}, {"integrable", static_cast<bool>(rep.sample_verdicts[k])}});
  Json torsion = Json::array();
  for (const auto& v : rep.nijenhuis_values) torsion.push_back(write_field(v));
  r.results["samples"] = samples;
  r.results["nijenhuis_values"] = torsion;
  r.results["contravariant_minors"] = detail::write_polys(rep.contravariant_minors, family.dim());
  r.results["max_t_degree_contravariant"] = rep.max_t_degree_contravariant;
  r.results["max_t_degree_covariant"] = rep.max_t_degree_covariant;
  r.results["operator"] = write_operator(family.G);
}

inline void dispatch(const Scenario& s, Report& r) {
  using Handler = void (*)(const Scenario&, Report&);
  static const std::map<std::string, Handler> handlers{
      {"check-position", run_check_position}, {"interpolate-pencil", run_interpolate_pencil},
      {"interpolate-veronese", run_interpolate_veronese}, {"verify-unicity", run_verify_unicity},
      {"is-veronese", run_is_veronese}, {"conic", run_conic},
      {"sample-web", run_sample_web}, {"gz-model", run_gz_model},
      {"nijenhuis", run_nijenhuis}, {"frobenius", run_frobenius},
      {"panasiuk", run_panasiuk}};
  handlers.at(s.command)(s, r);
}

/// Parses, validates and runs one scenario document. Errors become an error report.
inline Report run_document(const std::string& text) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    const Json doc = parse_document(text);
    if (doc.is_object() && doc.contains("command") && doc.at("command").is_string())
      r.command = doc.at("command").get<std::string>();
    const Scenario s = parse_scenario(doc);
    dispatch(s, r);
    for (const auto& name : r.required)
      if (!r.verdicts.at(name)) r.status = Status::VerdictFailure;
    for (const auto& [name, expected] : s.expect) {
      auto it = r.verdicts.find(name);
      if (it == r.verdicts.end() || it->second != expected) r.failed_expectations.push_back(name);
    }
    if (!r.failed_expectations.empty()) r.status = Status::VerdictFailure;
  } catch (const Error& err) {
    r = Report{r.command, Status::Error, {}, {}, {}, Json::object(), ReportError{std::string(err.name()), err.context()}};
  } catch (const Json::exception& err) {
    r = Report{r.command, Status::Error, {}, {}, {}, Json::object(), ReportError{"ParseError", err.what()}};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace verona::cli
