#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "verona/calculus.hpp"
#include "verona/exact_linalg.hpp"
#include "verona/minors.hpp"
#include "verona/projective.hpp"
#include "verona/webs.hpp"

namespace verona {

/// N_G(X, Y) = [GX, GY] - G([GX, Y] + [X, GY]) + G^2 [X, Y].
inline PolyVectorField nijenhuis(const OperatorField& g, const PolyVectorField& x, const PolyVectorField& y) {
  require(g.rows() == x.dim() && g.cols() == x.dim() && x.dim() == y.dim(), ErrorKind::DimensionMismatch,
          "Nijenhuis torsion needs a square operator matching the fields");
  const PolyVectorField gx = apply(g, x), gy = apply(g, y);
  const PolyVectorField delta = lie_bracket(gx, y) + lie_bracket(x, gy);
  return lie_bracket(gx, gy) - apply(g, delta) + apply(g, apply(g, lie_bracket(x, y)));
}

/// F_t = (G - t I) F_inf on a polynomial chart of dimension n = pc. Curve parameter t
/// is the polynomial variable with index n. `forms`, when present, are c 1-forms with
/// coefficients in (x, t) whose common kernel is F_t.
struct DistributionFamily {
  std::size_t p = 0;
  std::size_t c = 0;
  OperatorField G;
  std::vector<PolyVectorField> frame;
  std::optional<std::vector<PolyForm>> forms;

  std::size_t dim() const noexcept { return G.rows(); }
  std::size_t t_var() const noexcept { return G.rows(); }

  void validate() const {
    const std::size_t n = p * c;
    require(n > 0 && n < kMaxVars, ErrorKind::ValidationError, "chart dimension must be in 1..15");
    require(G.rows() == n && G.cols() == n, ErrorKind::DimensionMismatch, "operator must be (pc) x (pc)");
    require(frame.size() == (p - 1) * c, ErrorKind::DimensionMismatch, "F_inf frame needs (p-1)c fields");
    for (const auto& v : frame) require(v.dim() == n, ErrorKind::DimensionMismatch, "frame field dimension");
    if (forms) {
      require(forms->size() == c, ErrorKind::DimensionMismatch, "need c defining forms");
      for (const auto& f : *forms)
        require(f.degree() == 1 && f.dim() == n, ErrorKind::DimensionMismatch, "defining forms are 1-forms on Q^{pc}");
    }
  }
};

/// (G - tI) v_k at a parameter; at infinity the frame of F_inf itself.
inline std::vector<PolyVectorField> frame_at(const DistributionFamily& family, const ProjParam& t) {
  if (t.is_infinite()) return family.frame;
  std::vector<PolyVectorField> out;
  for (const auto& v : family.frame) out.push_back(apply(family.G, v) - MultiPoly(t.value()) * v);
  return out;
}

/// (G - tI) v_k with t symbolic.
inline std::vector<PolyVectorField> frame_symbolic(const DistributionFamily& family) {
  const MultiPoly t = MultiPoly::variable(family.t_var());
  std::vector<PolyVectorField> out;
  for (const auto& v : family.frame) out.push_back(apply(family.G, v) - t * v);
  return out;
}

namespace detail {
inline Matrix<MultiPoly> stack_fields(const std::vector<PolyVectorField>& fields, std::size_t n) {
  Matrix<MultiPoly> m(fields.size(), n);
  for (std::size_t r = 0; r < fields.size(); ++r)
    for (std::size_t k = 0; k < n; ++k) m(r, k) = fields[r][k];
  return m;
}

/// Deterministic probe points; the last coordinate slot may hold t.
inline std::vector<QVector> probe_points(std::size_t vars) {
  std::vector<QVector> pts;
  for (long k = 0; k < 4; ++k) {
    QVector pt(vars);
    for (std::size_t v = 0; v < vars; ++v) pt[v] = Scalar(k == 0 ? 0 : long((v + 1) * (2 * k + 1) % 7) - 3 + k, k == 3 ? 2 : 1);
    pts.push_back(std::move(pt));
  }
  return pts;
}

/// True if the fields are pointwise independent at some probe point.
inline bool generically_independent(const std::vector<PolyVectorField>& fields, std::size_t n, std::size_t vars) {
  if (fields.empty()) return true;
  const Matrix<MultiPoly> m = stack_fields(fields, n);
  for (const auto& pt : probe_points(vars))
    if (rank(operator_at(m, pt)) == fields.size()) return true;
  return false;
}
}  // namespace detail

/// Nonzero ((r+1) x (r+1)) minors of [X_i, X_j] stacked over the frame X_1..X_r, per pair.
struct PairMinors {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<Minor<MultiPoly>> minors;
};

inline std::vector<PairMinors> frobenius_pair_minors(const std::vector<PolyVectorField>& frame) {
  std::vector<PairMinors> out;
  if (frame.empty()) return out;
  const std::size_t n = frame.front().dim();
  if (frame.size() >= n) return out;
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = i + 1; j < frame.size(); ++j) {
      std::vector<PolyVectorField> rows{lie_bracket(frame[i], frame[j])};
      rows.insert(rows.end(), frame.begin(), frame.end());
      auto minors = maximal_minors(detail::stack_fields(rows, n));
      if (!minors.empty()) out.push_back({i, j, std::move(minors)});
    }
  return out;
}

/// All nonzero Frobenius minors of F_t in (x, t); empty iff every F_t is integrable.
inline std::vector<MultiPoly> frobenius_contravariant(const DistributionFamily& family) {
  family.validate();
  std::vector<MultiPoly> out;
  for (auto& pair : frobenius_pair_minors(frame_symbolic(family)))
    for (auto& minor : pair.minors) out.push_back(std::move(minor.value));
  return out;
}

/// Nonzero coefficients of d(alpha^i) ^ alpha^1 ^ ... ^ alpha^c for each i.
inline std::vector<MultiPoly> frobenius_covariant(const std::vector<PolyForm>& alphas) {
  std::vector<MultiPoly> out;
  if (alphas.empty()) return out;
  const std::size_t n = alphas.front().dim();
  for (const auto& a : alphas)
    require(a.degree() == 1 && a.dim() == n, ErrorKind::DimensionMismatch, "covariant test takes 1-forms on one chart");
  if (alphas.size() + 2 > n) return out;
  PolyForm product = alphas.front();
  for (std::size_t k = 1; k < alphas.size(); ++k) product = wedge(product, alphas[k]);
  for (const auto& a : alphas) {
    const PolyForm test = wedge(exterior_derivative(a), product);
    for (const auto& [idx, coeff] : test.coefficients()) out.push_back(coeff);
  }
  return out;
}

/// theta[pair][k] with [X_i, X_j] = sum_k theta_ij^k X_k.
struct StructureCoefficients {
  struct Entry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<MultiPoly> theta;
  };
  std::vector<Entry> entries;
};

/// Polynomial structure coefficients via Cramer's rule on some nonzero r x r minor, when
/// every quotient is exact; nullopt otherwise.
inline std::optional<StructureCoefficients> structure_coefficients(const std::vector<PolyVectorField>& frame) {
  StructureCoefficients out;
  if (frame.size() < 2) return out;
  const std::size_t n = frame.front().dim(), r = frame.size();
  const Matrix<MultiPoly> stacked = detail::stack_fields(frame, n);
  auto minors = maximal_minors(stacked);
  std::stable_sort(minors.begin(), minors.end(), [](const auto& a, const auto& b) {
    return a.value.total_degree() < b.value.total_degree();
  });
  if (minors.size() > 8) minors.resize(8);
  for (const auto& minor : minors) {
    const Matrix<MultiPoly> square = stacked.select_columns(minor.columns);
    StructureCoefficients attempt;
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = i + 1; j < r && ok; ++j) {
        const PolyVectorField bracket = lie_bracket(frame[i], frame[j]);
        StructureCoefficients::Entry entry{i, j, {}};
        PolyVectorField rebuilt(n);
        for (std::size_t k = 0; k < r && ok; ++k) {
          Matrix<MultiPoly> replaced = square;
          for (std::size_t col = 0; col < minor.columns.size(); ++col) replaced(k, col) = bracket[minor.columns[col]];
          auto theta = ring_determinant(replaced).exact_divide(minor.value);
          if (!theta) ok = false;
          else {
            rebuilt += *theta * frame[k];
            entry.theta.push_back(std::move(*theta));
          }
        }
        if (ok && !(rebuilt == bracket)) ok = false;
        if (ok) attempt.entries.push_back(std::move(entry));
      }
    if (ok) return attempt;
  }
  return std::nullopt;
}

struct IntegrabilityVerdict {
  bool integrable = false;
  std::optional<StructureCoefficients> certificate;
};

inline IntegrabilityVerdict is_integrable_at(const DistributionFamily& family, const ProjParam& t) {
  family.validate();
  const auto frame = frame_at(family, t);
  if (!detail::generically_independent(frame, family.dim(), family.dim()))
    fail(ErrorKind::DegenerateFrame, "frame of F_t is dependent at every probe point, t = " + to_string(t));
  IntegrabilityVerdict out;
  out.integrable = frobenius_pair_minors(frame).empty();
  if (out.integrable) out.certificate = structure_coefficients(frame);
  return out;
}

struct PanasiukReport {
  std::vector<ProjParam> samples;
  std::vector<bool> sample_verdicts;
  /// N_G(v_i, v_j) for i < j in row-major pair order.
  std::vector<PolyVectorField> nijenhuis_values;
  bool nijenhuis_vanishes_on_frame = false;
  std::vector<MultiPoly> contravariant_minors;
  bool family_integrable = false;
  std::optional<bool> covariant_integrable;
  long max_t_degree_contravariant = -1;
  long max_t_degree_covariant = -1;
  /// Integrable at every sample implies the family verdict, and the converse.
  bool theorem_consistent = false;
  /// With 0 and infinity among the samples, integrability at all of them forces N_G(v_i, v_j) = 0.
  std::optional<bool> torsion_consistent;
  /// Covariant and contravariant verdicts agree (when forms are present).
  std::optional<bool> representations_agree;
  bool degree_bounds_hold = false;

  bool ok() const {
    return theorem_consistent && torsion_consistent.value_or(true) && representations_agree.value_or(true) &&
           degree_bounds_hold;
  }
};

/// Checks the p+2 parameter theorem on one family. det G must not vanish identically.
inline PanasiukReport panasiuk_verify(const DistributionFamily& family, const std::vector<ProjParam>& samples) {
  family.validate();
  require_distinct(samples);
  if (samples.size() < family.p + 2)
    fail(ErrorKind::NotEnoughSamples,
         "need p+2 = " + std::to_string(family.p + 2) + " samples, got " + std::to_string(samples.size()));
  const MultiPoly det = ring_determinant(family.G);
  if (det.is_zero()) fail(ErrorKind::SingularOperator, "det G vanishes identically");

  PanasiukReport report;
  report.samples = samples;
  for (const auto& s : samples) report.sample_verdicts.push_back(is_integrable_at(family, s).integrable);

  report.nijenhuis_vanishes_on_frame = true;
  for (std::size_t i = 0; i < family.frame.size(); ++i)
    for (std::size_t j = i + 1; j < family.frame.size(); ++j) {
      auto value = nijenhuis(family.G, family.frame[i], family.frame[j]);
      if (!value.is_zero()) report.nijenhuis_vanishes_on_frame = false;
      report.nijenhuis_values.push_back(std::move(value));
    }

  report.contravariant_minors = frobenius_contravariant(family);
  report.family_integrable = report.contravariant_minors.empty();
  for (const auto& m : report.contravariant_minors)
    report.max_t_degree_contravariant = std::max(report.max_t_degree_contravariant, m.degree_in(family.t_var()));
  report.degree_bounds_hold =
      report.max_t_degree_contravariant <= static_cast<long>(2 + (family.p - 1) * family.c);

  if (family.forms) {
    const auto covariant = frobenius_covariant(*family.forms);
    report.covariant_integrable = covariant.empty();
    for (const auto& m : covariant)
      report.max_t_degree_covariant = std::max(report.max_t_degree_covariant, m.degree_in(family.t_var()));
    report.representations_agree = *report.covariant_integrable == report.family_integrable;
    report.degree_bounds_hold = report.degree_bounds_hold &&
                                report.max_t_degree_covariant <= static_cast<long>((family.c + 1) * family.p);
  }

  const bool all_samples = std::all_of(report.sample_verdicts.begin(), report.sample_verdicts.end(),
                                       [](bool b) { return b; });
  report.theorem_consistent = all_samples == report.family_integrable;
  const bool has_anchors = std::find(samples.begin(), samples.end(), ProjParam(0)) != samples.end() &&
                           std::find(samples.begin(), samples.end(), ProjParam::infinity()) != samples.end();
  if (has_anchors) report.torsion_consistent = !all_samples || report.nijenhuis_vanishes_on_frame;
  return report;
}

namespace detail {
/// Matrix inverse over polynomials when the determinant is a nonzero constant.
inline Matrix<MultiPoly> polynomial_inverse(const Matrix<MultiPoly>& m, ErrorKind kind, const std::string& what) {
  const MultiPoly det = ring_determinant(m);
  if (det.is_zero() || !det.is_constant()) fail(kind, what + " needs a nonzero constant determinant");
  return adjugate(m) * MultiPoly(Scalar(1) / det.constant_term());
}
}  // namespace detail

/// Family of a Veronese web whose coframe has constant nonzero determinant. With U the
/// dual frame u^i_j, G shifts u^i_j -> u^i_{j+1} cyclically and F_inf = <u^i_j : j < p-1>,
/// so (G - t) F_inf = <u^i_{j+1} - t u^i_j> = ker alpha_t.
inline DistributionFamily family_from_web(const VeroneseWebSpec& web) {
  const Matrix<MultiPoly> gamma = coframe_matrix(web);
  const std::size_t n = web.dim(), p = web.p;
  const Matrix<MultiPoly> dual = detail::polynomial_inverse(gamma, ErrorKind::CoframeDegenerate, "web coframe");
  Matrix<MultiPoly> shift(n, n);
  for (std::size_t i = 0; i < web.c; ++i)
    for (std::size_t j = 0; j < p; ++j) shift(i * p + (j + 1) % p, i * p + j) = MultiPoly(1);
  DistributionFamily out;
  out.p = p;
  out.c = web.c;
  out.G = dual * shift * gamma;
  for (std::size_t i = 0; i < web.c; ++i)
    for (std::size_t j = 0; j + 1 < p; ++j) out.frame.emplace_back(dual.column(i * p + j));
  out.forms = web_alpha_symbolic(web);
  return out;
}

/// Family diagonal in a polynomial frame E (columns e_i^j, index i*c + j, constant
/// nonzero determinant): G e_i^j = t_i e_i^j, F_inf = <e_p^j - e_k^j>, and the defining
/// forms are sum_i prod_{l != i} (t_l - t) x_i^j over the dual coframe.
inline DistributionFamily family_from_frame(const Matrix<MultiPoly>& e, std::size_t c, const std::vector<Scalar>& params) {
  const std::size_t n = e.rows(), p = params.size();
  require(e.square() && p * c == n, ErrorKind::DimensionMismatch, "frame must be (pc) x (pc)");
  std::vector<ProjParam> proj(params.begin(), params.end());
  require_distinct(proj);
  const Matrix<MultiPoly> coframe = detail::polynomial_inverse(e, ErrorKind::NotDirectSum, "adapted frame");
  Matrix<MultiPoly> diag(n, n);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < c; ++j) diag(i * c + j, i * c + j) = MultiPoly(params[i]);
  DistributionFamily out;
  out.p = p;
  out.c = c;
  out.G = e * diag * coframe;
  for (std::size_t k = 0; k + 1 < p; ++k)
    for (std::size_t j = 0; j < c; ++j) {
      PolyVectorField v(e.column((p - 1) * c + j));
      v -= PolyVectorField(e.column(k * c + j));
      out.frame.push_back(std::move(v));
    }
  const MultiPoly t = MultiPoly::variable(n);
  std::vector<PolyForm> forms;
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<MultiPoly> coeffs(n);
    for (std::size_t i = 0; i < p; ++i) {
      MultiPoly weight(1);
      for (std::size_t l = 0; l < p; ++l)
        if (l != i) weight *= MultiPoly(params[l]) - t;
      for (std::size_t k = 0; k < n; ++k) coeffs[k] += weight * coframe(i * c + j, k);
    }
    forms.push_back(PolyForm::one_form(coeffs));
  }
  out.forms = std::move(forms);
  return out;
}

/// G = t_i Id on H_i = intersection of F_j over j != i, for constant subspaces F_1..F_p.
/// When f_inf is given, also checks (G - t_i) F_inf = F_i.
inline OperatorField turiel_operator(const std::optional<Subspace>& f_inf, const std::vector<Subspace>& leaves,
                                     const std::vector<Scalar>& params) {
  const std::size_t p = leaves.size();
  require(p >= 1 && params.size() == p, ErrorKind::DimensionMismatch, "need one parameter per leaf");
  std::vector<ProjParam> proj(params.begin(), params.end());
  require_distinct(proj);
  const std::size_t n = leaves.front().ambient_dim();
  std::vector<Subspace> blocks;
  std::size_t total = 0;
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Subspace> others;
    for (std::size_t j = 0; j < p; ++j)
      if (j != i) others.push_back(leaves[j]);
    blocks.push_back(others.empty() ? Subspace::full(n) : intersect_all(others));
    total += blocks.back().dim();
  }
  Subspace all = Subspace::zero(n);
  for (const auto& h : blocks) all = sum(all, h);
  if (total != n || all.dim() != n) fail(ErrorKind::NotDirectSum, "the H_i do not decompose the tangent space");
  QMatrix h_cols(n, n), diag(n, n);
  std::size_t col = 0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t r = 0; r < blocks[i].dim(); ++r, ++col) {
      for (std::size_t k = 0; k < n; ++k) h_cols(k, col) = blocks[i].basis()(r, k);
      diag(col, col) = params[i];
    }
  const QMatrix g = h_cols * diag * inverse(h_cols);
  if (f_inf) {
    for (std::size_t i = 0; i < p; ++i)
      if (!maps_onto(g - QMatrix::identity(n) * params[i], *f_inf, leaves[i]))
        fail(ErrorKind::GeneralPositionViolation, "(G - t_i) F_inf misses F_" + std::to_string(i + 1));
  }
  return constant_operator(g);
}

/// G = t_i Id on polynomial blocks: columns of `h` grouped c per parameter.
inline OperatorField turiel_operator(const Matrix<MultiPoly>& h, std::size_t c, const std::vector<Scalar>& params) {
  const std::size_t n = h.rows();
  require(h.square() && params.size() * c == n, ErrorKind::DimensionMismatch, "blocks must fill the chart");
  std::vector<ProjParam> proj(params.begin(), params.end());
  require_distinct(proj);
  const Matrix<MultiPoly> inv = detail::polynomial_inverse(h, ErrorKind::NotDirectSum, "H_i frame");
  Matrix<MultiPoly> diag(n, n);
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) diag(i * c + j, i * c + j) = MultiPoly(params[i]);
  return h * diag * inv;
}

}  // namespace verona
