#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "verona/exact_linalg.hpp"
#include "verona/grass_curve.hpp"
#include "verona/projective.hpp"

namespace verona {

/// Basis e_i^j (i = 1..p, j = 1..c) of V = Q^{pc} in which F_i = {x_i = 0} for
/// i <= p and F_{p+1} = {sum_i x_i = 0}. Column (i-1)*c + (j-1) of `frame` is e_i^j;
/// the rows of `coordinates` are the dual coordinate functions x_i^j.
struct AdaptedBasis {
  std::size_t p = 0;
  std::size_t c = 0;
  QMatrix frame;
  QMatrix coordinates;

  std::size_t index(std::size_t i, std::size_t j) const { return i * c + j; }
  QVector vector(std::size_t i, std::size_t j) const { return frame.column(index(i, j)); }
};

/// Checks the three defining equation sets of an adapted basis against F_1..F_{p+1}.
inline bool satisfies_adapted_equations(const AdaptedBasis& basis, const std::vector<Subspace>& spaces) {
  const std::size_t p = basis.p, c = basis.c, n = p * c;
  if (spaces.size() != p + 1 || basis.frame.rows() != n || basis.frame.cols() != n) return false;
  if (basis.frame * basis.coordinates != QMatrix::identity(n)) return false;
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<QVector> rows;
    for (std::size_t j = 0; j < c; ++j) rows.push_back(basis.coordinates.row_vector(basis.index(i, j)));
    if (annihilator(spaces[i]) != span_of(rows, n)) return false;
  }
  std::vector<QVector> sums;
  for (std::size_t j = 0; j < c; ++j) {
    QVector s(n);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t k = 0; k < n; ++k) s[k] += basis.coordinates(basis.index(i, j), k);
    sums.push_back(std::move(s));
  }
  return annihilator(spaces[p]) == span_of(sums, n);
}

/// Deterministic adapted basis. W_i is the intersection of F_j over j <= p, j != i;
/// e_1^j is the RREF basis of W_1 and e_i^j = -L_i^{-1}(e_1^j), where F_{p+1} is the
/// graph {w_1 = sum_i L_i(w_i)} over the decomposition V = W_1 + ... + W_p.
inline AdaptedBasis adapted_basis(const std::vector<Subspace>& spaces, std::size_t c) {
  if (!check_general_position(spaces, c))
    fail(ErrorKind::GeneralPositionViolation, "some p of the p+1 subspaces meet nontrivially");
  const std::size_t p = spaces.size() - 1, n = p * c;
  std::vector<Subspace> blocks;
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Subspace> others;
    for (std::size_t j = 0; j < p; ++j)
      if (j != i) others.push_back(spaces[j]);
    blocks.push_back(others.empty() ? Subspace::full(n) : intersect_all(others));
  }
  const QMatrix constraints = annihilator(spaces[p]).basis();
  AdaptedBasis out{p, c, QMatrix(n, n), QMatrix()};
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t k = 0; k < n; ++k) out.frame(k, out.index(0, j)) = blocks[0].basis()(j, k);
  for (std::size_t i = 1; i < p; ++i) {
    const QMatrix block_cols = blocks[i].basis().transpose();
    const QMatrix system_inv = inverse(constraints * block_cols);
    for (std::size_t j = 0; j < c; ++j) {
      const QVector e1 = out.vector(0, j);
      QVector rhs = constraints * e1;
      for (auto& v : rhs) v = -v;
      const QVector coeffs = system_inv * rhs;
      const QVector w = block_cols * coeffs;
      for (std::size_t k = 0; k < n; ++k) out.frame(k, out.index(i, j)) = -w[k];
    }
  }
  out.coordinates = inverse(out.frame);
  if (!satisfies_adapted_equations(out, spaces))
    fail(ErrorKind::GeneralPositionViolation, "adapted basis failed its defining equations");
  return out;
}

/// t -> (G - t Id) F_inf, with F_{p+1} at infinity and F_i at params[i].
struct Pencil {
  QMatrix G;
  Subspace f_inf;
  std::vector<Scalar> params;
  AdaptedBasis basis;
  /// Rows e_p^j - e_k^j (k outer, j inner) spanning f_inf.
  QMatrix inf_frame;
};

/// The degree-1 curve of a pencil, generators (G - t) f for each row f of the infinity frame.
inline GrassCurve pencil_curve(const Pencil& pencil) {
  const std::size_t n = pencil.G.rows();
  std::vector<PolyVector> gens;
  for (std::size_t r = 0; r < pencil.inf_frame.rows(); ++r) {
    const QVector f = pencil.inf_frame.row_vector(r);
    const QVector gf = pencil.G * f;
    PolyVector g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = UniPoly::linear(gf[k], -f[k]);
    gens.push_back(std::move(g));
  }
  return GrassCurve(n, std::move(gens), 1);
}

inline Subspace eval_pencil(const Pencil& pencil, const ProjParam& s) { return eval_curve(pencil_curve(pencil), s); }

/// Pencil whose operator is diagonal in `basis` with eigenvalue params[i] on e_i^j.
inline Pencil pencil_from_basis(const AdaptedBasis& basis, const std::vector<Scalar>& params) {
  const std::size_t p = basis.p, c = basis.c, n = p * c;
  require(params.size() == p, ErrorKind::DimensionMismatch, "expected " + std::to_string(p) + " parameters");
  std::vector<ProjParam> as_proj(params.begin(), params.end());
  require_distinct(as_proj);
  QMatrix diag(n, n);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < c; ++j) diag(basis.index(i, j), basis.index(i, j)) = params[i];
  Pencil out;
  out.G = basis.frame * diag * basis.coordinates;
  out.params = params;
  out.basis = basis;
  out.inf_frame = QMatrix(0, n);
  for (std::size_t k = 0; k + 1 < p; ++k)
    for (std::size_t j = 0; j < c; ++j) {
      QVector v = basis.vector(p - 1, j);
      const QVector ek = basis.vector(k, j);
      for (std::size_t m = 0; m < n; ++m) v[m] -= ek[m];
      out.inf_frame.append_row(v);
    }
  out.f_inf = out.inf_frame.rows() == 0 ? Subspace::zero(n) : canonicalize(out.inf_frame);
  return out;
}

inline Pencil pencil_interpolate(const std::vector<Subspace>& spaces, const std::vector<Scalar>& params) {
  require(!spaces.empty(), ErrorKind::DimensionMismatch, "no subspaces given");
  require(params.size() + 1 == spaces.size(), ErrorKind::DimensionMismatch,
          "expected p parameters for p+1 subspaces");
  std::vector<ProjParam> as_proj(params.begin(), params.end());
  require_distinct(as_proj);
  const std::size_t p = params.size();
  require(p >= 1 && spaces[0].ambient_dim() % p == 0, ErrorKind::DimensionMismatch,
          "ambient dimension is not a multiple of p");
  const std::size_t c = spaces[0].ambient_dim() / p;
  Pencil out = pencil_from_basis(adapted_basis(spaces, c), params);
  for (std::size_t i = 0; i < p; ++i)
    if (!maps_onto(out.G - QMatrix::identity(out.G.rows()) * params[i], out.f_inf, spaces[i]))
      fail(ErrorKind::GeneralPositionViolation, "pencil misses F_" + std::to_string(i + 1));
  if (out.f_inf != spaces[p]) fail(ErrorKind::GeneralPositionViolation, "pencil misses F_{p+1} at infinity");
  return out;
}

/// G' = G + Delta with Delta(e_k^j) = v^j for every k, so Delta vanishes on F_inf.
inline Pencil apply_delta(const Pencil& pencil, const std::vector<QVector>& v) {
  const AdaptedBasis& b = pencil.basis;
  const std::size_t n = b.p * b.c;
  require(v.size() == b.c, ErrorKind::DimensionMismatch, "need one vector per codimension index");
  QMatrix delta(n, n);
  for (std::size_t j = 0; j < b.c; ++j) {
    require(v[j].size() == n, ErrorKind::DimensionMismatch, "delta vector has wrong length");
    for (std::size_t i = 0; i < b.p; ++i)
      for (std::size_t col = 0; col < n; ++col) {
        const Scalar& x = b.coordinates(b.index(i, j), col);
        if (is_zero(x)) continue;
        for (std::size_t row = 0; row < n; ++row) delta(row, col) += v[j][row] * x;
      }
  }
  Pencil out = pencil;
  out.G += delta;
  return out;
}

/// Same curve with an invertible operator: when some t_z = 0, add Delta(e_k^j) = e_z^j.
inline Pencil make_invertible(const Pencil& pencil) {
  if (!is_zero(determinant(pencil.G))) return pencil;
  const AdaptedBasis& b = pencil.basis;
  std::size_t zero_at = b.p;
  for (std::size_t i = 0; i < b.p; ++i)
    if (is_zero(pencil.params[i])) zero_at = i;
  require(zero_at < b.p, ErrorKind::SingularOperator, "singular pencil operator without a zero parameter");
  std::vector<QVector> v;
  for (std::size_t j = 0; j < b.c; ++j) v.push_back(b.vector(zero_at, j));
  Pencil out = apply_delta(pencil, v);
  require(!is_zero(determinant(out.G)), ErrorKind::SingularOperator, "repair did not produce an invertible operator");
  return out;
}

struct NormalizedParams {
  MobiusMap map;
  std::vector<Scalar> invariants;
};

/// The first three entries are the anchors sent to 0, 1 and infinity; the invariants
/// are the images of the remaining entries.
inline NormalizedParams normalize_params(const std::vector<ProjParam>& params) {
  require(params.size() >= 3, ErrorKind::NotEnoughSamples, "normalization needs at least three parameters");
  require_distinct(params);
  NormalizedParams out{mobius_three_point(params[0], params[1], params[2], ProjParam(0), ProjParam(1),
                                          ProjParam::infinity()),
                       {}};
  for (std::size_t k = 3; k < params.size(); ++k) out.invariants.push_back(out.map(params[k]).value());
  return out;
}

/// Pencil through the same subspaces with parameters normalized to t_1 = 0, t_2 = 1.
inline Pencil normalize_pencil(const Pencil& pencil) {
  std::vector<ProjParam> order{pencil.params[0], pencil.params[1], ProjParam::infinity()};
  for (std::size_t k = 2; k < pencil.params.size(); ++k) order.push_back(pencil.params[k]);
  const auto normalized = normalize_params(order);
  std::vector<Scalar> params{Scalar(0), Scalar(1)};
  params.insert(params.end(), normalized.invariants.begin(), normalized.invariants.end());
  return pencil_from_basis(pencil.basis, params);
}

struct ImageComparison {
  bool lemma_equal = false;    ///< parameter sequences agree
  bool sampled_equal = false;  ///< every sampled point of each lies on the other
};

/// Compares two pencils normalized at 0, 1, infinity through the same subspaces.
inline ImageComparison compare_pencil_images(const Pencil& a, const Pencil& b) {
  require(a.params.size() == b.params.size(), ErrorKind::NotNormalized, "pencils have different p");
  const GrassCurve ca = pencil_curve(a), cb = pencil_curve(b);
  for (const ProjParam& anchor : {ProjParam(0), ProjParam(1), ProjParam::infinity()})
    if (eval_curve(ca, anchor) != eval_curve(cb, anchor))
      fail(ErrorKind::NotNormalized, "pencils disagree at anchor " + to_string(anchor));
  require(a.params[0] == 0 && a.params[1] == 1 && b.params[0] == 0 && b.params[1] == 1, ErrorKind::NotNormalized,
          "pencils must carry t_1 = 0 and t_2 = 1");
  for (std::size_t i = 2; i < a.params.size(); ++i)
    if (eval_curve(ca, ProjParam(a.params[i])) != eval_curve(cb, ProjParam(b.params[i])))
      fail(ErrorKind::NotNormalized, "pencils interpolate different F_" + std::to_string(i + 1));

  ImageComparison out;
  out.lemma_equal = a.params == b.params;

  // 2q + 3 sample parameters with q = 1, avoiding every interpolation parameter.
  std::vector<Scalar> samples;
  for (long k = 1; samples.size() < 5; ++k) {
    Scalar s(Scalar(k * 7 + 3) / 5);
    const bool used = std::find(a.params.begin(), a.params.end(), s) != a.params.end() ||
                      std::find(b.params.begin(), b.params.end(), s) != b.params.end();
    if (!used) samples.push_back(s);
  }
  out.sampled_equal = true;
  for (const auto& s : samples) {
    if (!curve_contains(cb, eval_curve(ca, ProjParam(s))) || !curve_contains(ca, eval_curve(cb, ProjParam(s)))) {
      out.sampled_equal = false;
      break;
    }
  }
  return out;
}

inline bool pencil_images_equal(const Pencil& a, const Pencil& b) {
  const ImageComparison cmp = compare_pencil_images(a, b);
  if (cmp.lemma_equal != cmp.sampled_equal)
    throw std::logic_error("parameter criterion and sampled membership disagree on pencil images");
  return cmp.lemma_equal;
}

/// Curve through spaces[i] at params[i] for arbitrary distinct projective parameters.
inline GrassCurve interpolate_pencil_at(const std::vector<Subspace>& spaces, const std::vector<ProjParam>& params) {
  require(params.size() == spaces.size() && params.size() >= 3, ErrorKind::DimensionMismatch,
          "need one parameter per subspace and at least three subspaces");
  require_distinct(params);
  const std::size_t p = params.size() - 1;
  const MobiusMap to_internal =
      mobius_three_point(params[0], params[1], params[p], ProjParam(0), ProjParam(1), ProjParam::infinity());
  std::vector<Scalar> internal;
  for (std::size_t i = 0; i < p; ++i) internal.push_back(to_internal(params[i]).value());
  return mobius_reparam(to_internal, pencil_curve(pencil_interpolate(spaces, internal)));
}

/// Curve of N-dimensional subspaces of Q^{pN} of degree p-1 through F_i at t_i and
/// F_{p+1} at infinity, built as the annihilator of the pencil through the F_i°:
/// generator j is sum_i prod_{l != i} (t_l - t) e_i^j in the basis dual to the
/// adapted basis of the annihilators.
inline GrassCurve veronese_interpolate(const std::vector<Subspace>& spaces, const std::vector<Scalar>& params) {
  require(params.size() + 1 == spaces.size() && !params.empty(), ErrorKind::DimensionMismatch,
          "expected p parameters for p+1 subspaces");
  std::vector<ProjParam> as_proj(params.begin(), params.end());
  require_distinct(as_proj);
  const std::size_t p = params.size();
  const std::size_t n = spaces[0].ambient_dim();
  require(n % p == 0, ErrorKind::DimensionMismatch, "ambient dimension is not a multiple of p");
  const std::size_t big_n = n / p;
  std::vector<Subspace> dual;
  for (const auto& f : spaces) {
    require(f.ambient_dim() == n && f.dim() == big_n, ErrorKind::DimensionMismatch,
            "Veronese interpolation needs N-dimensional subspaces of Q^{pN}");
    dual.push_back(annihilator(f));
  }
  const AdaptedBasis covectors = adapted_basis(dual, big_n);
  const QMatrix dual_frame = inverse(covectors.frame.transpose());
  std::vector<UniPoly> weights;
  for (std::size_t i = 0; i < p; ++i) {
    UniPoly w(1);
    for (std::size_t l = 0; l < p; ++l)
      if (l != i) w *= UniPoly::linear(params[l], -1);
    weights.push_back(std::move(w));
  }
  std::vector<PolyVector> gens;
  for (std::size_t j = 0; j < big_n; ++j) {
    PolyVector g(n);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& e = dual_frame(k, covectors.index(i, j));
        if (!is_zero(e)) g[k] += UniPoly(e) * weights[i];
      }
    gens.push_back(std::move(g));
  }
  return GrassCurve(n, std::move(gens), p - 1);
}

/// For a single-generator curve: do the coefficient vectors v_0..v_q form a basis?
inline bool is_veronese_curve(const GrassCurve& curve) {
  require(curve.generator_count() == 1, ErrorKind::NotCodimOne, "Veronese test needs exactly one generator");
  const std::size_t n = curve.ambient_dim(), q = curve.degree();
  if (q + 1 != n) return false;
  QMatrix coeffs(q + 1, n);
  for (std::size_t k = 0; k <= q; ++k)
    for (std::size_t e = 0; e < n; ++e) coeffs(k, e) = curve.generators()[0][e].coeff(k);
  return rank(coeffs) == n;
}

/// Symmetric Q != 0 with g(t)^T Q g(t) == 0 identically, for a degree-2 curve of
/// lines in Q^3; first nonzero entry (row-major) normalized to 1.
inline QMatrix conic_form(const GrassCurve& curve) {
  require(curve.ambient_dim() == 3 && curve.generator_count() == 1 && curve.degree() == 2,
          ErrorKind::DimensionMismatch, "conic needs one degree-2 generator in Q^3");
  const PolyVector& g = curve.generators()[0];
  constexpr std::size_t pairs[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  QMatrix system(5, 6);
  for (std::size_t u = 0; u < 6; ++u) {
    const auto [a, b] = pairs[u];
    UniPoly term = g[a] * g[b];
    if (a != b) term *= UniPoly(2);
    for (std::size_t k = 0; k < 5; ++k) system(k, u) = term.coeff(k);
  }
  const QMatrix ker = kernel(system);
  if (ker.rows() == 0) fail(ErrorKind::NoConic, "only the zero quadratic form vanishes on the curve");
  const QMatrix canon = canonicalize(ker).basis();
  QMatrix q(3, 3);
  for (std::size_t u = 0; u < 6; ++u) {
    const auto [a, b] = pairs[u];
    q(a, b) = canon(0, u);
    q(b, a) = canon(0, u);
  }
  Scalar lead = 0;
  for (std::size_t a = 0; a < 3 && is_zero(lead); ++a)
    for (std::size_t b = 0; b < 3 && is_zero(lead); ++b) lead = q(a, b);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) q(a, b) /= lead;
  return q;
}

}  // namespace verona
