#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "verona/calculus.hpp"
#include "verona/exact_linalg.hpp"
#include "verona/projective.hpp"
#include "verona/unipoly.hpp"

namespace verona {

/// Veronese web of codimension c on Q^{pc}: F_t is cut out by
/// alpha^i_t = sum_j t^j gamma^i_j, with coframe[i][j] = gamma^i_j.
struct VeroneseWebSpec {
  std::size_t p = 0;
  std::size_t c = 0;
  std::vector<std::vector<PolyForm>> coframe;

  std::size_t dim() const noexcept { return p * c; }

  void validate() const {
    require(p >= 1 && c >= 1, ErrorKind::ValidationError, "web needs p >= 1 and c >= 1");
    require(coframe.size() == c, ErrorKind::DimensionMismatch, "coframe needs c rows");
    for (const auto& row : coframe) {
      require(row.size() == p, ErrorKind::DimensionMismatch, "coframe rows need p forms");
      for (const auto& f : row)
        require(f.degree() == 1 && f.dim() == dim(), ErrorKind::DimensionMismatch, "coframe entries are 1-forms on Q^{pc}");
    }
  }
};

/// Rows gamma^1_0 .. gamma^1_{p-1}, gamma^2_0, ... as coefficient vectors.
inline Matrix<MultiPoly> coframe_matrix(const VeroneseWebSpec& web) {
  web.validate();
  const std::size_t n = web.dim();
  Matrix<MultiPoly> out(n, n);
  for (std::size_t i = 0; i < web.c; ++i)
    for (std::size_t j = 0; j < web.p; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i * web.p + j, k) = web.coframe[i][j].coefficient({k});
  return out;
}

inline std::vector<PolyForm> web_alpha(const VeroneseWebSpec& web, const Scalar& t) {
  web.validate();
  std::vector<PolyForm> out;
  for (const auto& row : web.coframe) {
    PolyForm alpha(web.dim(), 1);
    Scalar power = 1;
    for (const auto& gamma : row) {
      alpha += MultiPoly(power) * gamma;
      power *= t;
    }
    out.push_back(std::move(alpha));
  }
  return out;
}

/// alpha^i_t with t kept symbolic as the variable right after the chart coordinates.
inline std::vector<PolyForm> web_alpha_symbolic(const VeroneseWebSpec& web) {
  web.validate();
  const MultiPoly t = MultiPoly::variable(web.dim());
  std::vector<PolyForm> out;
  for (const auto& row : web.coframe) {
    PolyForm alpha(web.dim(), 1);
    MultiPoly power(1);
    for (const auto& gamma : row) {
      alpha += power * gamma;
      power *= t;
    }
    out.push_back(std::move(alpha));
  }
  return out;
}

/// det of the rows (1, t_i, ..., t_i^{p-1}), computed by elimination.
inline Scalar vdm_det(const std::vector<Scalar>& ts) {
  const std::size_t p = ts.size();
  QMatrix m(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    Scalar power = 1;
    for (std::size_t j = 0; j < p; ++j) {
      m(i, j) = power;
      power *= ts[i];
    }
  }
  return determinant(m);
}

struct SampledWeb {
  std::vector<Subspace> leaves;
  bool general_position = false;
};

/// Contact elements F_t(m) for each parameter; at infinity the form is gamma^i_{p-1}.
inline SampledWeb sample_web(const VeroneseWebSpec& web, const std::vector<ProjParam>& params,
                             const QVector& point) {
  web.validate();
  const std::size_t n = web.dim();
  require(params.size() == web.p + 1, ErrorKind::DimensionMismatch, "sample_web needs p+1 parameters");
  require(point.size() == n, ErrorKind::DimensionMismatch, "chart point has wrong dimension");
  require_distinct(params);
  const QMatrix frame = operator_at(coframe_matrix(web), point);
  if (rank(frame) != n) fail(ErrorKind::CoframeDegenerate, "coframe is not a basis at the sample point");
  SampledWeb out;
  for (const auto& s : params) {
    QMatrix covectors(web.c, n);
    for (std::size_t i = 0; i < web.c; ++i) {
      Scalar power = 1;
      for (std::size_t j = 0; j < web.p; ++j) {
        const bool take = s.is_finite() || j + 1 == web.p;
        if (take) {
          const Scalar weight = s.is_finite() ? power : Scalar(1);
          for (std::size_t k = 0; k < n; ++k) covectors(i, k) += weight * frame(i * web.p + j, k);
        }
        if (s.is_finite()) power *= s.value();
      }
    }
    out.leaves.push_back(annihilator(canonicalize(covectors)));
  }
  out.general_position = check_general_position(out.leaves, web.c);
  return out;
}

/// Constant bivectors Pi_0, Pi_inf on Q^{2p-1} stored as antisymmetric matrices;
/// a wedge a^b is a b^T - b a^T and acts on covectors by matrix-vector product.
struct BivectorPencil {
  std::size_t dim = 0;
  QMatrix pi0;
  QMatrix pi_inf;

  QMatrix at(const Scalar& t) const { return pi0 + pi_inf * t; }
};

inline bool is_antisymmetric(const QMatrix& m) { return m.square() && m == m.transpose() * Scalar(-1); }

namespace detail {
inline void add_wedge(QMatrix& m, std::size_t a, std::size_t b) {
  m(a, b) += 1;
  m(b, a) -= 1;
}
}  // namespace detail

struct GzModel {
  BivectorPencil pencil;
  VeroneseWebSpec web;
};

/// Basis order e_1..e_p, f_1..f_{p-1}. Pi_0 = sum e_k ^ f_k, Pi_inf = sum f_k ^ e_{k+1};
/// the transversal web has constant coframe gamma_j = dx_{p-j}.
inline GzModel gz_local_model(std::size_t p) {
  require(p >= 2, ErrorKind::ValidationError, "local model needs p >= 2");
  const std::size_t dim = 2 * p - 1;
  GzModel out;
  out.pencil.dim = dim;
  out.pencil.pi0 = QMatrix(dim, dim);
  out.pencil.pi_inf = QMatrix(dim, dim);
  for (std::size_t k = 0; k + 1 < p; ++k) {
    detail::add_wedge(out.pencil.pi0, k, p + k);
    detail::add_wedge(out.pencil.pi_inf, p + k, k + 1);
  }
  out.web.p = p;
  out.web.c = 1;
  out.web.coframe.resize(1);
  for (std::size_t j = 0; j < p; ++j) out.web.coframe[0].push_back(PolyForm::basis(p, {p - 1 - j}));
  return out;
}

/// beta_t = e_p* + t e_{p-1}* + ... + t^{p-1} e_1* on Q^{2p-1}.
inline std::vector<UniPoly> gz_beta(std::size_t p) {
  std::vector<UniPoly> beta(2 * p - 1);
  for (std::size_t k = 0; k < p; ++k) {
    std::vector<Scalar> coeffs(p - k);
    coeffs.back() = 1;
    beta[k] = UniPoly(std::move(coeffs));
  }
  return beta;
}

/// (Pi_0 + t Pi_inf) applied to a covector whose entries are polynomials in t.
inline std::vector<UniPoly> contract(const BivectorPencil& pencil, const std::vector<UniPoly>& covector) {
  require(covector.size() == pencil.dim, ErrorKind::DimensionMismatch, "covector length differs from pencil dimension");
  std::vector<UniPoly> out(pencil.dim);
  for (std::size_t a = 0; a < pencil.dim; ++a)
    for (std::size_t b = 0; b < pencil.dim; ++b) {
      const UniPoly entry = UniPoly::linear(pencil.pi0(a, b), pencil.pi_inf(a, b));
      if (!entry.is_zero()) out[a] += entry * covector[b];
    }
  return out;
}

/// Kernel of Pi_t as a subspace of covectors; Pi_t must have rank dim - 1.
inline Subspace pencil_kernel(const BivectorPencil& pencil, const Scalar& t) {
  const QMatrix m = pencil.at(t);
  if (rank(m) + 1 != pencil.dim)
    fail(ErrorKind::RankDrop, "Pi_t has rank " + std::to_string(rank(m)) + " at t = " + to_string(t));
  return canonicalize(kernel(m));
}

}  // namespace verona
