#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "verona/exact_linalg.hpp"
#include "verona/matrix.hpp"
#include "verona/multipoly.hpp"

namespace verona {

/// Vector field on the chart Q^n with polynomial components. Components may also
/// depend on variables past n (parameters); those are never differentiated.
struct PolyVectorField {
  std::vector<MultiPoly> components;

  PolyVectorField() = default;
  explicit PolyVectorField(std::size_t n) : components(n) {}
  explicit PolyVectorField(std::vector<MultiPoly> comps) : components(std::move(comps)) {}

  static PolyVectorField coordinate(std::size_t n, std::size_t k) {
    PolyVectorField out(n);
    out.components[k] = MultiPoly(1);
    return out;
  }
  static PolyVectorField constant(const QVector& v) {
    PolyVectorField out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out.components[k] = MultiPoly(v[k]);
    return out;
  }

  std::size_t dim() const noexcept { return components.size(); }
  MultiPoly& operator[](std::size_t k) { return components[k]; }
  const MultiPoly& operator[](std::size_t k) const { return components[k]; }
  bool is_zero() const {
    return std::all_of(components.begin(), components.end(), [](const MultiPoly& p) { return p.is_zero(); });
  }

  PolyVectorField& operator+=(const PolyVectorField& o) {
    require(dim() == o.dim(), ErrorKind::DimensionMismatch, "vector fields of different dimension");
    for (std::size_t k = 0; k < dim(); ++k) components[k] += o.components[k];
    return *this;
  }
  PolyVectorField& operator-=(const PolyVectorField& o) {
    require(dim() == o.dim(), ErrorKind::DimensionMismatch, "vector fields of different dimension");
    for (std::size_t k = 0; k < dim(); ++k) components[k] -= o.components[k];
    return *this;
  }
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
  friend PolyVectorField operator*(const MultiPoly& f, PolyVectorField a) {
    for (auto& c : a.components) c = f * c;
    return a;
  }
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) { return a.components == b.components; }

  QVector at(std::span<const Scalar> point) const {
    QVector out;
    out.reserve(dim());
    for (const auto& c : components) out.push_back(c.evaluate(point));
    return out;
  }
};

/// X(f) = sum_l X^l d_l f over the chart coordinates.
inline MultiPoly directional_derivative(const PolyVectorField& x, const MultiPoly& f) {
  MultiPoly out;
  for (std::size_t l = 0; l < x.dim(); ++l)
    if (!x[l].is_zero()) out += x[l] * f.derivative(l);
  return out;
}

inline PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  require(x.dim() == y.dim(), ErrorKind::DimensionMismatch, "bracket of fields on different charts");
  PolyVectorField out(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k)
    out[k] = directional_derivative(x, y[k]) - directional_derivative(y, x[k]);
  return out;
}

/// n x n matrix of polynomials acting on vector fields: m -> G(m).
using OperatorField = Matrix<MultiPoly>;

inline OperatorField constant_operator(const QMatrix& m) {
  OperatorField out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = MultiPoly(m(i, j));
  return out;
}

inline PolyVectorField apply(const OperatorField& g, const PolyVectorField& x) {
  require(g.cols() == x.dim(), ErrorKind::DimensionMismatch, "operator and field dimensions differ");
  return PolyVectorField(g * x.components);
}

inline QMatrix operator_at(const OperatorField& g, std::span<const Scalar> point) {
  QMatrix out(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = g(i, j).evaluate(point);
  return out;
}

/// Differential k-form on Q^n: increasing index tuples mapped to nonzero coefficients.
class PolyForm {
 public:
  using Index = std::vector<std::size_t>;

  PolyForm() = default;
  PolyForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
    require(degree <= dim, ErrorKind::DimensionMismatch, "form degree exceeds chart dimension");
  }

  /// sum_k coeffs[k] dx_k
  static PolyForm one_form(const std::vector<MultiPoly>& coeffs) {
    PolyForm out(coeffs.size(), 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) out.add({k}, coeffs[k]);
    return out;
  }
  static PolyForm function(std::size_t dim, const MultiPoly& f) {
    PolyForm out(dim, 0);
    out.add({}, f);
    return out;
  }
  static PolyForm basis(std::size_t dim, Index index) {
    PolyForm out(dim, index.size());
    out.add(std::move(index), MultiPoly(1));
    return out;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::map<Index, MultiPoly>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  MultiPoly coefficient(const Index& index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? MultiPoly() : it->second;
  }

  /// Adds f dx_{index}, sorting the index and applying the permutation sign.
  void add(Index index, const MultiPoly& f) {
    require(index.size() == degree_, ErrorKind::DimensionMismatch, "index length differs from form degree");
    for (auto k : index) require(k < dim_, ErrorKind::DimensionMismatch, "form index outside the chart");
    bool negative = false;
    for (std::size_t i = 0; i < index.size(); ++i)
      for (std::size_t j = 0; j + 1 < index.size() - i; ++j)
        if (index[j] > index[j + 1]) {
          std::swap(index[j], index[j + 1]);
          negative = !negative;
        }
    if (std::adjacent_find(index.begin(), index.end()) != index.end() || f.is_zero()) return;
    MultiPoly& slot = coeffs_[index];
    if (negative) slot -= f;
    else slot += f;
    if (slot.is_zero()) coeffs_.erase(index);
  }

  PolyForm& operator+=(const PolyForm& o) {
    check_compatible(o);
    for (const auto& [idx, f] : o.coeffs_) add(idx, f);
    return *this;
  }
  PolyForm& operator-=(const PolyForm& o) {
    check_compatible(o);
    for (const auto& [idx, f] : o.coeffs_) add(idx, -f);
    return *this;
  }
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const MultiPoly& f, const PolyForm& a) {
    PolyForm out(a.dim_, a.degree_);
    for (const auto& [idx, g] : a.coeffs_) out.add(idx, f * g);
    return out;
  }
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_compatible(const PolyForm& o) const {
    require(dim_ == o.dim_ && degree_ == o.degree_, ErrorKind::DimensionMismatch, "forms of different type");
  }

  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::map<Index, MultiPoly> coeffs_;
};

inline PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  require(a.dim() == b.dim(), ErrorKind::DimensionMismatch, "wedge of forms on different charts");
  require(a.degree() + b.degree() <= a.dim(), ErrorKind::DimensionMismatch, "wedge degree exceeds chart dimension");
  PolyForm out(a.dim(), a.degree() + b.degree());
  for (const auto& [ia, fa] : a.coefficients())
    for (const auto& [ib, fb] : b.coefficients()) {
      PolyForm::Index idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add(std::move(idx), fa * fb);
    }
  return out;
}

/// d(f dx_I) = sum_l d_l f dx_l ^ dx_I over chart coordinates.
inline PolyForm exterior_derivative(const PolyForm& w) {
  require(w.degree() < w.dim(), ErrorKind::DimensionMismatch, "exterior derivative of a top-degree form");
  PolyForm out(w.dim(), w.degree() + 1);
  for (const auto& [idx, f] : w.coefficients())
    for (std::size_t l = 0; l < w.dim(); ++l) {
      PolyForm::Index grown{l};
      grown.insert(grown.end(), idx.begin(), idx.end());
      out.add(std::move(grown), f.derivative(l));
    }
  return out;
}

}  // namespace verona
