#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "verona/error.hpp"
#include "verona/matrix.hpp"
#include "verona/scalar.hpp"

namespace verona {

using QMatrix = Matrix<Scalar>;
using QVector = std::vector<Scalar>;

/// Reduced row-echelon form with zero rows removed.
struct Echelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

inline Echelon row_reduce(const QMatrix& input) {
  QMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pick = r;
    while (pick < rows && is_zero(m(pick, col))) ++pick;
    if (pick == rows) continue;
    if (pick != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pick, j), m(r, j));
    const Scalar inv = 1 / m(r, col);
    for (std::size_t j = col; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, col))) continue;
      const Scalar f = m(i, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  QMatrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

namespace detail {
/// Rank of m reduced modulo the prime 2^31 - 1, or nullopt if a denominator vanishes there.
/// Never exceeds the rank over Q.
inline std::optional<std::size_t> modular_rank(const QMatrix& m) {
  constexpr std::uint64_t prime = 2147483647;
  auto reduce = [&](const mpz_class& z) { return mpz_fdiv_ui(z.get_mpz_t(), prime); };
  auto power = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t acc = 1;
    for (; e > 0; e >>= 1, b = b * b % prime)
      if (e & 1) acc = acc * b % prime;
    return acc;
  };
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Scalar& x = m(i, j);
      const std::uint64_t den = reduce(x.get_den());
      if (den == 0) return std::nullopt;
      a[i * cols + j] = reduce(x.get_num()) * power(den, prime - 2) % prime;
    }
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pick = r;
    while (pick < rows && a[pick * cols + col] == 0) ++pick;
    if (pick == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a[pick * cols + j], a[r * cols + j]);
    const std::uint64_t inv = power(a[r * cols + col], prime - 2);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = a[i * cols + col] * inv % prime;
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j)
        a[i * cols + j] = (a[i * cols + j] + (prime - f) * a[r * cols + j]) % prime;
    }
    ++r;
  }
  return r;
}
}  // namespace detail

inline std::size_t rank(const QMatrix& m) {
  // A full rank modulo a prime certifies full rank over Q.
  if (auto r = detail::modular_rank(m); r && *r == std::min(m.rows(), m.cols())) return *r;
  return row_reduce(m).pivots.size();
}

/// Basis (as rows) of { x : m x = 0 }, one vector per free column.
inline QMatrix kernel(const QMatrix& m) {
  const Echelon e = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  QMatrix out(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    out.append_row(v);
  }
  return out;
}

inline Scalar determinant(const QMatrix& input) {
  require(input.square(), ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  QMatrix m = input;
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && is_zero(m(pick, col))) ++pick;
    if (pick == n) return 0;
    if (pick != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pick, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = 1 / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      const Scalar f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

inline std::optional<QMatrix> try_inverse(const QMatrix& m) {
  require(m.square(), ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

inline QMatrix inverse(const QMatrix& m) {
  auto inv = try_inverse(m);
  if (!inv) fail(ErrorKind::SingularOperator, "matrix is not invertible");
  return *inv;
}

/// Linear subspace of Q^n stored as the RREF of a spanning set.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, QMatrix(0, ambient)); }
  static Subspace full(std::size_t ambient) { return Subspace(ambient, QMatrix::identity(ambient)); }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t codim() const noexcept { return ambient_ - basis_.rows(); }
  const QMatrix& basis() const noexcept { return basis_; }
  QVector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  bool contains(const QVector& v) const {
    require(v.size() == ambient_, ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
    QMatrix stacked = basis_;
    stacked.append_row(v);
    return rank(stacked) == dim();
  }

  bool contains(const Subspace& other) const {
    require(other.ambient_ == ambient_, ErrorKind::DimensionMismatch, "subspaces live in different ambients");
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  friend Subspace canonicalize(const QMatrix& rows);
  Subspace(std::size_t ambient, QMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  QMatrix basis_;
};

inline Subspace canonicalize(const QMatrix& rows) {
  require(rows.cols() > 0, ErrorKind::EmptyAmbient, "spanning rows have length 0");
  return Subspace(rows.cols(), row_reduce(rows).reduced);
}

inline Subspace span_of(const std::vector<QVector>& vectors, std::size_t ambient) {
  return canonicalize(QMatrix::from_rows(vectors, ambient));
}

/// Covectors vanishing on `f`, written in the dual coordinates of the same basis.
inline Subspace annihilator(const Subspace& f) {
  if (f.dim() == 0) return Subspace::full(f.ambient_dim());
  return canonicalize(kernel(f.basis()));
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), ErrorKind::DimensionMismatch, "sum of subspaces in different ambients");
  QMatrix stacked = a.basis();
  for (std::size_t i = 0; i < b.dim(); ++i) stacked.append_row(b.basis().row(i));
  if (stacked.rows() == 0) return Subspace::zero(a.ambient_dim());
  return canonicalize(stacked);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), ErrorKind::DimensionMismatch,
          "intersection of subspaces in different ambients");
  return annihilator(sum(annihilator(a), annihilator(b)));
}

inline Subspace intersect_all(const std::vector<Subspace>& list) {
  require(!list.empty(), ErrorKind::DimensionMismatch, "intersection of an empty list");
  Subspace acc = annihilator(list.front());
  for (std::size_t i = 1; i < list.size(); ++i) acc = sum(acc, annihilator(list[i]));
  return annihilator(acc);
}

/// Image of `s` under the linear map `m` (acting on column vectors).
inline Subspace image(const QMatrix& m, const Subspace& s) {
  require(m.cols() == s.ambient_dim(), ErrorKind::DimensionMismatch, "map and subspace dimensions differ");
  if (s.dim() == 0) return Subspace::zero(m.rows());
  return canonicalize((m * s.basis().transpose()).transpose());
}

/// Whether m maps source onto target, checked without reducing the image:
/// the annihilator of target kills m(source) and the image has full dimension.
inline bool maps_onto(const QMatrix& m, const Subspace& source, const Subspace& target) {
  require(m.cols() == source.ambient_dim() && m.rows() == target.ambient_dim(), ErrorKind::DimensionMismatch,
          "map and subspace dimensions differ");
  if (source.dim() < target.dim()) return false;
  const QMatrix pushed = m * source.basis().transpose();
  const Subspace ann = annihilator(target);
  if (ann.dim() > 0 && ann.basis() * pushed != QMatrix(ann.dim(), pushed.cols())) return false;
  return rank(pushed) == target.dim();
}

/// The (p+1)-web condition: every p of the p+1 codimension-c subspaces meet in {0}.
inline bool check_general_position(const std::vector<Subspace>& list, std::size_t c) {
  require(c > 0, ErrorKind::DimensionMismatch, "codimension must be positive");
  require(list.size() >= 2, ErrorKind::DimensionMismatch, "need at least two subspaces");
  const std::size_t p = list.size() - 1;
  for (const auto& f : list) {
    if (f.ambient_dim() != p * c || f.codim() != c)
      fail(ErrorKind::DimensionMismatch, "expected codimension " + std::to_string(c) + " in dimension " +
                                             std::to_string(p * c) + ", got dimension " + std::to_string(f.dim()) +
                                             " in " + std::to_string(f.ambient_dim()));
  }
  std::vector<Subspace> annihilators;
  annihilators.reserve(list.size());
  for (const auto& f : list) annihilators.push_back(annihilator(f));
  for (std::size_t skip = 0; skip < list.size(); ++skip) {
    QMatrix stacked(0, p * c);
    for (std::size_t j = 0; j < list.size(); ++j)
      if (j != skip)
        for (std::size_t r = 0; r < annihilators[j].dim(); ++r) stacked.append_row(annihilators[j].basis().row(r));
    if (rank(stacked) != p * c) return false;
  }
  return true;
}

}  // namespace verona
