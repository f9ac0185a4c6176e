#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "verona/error.hpp"
#include "verona/matrix.hpp"

namespace verona {

/// A k x k minor of a k x n matrix: chosen columns (increasing) and its value.
template <class T>
struct Minor {
  std::vector<std::size_t> columns;
  T value;
};

/// All maximal minors of a k x n matrix (k <= n <= 63) over a commutative ring.
/// Division-free: Laplace expansion along the last row, memoized over column
/// subsets, so the cost is about sum_r C(n, r) * r ring multiplications.
/// Results are ordered by the bitmask of their column set.
template <class T>
std::vector<Minor<T>> maximal_minors(const Matrix<T>& m) {
  const std::size_t k = m.rows(), n = m.cols();
  require(k <= n && n < 64, ErrorKind::DimensionMismatch, "maximal minors need rows <= cols < 64");
  using Mask = std::uint64_t;
  std::unordered_map<Mask, T> level{{Mask{0}, T(1)}};
  for (std::size_t r = 0; r < k; ++r) {
    std::unordered_map<Mask, T> next;
    for (const auto& [mask, sub] : level) {
      if (sub == T{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (Mask{1} << j)) continue;
        const T& entry = m(r, j);
        if (entry == T{}) continue;
        const Mask grown = mask | (Mask{1} << j);
        // Position of column j inside the grown subset decides the cofactor sign.
        const auto pos = static_cast<std::size_t>(std::popcount(mask & ((Mask{1} << j) - 1)));
        T term = entry * sub;
        if ((r + pos) % 2 == 1) term = -term;
        next[grown] += term;
      }
    }
    level = std::move(next);
  }
  std::vector<std::pair<Mask, T>> sorted;
  for (auto& [mask, value] : level)
    if (!(value == T{})) sorted.emplace_back(mask, std::move(value));
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Minor<T>> out;
  out.reserve(sorted.size());
  for (auto& [mask, value] : sorted) {
    Minor<T> minor;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (Mask{1} << j)) minor.columns.push_back(j);
    minor.value = std::move(value);
    out.push_back(std::move(minor));
  }
  return out;
}

/// Determinant over a commutative ring (no division).
template <class T>
T ring_determinant(const Matrix<T>& m) {
  require(m.square(), ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  if (m.rows() == 0) return T(1);
  auto minors = maximal_minors(m);
  return minors.empty() ? T{} : minors.front().value;
}

/// Adjugate (transpose of the cofactor matrix) over a commutative ring.
template <class T>
Matrix<T> adjugate(const Matrix<T>& m) {
  require(m.square(), ErrorKind::DimensionMismatch, "adjugate of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> adj(n, n);
  if (n == 1) {
    adj(0, 0) = T(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> keep_rows;
    for (std::size_t r = 0; r < n; ++r)
      if (r != i) keep_rows.push_back(r);
    // All (n-1)-minors with row i removed, one per dropped column.
    const auto minors = maximal_minors(m.select_rows(keep_rows));
    for (const auto& minor : minors) {
      std::size_t dropped = 0;
      while (dropped < minor.columns.size() && minor.columns[dropped] == dropped) ++dropped;
      T value = minor.value;
      if ((i + dropped) % 2 == 1) value = -value;
      adj(dropped, i) = std::move(value);
    }
  }
  return adj;
}

}  // namespace verona
