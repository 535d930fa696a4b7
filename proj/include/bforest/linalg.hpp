#pragma once

// Kirchhoff ground truth: Laplacian of the realization and an exact
// fraction-free (Bareiss) determinant of its reduced form.

#include <cstddef>
#include <utility>
#include <vector>

#include "bforest/model.hpp"
#include "bforest/numeric.hpp"

namespace bforest {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Integer(0)) {}

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  /// Copy with row `r` and column `c` removed.
  IntegerMatrix minor(std::size_t r, std::size_t c) const {
    IntegerMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == c) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

/// L = D - A.
inline IntegerMatrix laplacian(const GraphRealization& g) {
  const std::size_t v = g.vertex_count();
  IntegerMatrix l(v, v);
  for (std::size_t i = 0; i < v; ++i) {
    long deg = 0;
    for (std::size_t j = 0; j < v; ++j) {
      if (i != j && g.adjacent(i, j)) {
        l(i, j) = -1;
        ++deg;
      }
    }
    l(i, i) = deg;
  }
  return l;
}

/// Bareiss one-step elimination. Pivot: first nonzero entry in the column.
/// Every division is exact; a remainder means a bug, not bad input.
inline Integer det_fraction_free(IntegerMatrix m) {
  if (m.rows() != m.cols()) throw Error(Errc::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    const Integer pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * pivot - m(i, k) * m(k, j);
        m(i, j) = exact_quotient(num, prev);
      }
      m(i, k) = 0;
    }
    prev = pivot;
  }
  return sign > 0 ? m(n - 1, n - 1) : Integer(-m(n - 1, n - 1));
}

/// Number of spanning trees: the cofactor obtained by deleting the last row
/// and column of the Laplacian. Zero exactly when g is disconnected.
inline Integer tree_count_oracle(const GraphRealization& g) {
  const std::size_t v = g.vertex_count();
  if (v <= 1) return 1;
  return det_fraction_free(laplacian(g).minor(v - 1, v - 1));
}

}  // namespace bforest
