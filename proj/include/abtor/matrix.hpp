#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "abtor/error.hpp"
#include "abtor/laurent.hpp"

namespace abtor {

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

/// Product of matrices over any ring. `zero` seeds the accumulators.
template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.cols() != b.rows()) fail(Errc::ArityMismatch, "matrix shapes do not chain");
  Matrix<T> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
  return out;
}

// ---------------------------------------------------------------------------
// Linear algebra over an exact field.

template <class Field>
struct RowEchelon {
  Matrix<typename Field::value_type> reduced;
  std::vector<std::size_t> pivot_cols;  // first pivot column of each row
};

/// Reduced row echelon form with first-nonzero pivoting.
template <class Field>
RowEchelon<Field> row_echelon(const Field& f,
                              Matrix<typename Field::value_type> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    auto inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = m(r, c) - factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  (void)f;
  return {std::move(m), std::move(pivots)};
}

template <class Field>
std::size_t rank(const Field& f, const Matrix<typename Field::value_type>& m) {
  return row_echelon(f, m).pivot_cols.size();
}

/// Indices of the first maximal linearly independent set of columns.
template <class Field>
std::vector<std::size_t> independent_columns(
    const Field& f, const Matrix<typename Field::value_type>& m) {
  return row_echelon(f, m).pivot_cols;
}

template <class Field>
typename Field::value_type determinant(const Field& f,
                                       Matrix<typename Field::value_type> m) {
  if (m.rows() != m.cols()) fail(Errc::ArityMismatch, "determinant of non-square matrix");
  auto det = f.one();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return f.zero();
    if (p != col) {
      m.swap_rows(p, col);
      det = -det;
    }
    det = det * m(col, col);
    auto inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      auto factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) = m(r, c) - factor * m(col, c);
    }
  }
  return det;
}

/// Some x with m x = b, if one exists.
template <class Field>
std::optional<std::vector<typename Field::value_type>> solve(
    const Field& f, const Matrix<typename Field::value_type>& m,
    const std::vector<typename Field::value_type>& b) {
  using E = typename Field::value_type;
  if (b.size() != m.rows()) fail(Errc::ArityMismatch, "right-hand side has wrong length");
  Matrix<E> aug(m.rows(), m.cols() + 1, f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto ech = row_echelon(f, std::move(aug));
  std::vector<E> x(m.cols(), f.zero());
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    std::size_t pc = ech.pivot_cols[r];
    if (pc == m.cols()) return std::nullopt;
    x[pc] = ech.reduced(r, m.cols());
  }
  return x;
}

// ---------------------------------------------------------------------------
// Determinants over the integral domain Z[Z^b].

/// Laplace expansion along the first row.
MultiLaurent determinant_cofactor(const Matrix<MultiLaurent>& m,
                                  std::size_t vars);
/// Bareiss fraction-free elimination; every division is exact.
MultiLaurent determinant_bareiss(Matrix<MultiLaurent> m, std::size_t vars);
/// Cofactor expansion up to size 5, Bareiss above. The 0x0 determinant is 1.
MultiLaurent det_over_domain(const Matrix<MultiLaurent>& m, std::size_t vars);

}  // namespace abtor
