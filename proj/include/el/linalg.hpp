#pragma once

#include <vector>

#include "el/field.hpp"

namespace el {

/// Dense row-major matrix over a field.
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix from_rows(const F& field, const std::vector<std::vector<Element>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw InvalidInput("ragged matrix");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return field_; }
  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Element> row(std::size_t i) const {
    return std::vector<Element>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InvalidInput("matrix shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (field_.is_zero((*this)(i, k))) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          out(i, j) = field_.add(out(i, j), field_.mul((*this)(i, k), o(k, j)));
      }
    return out;
  }

  std::vector<Element> apply(const std::vector<Element>& v) const {
    if (v.size() != cols_) throw InvalidInput("vector length mismatch");
    std::vector<Element> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && field_.is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      Element inv = field_.inv((*this)(r, c));
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = field_.mul((*this)(r, j), inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || field_.is_zero((*this)(i, c))) continue;
        Element f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          (*this)(i, j) = field_.sub_mul((*this)(i, j), f, (*this)(r, j));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Element> data_;
};

template <class F>
std::size_t rank(Matrix<F> m) {
  return m.rref().size();
}

/// Right null space basis, together with the rank.
template <class F>
struct KernelResult {
  std::vector<std::vector<typename F::Element>> basis;
  std::size_t rank = 0;
};

template <class F>
KernelResult<F> kernel_basis(Matrix<F> m) {
  const auto& K = m.field();
  auto pivots = m.rref();
  KernelResult<F> out;
  out.rank = pivots.size();
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : pivots) is_pivot[c] = 1;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Element> v(m.cols(), K.zero());
    v[free] = K.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = K.neg(m(r, free));
    out.basis.push_back(std::move(v));
  }
  return out;
}

template <class F>
typename F::Element determinant(Matrix<F> m) {
  const auto& K = m.field();
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  typename F::Element det = K.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && K.is_zero(m(p, c))) ++p;
    if (p == n) return K.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = K.neg(det);
    }
    det = K.mul(det, m(c, c));
    auto inv = K.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (K.is_zero(m(i, c))) continue;
      auto f = K.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = K.sub_mul(m(i, j), f, m(c, j));
    }
  }
  return det;
}

/// Inverse of a square matrix; throws if singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  const auto& K = m.field();
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InvalidInput("inverse of a non-square matrix");
  Matrix<F> aug(K, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K.one();
  }
  auto piv = aug.rref();
  if (piv.size() < n || piv[n - 1] != n - 1) throw InvalidInput("matrix is singular");
  Matrix<F> out(K, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

/// Random matrix whose first rows are `fixed` and whose remaining rows complete it to an
/// invertible square matrix.
template <class F>
Matrix<F> complete_to_invertible(const F& K, const std::vector<std::vector<typename F::Element>>& fixed,
                                 std::size_t n, Rng& rng) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    Matrix<F> m(K, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = i < fixed.size() ? fixed[i][j] : K.random(rng);
    if (!K.is_zero(determinant(m))) return m;
  }
  throw GenericityFailure("could not complete rows to an invertible matrix");
}

}  // namespace el
