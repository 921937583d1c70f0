#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gaudin/poly.hpp"

namespace gaudin {

template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  S& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const S& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    x.check_same_shape(y);
    Matrix r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    x.check_same_shape(y);
    Matrix r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
  }
  friend Matrix operator*(const S& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.a_) x = s * x;
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t k = 0; k < x.cols_; ++k) {
        const S& xik = x.at(i, k);
        using gaudin::is_zero;
        if (is_zero(xik)) continue;
        for (size_t j = 0; j < y.cols_; ++j) r.at(i, j) += xik * y.at(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  std::vector<S> col(size_t j) const {
    std::vector<S> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  Matrix select_columns(const std::vector<size_t>& js) const {
    Matrix r(rows_, js.size());
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < js.size(); ++j) r.at(i, j) = at(i, js[j]);
    return r;
  }

  bool all_zero() const {
    using gaudin::is_zero;
    for (const auto& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }

 private:
  void check_same_shape(const Matrix& y) const {
    if (rows_ != y.rows_ || cols_ != y.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
  }

  size_t rows_, cols_;
  std::vector<S> a_;
};

// Determinant over any commutative ring: dynamic programming over column
// subsets (no division), O(2^n * n). Sizes here are <= ~8.
template <class S>
S determinant(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square");
  size_t n = m.rows();
  if (n == 0) return S(1);
  if (n > 20) throw std::invalid_argument("determinant: size too large for subset expansion");
  std::vector<S> f(size_t(1) << n);
  f[0] = S(1);
  for (size_t mask = 1; mask < f.size(); ++mask) {
    size_t row = static_cast<size_t>(__builtin_popcountll(mask)) - 1;
    S acc;
    int pos = 0;  // index of column j within the mask; cofactor sign is (-1)^(row+pos)
    for (size_t j = 0; j < n; ++j) {
      if (!(mask & (size_t(1) << j))) continue;
      S term = m.at(row, j) * f[mask ^ (size_t(1) << j)];
      if ((row + static_cast<size_t>(pos)) % 2 == 1) term = -term;
      acc += term;
      ++pos;
    }
    f[mask] = std::move(acc);
  }
  return f.back();
}

// Exact nullspace over the rationals, reduced echelon (canonical) basis:
// one vector per free column, with value 1 at that free column.
inline std::vector<std::vector<Rat>> nullspace_exact(const Matrix<Rat>& m) {
  size_t rows = m.rows(), cols = m.cols();
  Matrix<Rat> a = m;
  std::vector<long> pivot_of_row(rows, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && is_zero(a.at(p, c))) ++p;
    if (p == rows) continue;
    for (size_t j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
    Rat inv = 1 / a.at(r, c);
    for (size_t j = 0; j < cols; ++j) a.at(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a.at(i, c))) continue;
      Rat f = a.at(i, c);
      for (size_t j = 0; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivot_of_row[r] = static_cast<long>(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t i = 0; i < r; ++i) is_pivot[static_cast<size_t>(pivot_of_row[i])] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols);
    v[c] = 1;
    for (size_t i = 0; i < r; ++i)
      v[static_cast<size_t>(pivot_of_row[i])] = -a.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Matrix<BigComplex> promote(const Matrix<Rat>& m, mpfr_prec_t prec = 0) {
  Matrix<BigComplex> r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = BigComplex::from_rat(m.at(i, j), prec);
  return r;
}

}  // namespace gaudin
