#ifndef BGG_MATRIX_HPP
#define BGG_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgg/field.hpp"

namespace bgg {

/// Dense matrix over an exact field. Linear maps act on column vectors,
/// so a map V -> W is stored as a (dim W) x (dim V) matrix and
/// composition is left multiplication.
template <class F>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const F& x : data_)
      if (!(x == F(0))) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }
  friend Matrix operator*(const F& c, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = c * a.data_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::logic_error("Matrix: shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a.at(i, k);
        if (aik == F(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }
  Matrix operator-() const { return F(-1) * *this; }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw std::logic_error("Matrix: shape mismatch in apply");
    std::vector<F> r(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Matrix submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    Matrix r(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) r.at(i - r0, j - c0) = at(i, j);
    return r;
  }

  std::vector<F> col(std::size_t j) const {
    std::vector<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  void set_col(std::size_t j, const std::vector<F>& v) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw std::logic_error("Matrix: hstack row mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw std::logic_error("Matrix: vstack column mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
  }

  /// Block diagonal sum.
  static Matrix dsum(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
  }

  static Matrix from_cols(std::size_t rows, const std::vector<std::vector<F>>& cols) {
    Matrix r(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) r.set_col(j, cols[j]);
    return r;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw std::logic_error("Matrix: shape mismatch");
  }
  std::size_t rows_, cols_;
  std::vector<F> data_;
};

template <class F>
struct Rref {
  Matrix<F> mat;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, ascending
};

/// Reduced row echelon form. Pivoting is deterministic: columns are
/// scanned left to right and the first nonzero entry at or below the
/// current row becomes the pivot.
template <class F>
Rref<F> rref(Matrix<F> a) {
  Rref<F> out;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a.at(sel, col) == F(0)) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(row, j));
    F inv = F(1) / a.at(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) = inv * a.at(row, j);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      F f = a.at(i, col);
      if (f == F(0)) continue;
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  out.mat = std::move(a);
  out.pivots = std::move(pivots);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
  return rref(a).pivots.size();
}

/// Basis of the null space, one column per free column of `a` in
/// ascending order, normalized with a 1 in the free coordinate.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& a) {
  Rref<F> r = rref(a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (std::size_t p : r.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix<F> k(a.cols(), free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t f = free_cols[fi];
    k.at(f, fi) = F(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      k.at(r.pivots[i], fi) = -r.mat.at(i, f);
  }
  return k;
}

/// One particular solution of A x = b, or nullopt.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  Matrix<F> bn(a.rows(), 1);
  for (std::size_t i = 0; i < a.rows(); ++i) bn.at(i, 0) = b[i];
  Rref<F> r = rref(Matrix<F>::hstack(a, bn));
  std::vector<F> x(a.cols(), F(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;
    x[r.pivots[i]] = r.mat.at(i, a.cols());
  }
  return x;
}

/// Columnwise solve A X = B, or nullopt if any column is inconsistent.
template <class F>
std::optional<Matrix<F>> solve_matrix(const Matrix<F>& a, const Matrix<F>& b) {
  Rref<F> r = rref(Matrix<F>::hstack(a, b));
  Matrix<F> x(a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(r.pivots[i], j) = r.mat.at(i, a.cols() + j);
  }
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  Rref<F> r = rref(Matrix<F>::hstack(a, Matrix<F>::identity(a.rows())));
  if (r.pivots.size() != a.rows()) return std::nullopt;
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    if (r.pivots[i] >= a.rows()) return std::nullopt;
  return r.mat.submatrix(0, a.rows(), a.cols(), 2 * a.cols());
}

/// Basis of the column space: the original columns in pivot positions.
template <class F>
Matrix<F> image_basis(const Matrix<F>& a) {
  Rref<F> r = rref(a);
  Matrix<F> b(a.rows(), r.pivots.size());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) b.set_col(i, a.col(r.pivots[i]));
  return b;
}

/// Basis of col(a) + col(b).
template <class F>
Matrix<F> span_sum(const Matrix<F>& a, const Matrix<F>& b) {
  return image_basis(Matrix<F>::hstack(a, b));
}

/// Basis of col(a) ∩ col(b).
template <class F>
Matrix<F> span_intersection(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() == 0 || b.cols() == 0) return Matrix<F>(a.rows(), 0);
  Matrix<F> k = kernel_basis(Matrix<F>::hstack(a, -b));
  Matrix<F> coords = k.submatrix(0, a.cols(), 0, k.cols());
  return image_basis(a * coords);
}

/// Basis of the preimage f^{-1}(col(s)) for a map f: V -> W.
template <class F>
Matrix<F> preimage_basis(const Matrix<F>& f, const Matrix<F>& s) {
  if (s.cols() == 0) return kernel_basis(f);
  Matrix<F> k = kernel_basis(Matrix<F>::hstack(f, -s));
  return image_basis(k.submatrix(0, f.cols(), 0, k.cols()));
}

/// Whether v lies in col(a).
template <class F>
bool span_contains(const Matrix<F>& a, const std::vector<F>& v) {
  Matrix<F> vm(a.rows(), 1);
  for (std::size_t i = 0; i < a.rows(); ++i) vm.at(i, 0) = v[i];
  return solve_matrix(a, vm).has_value();
}

/// Whether col(b) ⊆ col(a).
template <class F>
bool span_contains_all(const Matrix<F>& a, const Matrix<F>& b) {
  return solve_matrix(a, b).has_value();
}

}  // namespace bgg

#endif
