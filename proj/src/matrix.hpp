#ifndef ZCROSS_MATRIX_HPP
#define ZCROSS_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

// Dense exact linear algebra over a field scalar: plain Gaussian elimination,
// kernels, solving, and row-span bookkeeping. Everything is exact; there are
// no tolerances anywhere. Sized for desk-scale instances, not asymptotics.

namespace zcross {

template <FieldScalar S>
using Vec = std::vector<S>;

using QVec = Vec<GaussianRational>;

template <FieldScalar S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}

  Matrix(size_t rows, size_t cols, const S& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  explicit Matrix(std::vector<Vec<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows[0].size() : 0;
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
      if (r.size() != cols_)
        throw Error(ErrorCode::DimensionMismatch, "ragged rows in matrix construction");
      for (auto& x : r) data_.push_back(std::move(x));
    }
  }

  static Matrix identity(size_t n, const S& like) {
    Matrix m(n, n, S::zero_like(like));
    for (size_t k = 0; k < n; ++k) m.at(k, k) = S::one_like(like);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  S& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const S& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Vec<S> row(size_t r) const {
    Vec<S> out;
    out.reserve(cols_);
    for (size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
  }

  void append_row(const Vec<S>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_)
      throw Error(ErrorCode::DimensionMismatch, "appended row has wrong length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  size_t rows_, cols_;
  std::vector<S> data_;
};

using QMatrix = Matrix<GaussianRational>;

template <FieldScalar S>
Vec<S> vec_add(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "vector addition length mismatch");
  Vec<S> r = a;
  for (size_t k = 0; k < r.size(); ++k) r[k] = r[k] + b[k];
  return r;
}

template <FieldScalar S>
Vec<S> vec_scale(const Vec<S>& a, const S& c) {
  Vec<S> r = a;
  for (S& x : r) x = x * c;
  return r;
}

template <FieldScalar S>
bool vec_is_zero(const Vec<S>& a) {
  for (const S& x : a)
    if (!x.is_zero()) return false;
  return true;
}

// Any entry if one exists, else a default scalar; only used to seed zeros in
// results that end up empty anyway.
template <FieldScalar S>
S exemplar(const Matrix<S>& a) {
  return a.rows() && a.cols() ? a.at(0, 0) : S();
}

template <FieldScalar S>
Vec<S> mat_vec(const Matrix<S>& m, const Vec<S>& v) {
  if (v.size() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector dimension mismatch");
  S like = exemplar(m);
  Vec<S> out;
  out.reserve(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) {
    S acc = S::zero_like(like);
    for (size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero() && !v[c].is_zero()) acc = acc + m.at(r, c) * v[c];
    out.push_back(acc);
  }
  return out;
}

template <FieldScalar S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
  S like = a.rows() && a.cols() ? a.at(0, 0) : exemplar(b);
  Matrix<S> out(a.rows(), b.cols(), S::zero_like(like));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        if (!b.at(k, j).is_zero()) out.at(i, j) = out.at(i, j) + a.at(i, k) * b.at(k, j);
    }
  return out;
}

// In-place reduced row echelon form. Returns the pivot column of each pivot
// row, in order; rank is the number of pivots. Fully canonical: the RREF of a
// row space is unique, which is what makes basis comparisons exact.
template <FieldScalar S>
std::vector<size_t> rref(Matrix<S>& m) {
  std::vector<size_t> pivots;
  size_t pivot_row = 0;
  for (size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    size_t sel = pivot_row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
    S inv = m.at(pivot_row, col).inverse();
    for (size_t c = col; c < m.cols(); ++c) m.at(pivot_row, c) = m.at(pivot_row, c) * inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m.at(r, col).is_zero()) continue;
      S factor = m.at(r, col);
      for (size_t c = col; c < m.cols(); ++c)
        m.at(r, c) = m.at(r, c) - factor * m.at(pivot_row, c);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

// Basis of the null space {v : M v = 0}, one canonical vector per free
// column. `like` seeds zeros and ones when the matrix has no rows (a
// constraint-free system whose kernel is everything).
template <FieldScalar S>
std::vector<Vec<S>> kernel(const Matrix<S>& m, const S& like) {
  if (m.cols() == 0) return {};
  Matrix<S> red = m;
  std::vector<size_t> pivots = rref(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;

  std::vector<Vec<S>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<S> v(m.cols(), S::zero_like(like));
    v[free] = S::one_like(like);
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      v[pivots[pr]] = -red.at(pr, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <FieldScalar S>
std::vector<Vec<S>> kernel(const Matrix<S>& m) {
  return kernel(m, exemplar(m));
}

// Some exact solution of M x = b, or nullopt when the system is inconsistent.
template <FieldScalar S>
std::optional<Vec<S>> solve_linear(const Matrix<S>& m, const Vec<S>& b) {
  if (b.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length must match row count");
  const S like = exemplar(m);
  if (m.rows() == 0) return Vec<S>(m.cols(), S::zero_like(like));
  Matrix<S> aug(m.rows(), m.cols() + 1, S::zero_like(like));
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  std::vector<size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec<S> x(m.cols(), S::zero_like(like));
  for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(pr, m.cols());
  return x;
}

// Membership of v in the row span of `basis` (rows of a matrix); returns the
// exact coordinates when inside.
template <FieldScalar S>
std::optional<Vec<S>> span_coordinates(const Matrix<S>& basis, const Vec<S>& v) {
  if (v.size() != basis.cols())
    throw Error(ErrorCode::DimensionMismatch, "vector length must match basis width");
  if (basis.rows() == 0) return vec_is_zero(v) ? std::make_optional(Vec<S>{}) : std::nullopt;
  // Solve basis^T c = v.
  Matrix<S> t(basis.cols(), basis.rows(), S::zero_like(basis.at(0, 0)));
  for (size_t r = 0; r < basis.rows(); ++r)
    for (size_t c = 0; c < basis.cols(); ++c) t.at(c, r) = basis.at(r, c);
  return solve_linear(t, v);
}

// Canonical (RREF, zero rows dropped) basis for the row span of the input.
template <FieldScalar S>
Matrix<S> row_space_basis(const Matrix<S>& m) {
  Matrix<S> red = m;
  std::vector<size_t> pivots = rref(red);
  // keep the width even when the span is trivial, so later membership checks
  // still see the right ambient dimension
  Matrix<S> out(0, m.cols(), S::zero_like(exemplar(m)));
  for (size_t r = 0; r < pivots.size(); ++r) out.append_row(red.row(r));
  return out;
}

template <FieldScalar S>
bool same_row_space(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.cols()) return false;
  return row_space_basis(a) == row_space_basis(b);
}

// Exact inverse of a square matrix, or nullopt when singular.
template <FieldScalar S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "only square matrices can be inverted");
  size_t n = m.rows();
  if (n == 0) return Matrix<S>();
  S like = m.at(0, 0);
  Matrix<S> aug(n, 2 * n, S::zero_like(like));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = S::one_like(like);
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Matrix<S> inv(n, n, S::zero_like(like));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

}  // namespace zcross

#endif
