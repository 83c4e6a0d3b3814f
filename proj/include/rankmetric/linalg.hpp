#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace rankmetric {

/// Dense row-major matrix over an arbitrary element type. All structure
/// (which field the entries live in) is supplied by the Ops parameter of
/// the algorithms below, so the same elimination code serves GF(q) scalars
/// and extension-field elements.
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

  static Mat from_rows(std::vector<std::vector<T>> rows) {
    Mat m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.d_.reserve(m.rows_ * m.cols_);
    for (auto& r : rows) {
      for (auto& v : r) m.d_.push_back(std::move(v));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  T& at(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
  const T& at(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(d_.begin() + r * cols_, d_.begin() + (r + 1) * cols_);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> d_;
};

template <typename Ops, typename T>
Mat<T> mat_transpose(const Ops&, const Mat<T>& a) {
  Mat<T> out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(c, r) = a.at(r, c);
  return out;
}

template <typename Ops, typename T>
Mat<T> mat_mul(const Ops& f, const Mat<T>& a, const Mat<T>& b) {
  Mat<T> out(a.rows(), b.cols(), f.zero());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& x = a.at(r, k);
      if (x == f.zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        out.at(r, c) = f.add(out.at(r, c), f.mul(x, b.at(k, c)));
    }
  return out;
}

template <typename T>
Mat<T> mat_stack(const Mat<T>& a, const Mat<T>& b) {
  std::vector<std::vector<T>> rows;
  rows.reserve(a.rows() + b.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  for (std::size_t r = 0; r < b.rows(); ++r) rows.push_back(b.row(r));
  Mat<T> out = Mat<T>::from_rows(std::move(rows));
  if (out.rows() == 0) return Mat<T>(0, a.cols());
  return out;
}

/// In-place reduced row echelon form. Pivoting is deterministic: leftmost
/// pivot column, smallest-index nonzero row. Returns the pivot columns.
template <typename Ops, typename T>
std::vector<std::size_t> rref(const Ops& f, Mat<T>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a.at(sel, col) == f.zero()) ++sel;
    if (sel == a.rows()) continue;
    a.swap_rows(row, sel);
    const T inv_p = f.inv(a.at(row, col));
    for (std::size_t c = col; c < a.cols(); ++c)
      a.at(row, c) = f.mul(inv_p, a.at(row, c));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col) == f.zero()) continue;
      const T factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Ops, typename T>
std::size_t mat_rank(const Ops& f, Mat<T> a) {
  return rref(f, a).size();
}

/// Canonical basis of the row space: rref with zero rows dropped.
template <typename Ops, typename T>
Mat<T> row_space(const Ops& f, Mat<T> a) {
  const auto pivots = rref(f, a);
  std::vector<std::vector<T>> rows;
  rows.reserve(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) rows.push_back(a.row(r));
  Mat<T> out = Mat<T>::from_rows(std::move(rows));
  if (out.rows() == 0) return Mat<T>(0, a.cols());
  return out;
}

/// Canonical basis (as rows) of {x : a·xᵀ = 0}.
template <typename Ops, typename T>
Mat<T> null_space(const Ops& f, Mat<T> a) {
  const std::size_t n = a.cols();
  const auto pivots = rref(f, a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> rows;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(n, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(a.at(r, free));
    rows.push_back(std::move(v));
  }
  Mat<T> out = Mat<T>::from_rows(std::move(rows));
  if (out.rows() == 0) return Mat<T>(0, n);
  return row_space(f, out);
}

/// Inverse of a square matrix; the caller guarantees invertibility
/// (returns an identity-padded garbage matrix otherwise, so check rank
/// first when in doubt).
template <typename Ops, typename T>
Mat<T> mat_inverse(const Ops& f, const Mat<T>& a) {
  const std::size_t n = a.rows();
  Mat<T> aug(n, 2 * n, f.zero());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n + r) = f.one();
  }
  rref(f, aug);
  Mat<T> out(n, n, f.zero());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
  return out;
}

template <typename Ops, typename T = typename Ops::Elem>
Mat<T> identity(const Ops& f, std::size_t n) {
  Mat<T> out(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = f.one();
  return out;
}

/// Canonical basis of rowspace(a) ∩ rowspace(b). Inputs must have
/// independent rows. Elements (u, v) of the left null space of [a; b]
/// satisfy u·a = -v·b, and u ↦ u·a is injective there.
template <typename Ops, typename T>
Mat<T> intersect_row_spaces(const Ops& f, const Mat<T>& a, const Mat<T>& b) {
  const std::size_t n = a.cols();
  if (a.rows() == 0 || b.rows() == 0) return Mat<T>(0, n);
  Mat<T> stacked = mat_stack(a, b);
  Mat<T> left = null_space(f, mat_transpose(f, stacked));
  std::vector<std::vector<T>> rows;
  for (std::size_t r = 0; r < left.rows(); ++r) {
    std::vector<T> w(n, f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const T& coef = left.at(r, i);
      if (coef == f.zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        w[c] = f.add(w[c], f.mul(coef, a.at(i, c)));
    }
    rows.push_back(std::move(w));
  }
  Mat<T> out = Mat<T>::from_rows(std::move(rows));
  if (out.rows() == 0) return Mat<T>(0, n);
  return row_space(f, out);
}

}  // namespace rankmetric
