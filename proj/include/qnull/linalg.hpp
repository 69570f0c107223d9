#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rat.hpp"

namespace qnull {

using RatVector = std::vector<Rat>;

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector apply(const RatVector& v) const {
    if (v.size() != cols_) throw InvalidInput("matrix/vector dimension mismatch");
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// Solution set of A v = t: one particular solution (if any) plus a nullspace basis of A.
struct LinearSolution {
  std::optional<RatVector> particular;
  std::vector<RatVector> nullspace;
};

namespace detail {

/// In-place reduced row echelon form of `m` restricted to the first `ncols` columns.
/// Returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Rat inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rat f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Exact Gaussian elimination over Q.
inline LinearSolution linear_solve_rat(const RatMatrix& a, const RatVector& t) {
  if (t.size() != a.rows()) throw InvalidInput("right-hand side length does not match row count");
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = t[r];
  }
  auto pivots = detail::rref(aug, n);

  LinearSolution sol;
  bool consistent = true;
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (!aug(r, n).is_zero()) consistent = false;
  if (consistent) {
    RatVector x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
    sol.particular = std::move(x);
  }

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug(r, free);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

inline std::vector<RatVector> nullspace(const RatMatrix& a) {
  return linear_solve_rat(a, RatVector(a.rows())).nullspace;
}

inline std::size_t rank(const RatMatrix& a) {
  RatMatrix m = a;
  return detail::rref(m, m.cols()).size();
}

}  // namespace qnull
