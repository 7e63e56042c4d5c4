#pragma once

// Exact dense linear algebra over a field scalar: reduced row echelon form,
// rank, kernels, solves, inverses and determinants.  Everything is pivot-on-
// first-nonzero, so results are deterministic for exact scalars.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "quot/cyclotomic.hpp"
#include "quot/errors.hpp"

namespace quot {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
template <class T>
bool is_zero(const T& x) {
  return x == T(0);
}

/// Brings m to reduced row echelon form; returns the pivot columns.
template <class Scalar>
std::vector<Eigen::Index> rref_in_place(DenseMatrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index k = col; k < m.cols(); ++k) {
      if (!is_zero(m(row, k))) m(row, k) *= inv;
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar f = m(r, col);
      for (Eigen::Index k = col; k < m.cols(); ++k) {
        if (!is_zero(m(row, k))) m(r, k) -= f * m(row, k);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Nonzero rows of the RREF: the canonical basis of the row space.
template <class Scalar>
DenseMatrix<Scalar> row_space_basis(DenseMatrix<Scalar> m) {
  const auto pivots = rref_in_place(m);
  return m.topRows(static_cast<Eigen::Index>(pivots.size()));
}

template <class Scalar>
Eigen::Index rank(DenseMatrix<Scalar> m) {
  return static_cast<Eigen::Index>(rref_in_place(m).size());
}

/// Basis of {v : m v = 0}, returned as the rows of a matrix in reduced
/// echelon form.
template <class Scalar>
DenseMatrix<Scalar> kernel_basis(DenseMatrix<Scalar> m) {
  const Eigen::Index n = m.cols();
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  const Eigen::Index nullity = n - static_cast<Eigen::Index>(pivots.size());
  DenseMatrix<Scalar> k(nullity, n);
  k.setConstant(Scalar(0));
  Eigen::Index out = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    k(out, f) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!is_zero(m(static_cast<Eigen::Index>(r), f))) k(out, pivots[r]) = -m(static_cast<Eigen::Index>(r), f);
    }
    ++out;
  }
  if (nullity == 0) return k;
  return row_space_basis<Scalar>(std::move(k));
}

/// Some x with a x = b (free variables set to zero), or nullopt.
template <class Scalar>
std::optional<DenseVector<Scalar>> solve(const DenseMatrix<Scalar>& a, const DenseVector<Scalar>& b) {
  DenseMatrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  DenseVector<Scalar> x(a.cols());
  x.setConstant(Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
  return x;
}

template <class Scalar>
DenseMatrix<Scalar> inverse(const DenseMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  DenseMatrix<Scalar> aug(n, 2 * n);
  aug.setConstant(Scalar(0));
  aug.leftCols(n) = m;
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = Scalar(1);
  const auto pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
    throw InputError("matrix is singular");
  }
  return aug.rightCols(n);
}

template <class Scalar>
Scalar determinant(DenseMatrix<Scalar> m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && is_zero(m(piv, col))) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = Scalar(1) / m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const Scalar f = m(r, col) * inv;
      for (Eigen::Index k = col; k < n; ++k) m(r, k) -= f * m(col, k);
    }
  }
  return det;
}

/// Determinant over a commutative ring (no division) by Laplace expansion
/// along rows, memoized on the remaining column set.  Size limit 30.
template <class Ring>
Ring determinant_by_minors(const std::vector<std::vector<Ring>>& a, const Ring& zero, const Ring& one) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  if (n > 30) throw BoundError("determinant_by_minors: matrix too large");
  std::map<std::uint32_t, Ring> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t cols) -> Ring {
    if (row == n) return one;
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Ring acc = zero;
    int position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols & (1u << j))) continue;
      if (!is_zero(a[row][j])) {
        Ring term = a[row][j] * self(self, row + 1, cols & ~(1u << j));
        if (position % 2) {
          acc = acc - term;
        } else {
          acc = acc + term;
        }
      }
      ++position;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return rec(rec, 0, n == 32 ? ~0u : ((1u << n) - 1));
}

}  // namespace quot
