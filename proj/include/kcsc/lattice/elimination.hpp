#ifndef KCSC_LATTICE_ELIMINATION_HPP
#define KCSC_LATTICE_ELIMINATION_HPP

#include <utility>
#include <vector>

#include "kcsc/lattice/types.hpp"

/**
 * Exact Gaussian elimination over integer rings and rational fields.
 *
 * Nothing here compares against a tolerance: the scalar type must be exact
 * (Integer for the fraction-free determinant, Rational for the field routines).
 */
namespace kcsc::lattice {

/**
 * Determinant by Bareiss fraction-free elimination. Every intermediate entry is
 * a minor of the input, so the divisions are exact in the integers.
 */
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw InputError("determinant of a non-square matrix");
  const Index n = input.rows();
  if (n == 0) return Scalar(1);
  MatrixX<Scalar> a = input;
  Scalar sign(1);
  Scalar previous(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Scalar t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = t / previous;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Reduced row echelon form together with its pivot columns.
template <typename Scalar>
struct RowEchelon {
  MatrixX<Scalar> reduced;
  std::vector<Index> pivots;
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out{input, {}};
  auto& a = out.reduced;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = -1;
    for (Index i = row; i < a.rows(); ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Scalar f = a(i, col);
      for (Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(row_reduce(m).pivots.size());
}

/**
 * Basis of the right kernel, one vector per free column, each with a 1 in its
 * free coordinate. Empty when the kernel is trivial.
 */
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto echelon = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : echelon.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<VectorX<Scalar>> basis;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Zero(m.cols());
    v(free) = 1;
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r)
      v(echelon.pivots[r]) = -echelon.reduced(static_cast<Index>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Unique solution of a square nonsingular system A x = b.
template <typename DerivedA, typename DerivedB>
VectorX<Rational> solve_exact(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != a.cols() || b.rows() != a.rows())
    throw InputError("solve_exact expects a square system");
  RatMatrix augmented(a.rows(), a.cols() + 1);
  augmented.leftCols(a.cols()) = a.template cast<Rational>();
  augmented.col(a.cols()) = b.template cast<Rational>();
  const auto echelon = row_reduce(augmented);
  if (static_cast<Index>(echelon.pivots.size()) != a.rows() ||
      echelon.pivots.back() != a.cols() - 1)
    throw InputError("singular system");
  return echelon.reduced.col(a.cols());
}

/// Exact inverse of a square nonsingular rational matrix.
template <typename Derived>
RatMatrix inverse_exact(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) throw InputError("inverse of a non-square matrix");
  const Index n = a.rows();
  RatMatrix augmented(n, 2 * n);
  augmented.leftCols(n) = a.template cast<Rational>();
  augmented.rightCols(n) = RatMatrix::Identity(n, n);
  const auto echelon = row_reduce(augmented);
  if (static_cast<Index>(echelon.pivots.size()) < n || echelon.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    throw InputError("singular matrix has no inverse");
  return echelon.reduced.rightCols(n);
}

}  // namespace kcsc::lattice

#endif  // KCSC_LATTICE_ELIMINATION_HPP
