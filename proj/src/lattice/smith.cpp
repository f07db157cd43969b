#include "kcsc/lattice/smith.hpp"

#include <optional>
#include <utility>

namespace kcsc::lattice {

std::vector<Integer> SmithDecomposition::elementary_divisors() const {
  std::vector<Integer> out;
  const Index n = std::min(D.rows(), D.cols());
  out.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) out.push_back(D(i, i));
  return out;
}

namespace {

std::optional<std::pair<Index, Index>> smallest_entry(const IntMatrix& d, Index t) {
  std::optional<std::pair<Index, Index>> best;
  Integer best_abs;
  for (Index i = t; i < d.rows(); ++i)
    for (Index j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer v = abs(d(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  SmithDecomposition s{IntMatrix::Identity(rows, rows), a, IntMatrix::Identity(cols, cols)};
  IntMatrix& d = s.D;

  for (Index t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      const auto pivot = smallest_entry(d, t);
      if (!pivot) return s;  // remaining block is zero
      const auto [pi, pj] = *pivot;
      if (pi != t) {
        d.row(pi).swap(d.row(t));
        s.U.row(pi).swap(s.U.row(t));
      }
      if (pj != t) {
        d.col(pj).swap(d.col(t));
        s.V.col(pj).swap(s.V.col(t));
      }

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        d.row(i) -= q * d.row(t);
        s.U.row(i) -= q * s.U.row(t);
        if (d(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        d.col(j) -= q * d.col(t);
        s.V.col(j) -= q * s.V.col(t);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every entry of the trailing block.
      bool divides = true;
      for (Index i = t + 1; i < rows && divides; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.row(t) += d.row(i);
            s.U.row(t) += s.U.row(i);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.row(t) *= Integer(-1);
      s.U.row(t) *= Integer(-1);
    }
  }
  return s;
}

}  // namespace kcsc::lattice
