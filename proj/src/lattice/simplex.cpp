#include "kcsc/lattice/simplex.hpp"

#include <optional>
#include <vector>

namespace kcsc::lattice {

namespace {

// Dense tableau: rows 0..m-1 are constraints, column `rhs` is the right-hand
// side, and `cost` holds the reduced costs of the current basis.
struct Tableau {
  RatMatrix rows;
  RatVector cost;
  Rational cost_rhs;  // minus the current objective value
  std::vector<Index> basis;

  Index width() const { return rows.cols() - 1; }
  Index rhs() const { return rows.cols() - 1; }

  void pivot(Index r, Index col) {
    const Rational inv = Rational(1) / rows(r, col);
    rows.row(r) *= inv;
    for (Index i = 0; i < rows.rows(); ++i) {
      if (i == r || rows(i, col) == 0) continue;
      const Rational f = rows(i, col);
      rows.row(i) -= f * rows.row(r);
    }
    if (cost(col) != 0) {
      const Rational f = cost(col);
      cost -= f * rows.row(r).head(width()).transpose();
      cost_rhs -= f * rows(r, rhs());
    }
    basis[static_cast<std::size_t>(r)] = col;
  }

  // Sets the reduced costs for objective `c` (indexed by column) under the current basis.
  void price(const RatVector& c) {
    cost = c;
    cost_rhs = 0;
    for (Index r = 0; r < rows.rows(); ++r) {
      const Rational cb = c(basis[static_cast<std::size_t>(r)]);
      if (cb == 0) continue;
      cost -= cb * rows.row(r).head(width()).transpose();
      cost_rhs -= cb * rows(r, rhs());
    }
  }

  // Bland's rule over columns [0, allowed). Returns false when unbounded.
  bool optimize(Index allowed) {
    while (true) {
      Index entering = -1;
      for (Index j = 0; j < allowed; ++j)
        if (cost(j) < 0) {
          entering = j;
          break;
        }
      if (entering < 0) return true;

      Index leaving = -1;
      Rational best_ratio;
      for (Index i = 0; i < rows.rows(); ++i) {
        if (rows(i, entering) <= 0) continue;
        const Rational ratio = rows(i, rhs()) / rows(i, entering);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leaving)])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  void drop_row(Index r) {
    const Index n = rows.rows();
    RatMatrix kept(n - 1, rows.cols());
    for (Index i = 0, k = 0; i < n; ++i)
      if (i != r) kept.row(k++) = rows.row(i);
    rows = std::move(kept);
    basis.erase(basis.begin() + r);
  }
};

}  // namespace

LpResult minimize(const RatMatrix& a, const RatVector& b, const RatVector& c) {
  if (a.rows() != b.size() || a.cols() != c.size())
    throw InputError("linear program dimensions do not agree");
  const Index m = a.rows();
  const Index n = a.cols();

  // Phase one: artificial columns n..n+m-1 start in the basis.
  Tableau t;
  t.rows = RatMatrix::Zero(m, n + m + 1);
  for (Index i = 0; i < m; ++i) {
    const int sign = b(i) < 0 ? -1 : 1;
    t.rows.row(i).head(n) = a.row(i) * Rational(sign);
    t.rows(i, n + i) = 1;
    t.rows(i, n + m) = b(i) * sign;
    t.basis.push_back(n + i);
  }
  RatVector phase_one = RatVector::Zero(n + m);
  phase_one.tail(m).setOnes();
  t.price(phase_one);
  t.optimize(n + m);
  if (t.cost_rhs != 0) return {LpStatus::infeasible, {}, {}};

  // Drive artificials out of the basis, dropping rows that are redundant.
  for (Index r = t.rows.rows() - 1; r >= 0; --r) {
    if (t.basis[static_cast<std::size_t>(r)] < n) continue;
    std::optional<Index> col;
    for (Index j = 0; j < n; ++j)
      if (t.rows(r, j) != 0) {
        col = j;
        break;
      }
    if (col)
      t.pivot(r, *col);
    else
      t.drop_row(r);
  }

  RatVector phase_two = RatVector::Zero(n + m);
  phase_two.head(n) = c;
  t.price(phase_two);
  if (!t.optimize(n)) return {LpStatus::unbounded, {}, {}};

  LpResult out;
  out.status = LpStatus::optimal;
  out.x = RatVector::Zero(n);
  for (Index r = 0; r < t.rows.rows(); ++r) out.x(t.basis[static_cast<std::size_t>(r)]) = t.rows(r, t.rhs());
  out.objective = -t.cost_rhs;
  return out;
}

}  // namespace kcsc::lattice
