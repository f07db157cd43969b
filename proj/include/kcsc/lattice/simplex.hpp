#ifndef KCSC_LATTICE_SIMPLEX_HPP
#define KCSC_LATTICE_SIMPLEX_HPP

#include "kcsc/lattice/types.hpp"

namespace kcsc::lattice {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  RatVector x;         // primal solution when optimal
  Rational objective;  // c^T x when optimal
};

/**
 * Exact two-phase tableau simplex for
 *
 *     minimize c^T x  subject to  A x = b,  x >= 0.
 *
 * Pivoting follows Bland's rule (lowest-index entering and leaving variable),
 * so the method terminates on degenerate problems. Redundant equality rows are
 * detected after phase one and dropped.
 */
LpResult minimize(const RatMatrix& a, const RatVector& b, const RatVector& c);

}  // namespace kcsc::lattice

#endif  // KCSC_LATTICE_SIMPLEX_HPP
