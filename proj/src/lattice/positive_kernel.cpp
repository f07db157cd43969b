#include "kcsc/lattice/positive_kernel.hpp"

#include "kcsc/lattice/simplex.hpp"

namespace kcsc::lattice {

std::optional<RatVector> positive_nullspace_witness(const RatMatrix& m) {
  const Index n = m.cols();
  if (n == 0) return std::nullopt;

  // Substitute b = 1 + x with x >= 0: M x = -M 1.
  RatMatrix a = m;
  RatVector rhs = -(m * RatVector::Ones(n));
  RatVector objective = RatVector::Ones(n);

  auto result = minimize(a, rhs, objective);
  if (result.status != LpStatus::optimal) return std::nullopt;

  // Lexicographic tie-break: pin each optimum as an equality, then minimize the next coordinate.
  for (Index k = 0; k < n; ++k) {
    RatMatrix pinned(a.rows() + 1, n);
    pinned.topRows(a.rows()) = a;
    pinned.row(a.rows()) = objective.transpose();
    RatVector pinned_rhs(rhs.size() + 1);
    pinned_rhs.head(rhs.size()) = rhs;
    pinned_rhs(rhs.size()) = result.objective;
    a = std::move(pinned);
    rhs = std::move(pinned_rhs);

    objective = RatVector::Zero(n);
    objective(k) = 1;
    result = minimize(a, rhs, objective);
    if (result.status != LpStatus::optimal)
      throw InconsistencyError("lexicographic refinement lost feasibility");
  }

  RatVector b = result.x + RatVector::Ones(n);
  if (!is_zero(m * b)) throw InconsistencyError("positive kernel witness fails M b = 0");
  return b;
}

}  // namespace kcsc::lattice
