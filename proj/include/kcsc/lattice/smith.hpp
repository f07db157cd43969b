#ifndef KCSC_LATTICE_SMITH_HPP
#define KCSC_LATTICE_SMITH_HPP

#include <vector>

#include "kcsc/lattice/types.hpp"

namespace kcsc::lattice {

/**
 * U * A * V = D with U, V unimodular and D diagonal, its nonzero diagonal
 * entries positive and forming a divisibility chain d_1 | d_2 | ...
 */
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal of D, including trailing zeros, length min(rows, cols).
  std::vector<Integer> elementary_divisors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace kcsc::lattice

#endif  // KCSC_LATTICE_SMITH_HPP
