#ifndef KCSC_LATTICE_POSITIVE_KERNEL_HPP
#define KCSC_LATTICE_POSITIVE_KERNEL_HPP

#include <optional>

#include "kcsc/lattice/types.hpp"

namespace kcsc::lattice {

/**
 * A strictly positive b with M b = 0, if one exists.
 *
 * Positivity of a kernel vector is scale invariant, so the question is the
 * feasibility of {M b = 0, b >= 1}. Among feasible points the witness minimizes
 * sum(b), then b_0, b_1, ... lexicographically; a sum-minimal point always has
 * min(b) = 1, which makes the representative canonical.
 */
std::optional<RatVector> positive_nullspace_witness(const RatMatrix& m);

}  // namespace kcsc::lattice

#endif  // KCSC_LATTICE_POSITIVE_KERNEL_HPP
