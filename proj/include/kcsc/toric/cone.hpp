#ifndef KCSC_TORIC_CONE_HPP
#define KCSC_TORIC_CONE_HPP

#include <optional>
#include <string>
#include <vector>

#include "kcsc/lattice/types.hpp"

namespace kcsc::toric {

/// Above this order the group is not enumerated and cross-checks are skipped.
inline constexpr long kEnumerationLimit = 10000;

/// Simplicial full-dimensional cone; column k of `generators` is the k-th ray.
struct Cone {
  std::string label;
  IntMatrix generators;

  int dim() const { return static_cast<int>(generators.rows()); }
  static Cone from_rays(std::string label, const std::vector<IntVector>& rays);
};

/**
 * Gamma = Z^m / (Z v_1 + ... + Z v_m), the local orbifold group of the cone.
 *
 * Each generator g acts diagonally in the eigencoordinates of the cone by
 * x_k -> exp(2 pi i w_k) x_k with w = (A^{-1} g) mod 1, A = [v_1 ... v_m].
 */
struct QuotientGroup {
  Integer order;
  int ambient_dim = 0;                       // m, the rank of the lattice
  std::vector<Integer> divisors;            // nontrivial elementary divisors, d_1 | d_2 | ...
  std::vector<RatVector> generator_weights;  // one weight vector in [0,1)^m per divisor

  bool is_trivial() const { return order == 1; }
  int dim() const { return ambient_dim; }

  /// Weight vectors of all |Gamma| elements, identity first. Requires order <= kEnumerationLimit.
  std::vector<RatVector> elements() const;

  /// Group given directly by weight vectors (e.g. a cyclic diagonal action), order = product of orders.
  static QuotientGroup cyclic(const RatVector& weights);
};

/// Reduces every entry into [0, 1).
RatVector fractional_part(const RatVector& w);

Integer cone_order(const Cone& c);
QuotientGroup quotient_group(const Cone& c);

/// Checks freeness away from the origin two ways (weights, smooth proper faces); they must agree.
bool is_isolated(const Cone& c);

/// Isolatedness from the face criterion alone: gcd of maximal minors of every proper face is 1.
bool all_proper_faces_smooth(const Cone& c);

/// Isolatedness from group weights alone: no nontrivial element has a weight = 0 mod 1.
bool acts_freely_off_origin(const QuotientGroup& g);

struct SuTest {
  bool is_su = false;
  std::optional<IntVector> functional;  // u with <u, v_i> = -1 for all generators
};

/**
 * Gorenstein test: an integral u with <u, v_i> = -1 for every generator,
 * cross-checked (when the group is small enough to enumerate) against the
 * weight sums of all group elements being integers.
 */
SuTest is_su_singularity(const Cone& c);

/// Rational solution of <u, v_i> = -1 (always exists for independent generators).
RatVector gorenstein_candidate(const Cone& c);

/// Weight-sum criterion alone: every element's weights sum to an integer.
bool weights_in_special_unitary(const QuotientGroup& g);

}  // namespace kcsc::toric

#endif  // KCSC_TORIC_CONE_HPP
