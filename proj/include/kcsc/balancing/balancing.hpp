#ifndef KCSC_BALANCING_BALANCING_HPP
#define KCSC_BALANCING_BALANCING_HPP

#include <optional>
#include <string>
#include <vector>

#include "kcsc/lattice/types.hpp"

namespace kcsc::balancing {

/**
 * Linear balancing data at N marked points p_j (and optionally K points q_l):
 * phi(i, j) = phi_i(p_j), lap_phi(i, j) = (Laplacian phi_i)(p_j), phi_q(i, l) = phi_i(q_l).
 * The scalar curvature s defaults to 1, i.e. results are in units of s.
 */
struct BalancingProblem {
  int m = 0;
  Rational s = 1;
  RatMatrix phi;
  RatMatrix lap_phi;
  std::optional<RatMatrix> phi_q;
  std::optional<Rational> volume;
  std::vector<std::string> points;

  /// Kaehler-Einstein toric case: the potentials are eigenfunctions, Laplacian phi = -(s/m) phi.
  static BalancingProblem toric_einstein(int m, Rational s, RatMatrix phi, std::vector<std::string> points = {});

  Index d() const { return phi.rows(); }
  Index n_points() const { return phi.cols(); }
  bool einstein_mode() const;
  /// Throws InputError on shape mismatches or m < 1.
  void validate() const;
};

struct BalancingWitness {
  RatVector b;  // strictly positive, min(b) = 1
  RatVector c;  // c = s b
  Index rank = 0;
  std::optional<Rational> nu;
};

/// Theta(i, j) = b_j lap_phi(i, j) + c_j phi(i, j).
RatMatrix build_theta(const BalancingProblem& p, const RatVector& b, const RatVector& c);

/// Xi(i, l) = a_l phi_q(i, l).
RatMatrix build_xi(const BalancingProblem& p, const RatVector& a);

/// (m - 1) s / m: Theta(1, s 1) = factor * phi in the Kaehler-Einstein toric case.
Rational ke_theta_factor(int m, const Rational& s);

struct Nondegeneracy {
  bool full_rank = false;
  Index rank = 0;
  Index d = 0;
};

/// Rank of the horizontal concatenation (Xi | Theta) against its row count.
Nondegeneracy check_nondegeneracy(const RatMatrix& theta, const std::optional<RatMatrix>& xi = std::nullopt);

/**
 * Substitutes c = s b, so that the balancing rows read
 * sum_j b_j (lap_phi + s phi)(i, j) = 0, and asks for a strictly positive b.
 * Absent when no positive solution exists or Theta(b, s b) is rank deficient.
 */
std::optional<BalancingWitness> solve_balancing(const BalancingProblem& p);

struct GeneralCheck {
  bool balanced = false;
  Rational nu;
};

/**
 * Rows i = 1..d of f_i + sum_l a_l phi_i(q_l) + sum_j b_j lap_phi_i(p_j) + c_j phi_i(p_j) = 0,
 * and nu from f_0 Vol + sum a + sum c = nu Vol. `f` has length d + 1, f(0) = f_0.
 */
GeneralCheck general_balancing_check(const BalancingProblem& p, const RatVector& f, const RatVector& a,
                                     const RatVector& b, const RatVector& c);

/// (sum a + sum c) / vol.
Rational nu_constant(const RatVector& a, const RatVector& c, const Rational& vol);

}  // namespace kcsc::balancing

#endif  // KCSC_BALANCING_BALANCING_HPP
