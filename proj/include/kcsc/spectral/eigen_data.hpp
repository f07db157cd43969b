#ifndef KCSC_SPECTRAL_EIGEN_DATA_HPP
#define KCSC_SPECTRAL_EIGEN_DATA_HPP

#include "kcsc/lattice/types.hpp"
#include "kcsc/toric/cone.hpp"

namespace kcsc::spectral {

/// Eigenvalue of the gamma-th eigenspace of the Laplacian on S^{2m-1}: -gamma(2m-2+gamma).
Integer eigenvalue(int m, long gamma);

/// Number of monomials of total degree `degree` in n variables.
Integer monomial_count(long n, long degree);

/// Dimension of degree-gamma harmonic polynomials on R^{2m}: monomial counts of degree gamma and gamma-2.
Integer harmonic_dimension(int m, long gamma);

/// Closed form (2g+n-2)(g+n-3)!/(g!(n-2)!) with n = 2m, used as a cross-check.
Integer harmonic_dimension_closed_form(int m, long gamma);

/**
 * Dimension of the Gamma-invariant part of the gamma-th eigenspace for a diagonal
 * abelian action: invariant monomials z^alpha zbar^beta of degree gamma minus those
 * of degree gamma - 2. A monomial is invariant iff sum_k (alpha_k - beta_k) w_k = 0 mod 1
 * for every generator weight vector w.
 */
Integer invariant_harmonic_dimension(const toric::QuotientGroup& g, long gamma);

/// Invariant monomials of one total degree (the count the dimension is built from).
Integer invariant_monomial_count(const toric::QuotientGroup& g, long degree);

/**
 * Smallest gamma >= 1 with a nonzero invariant eigenspace. Requires a nontrivial
 * group acting freely off the origin; the result is then at least 2.
 */
long first_invariant_mode(const toric::QuotientGroup& g);

/// 1/Lambda^2 factors of the u4 (modes 2, 4) and u5 (modes 3, 5) corrections.
struct WCorrectionFactors {
  Rational u4_mode2;
  Rational u4_mode4;
  Rational u5_mode3;
  Rational u5_mode5;
  bool u4_log_branch = false;  // m = 2: the radial part of W4 is logarithmic
};

WCorrectionFactors w_correction_mode_factors(int m);

/// Radial constant of the quartic term of the potential's expansion: -s/(16 m (m+1)).
Rational psi4_radial_constant(int m, const Rational& s);

}  // namespace kcsc::spectral

#endif  // KCSC_SPECTRAL_EIGEN_DATA_HPP
