#ifndef KCSC_SPECTRAL_RADIAL_PROFILE_HPP
#define KCSC_SPECTRAL_RADIAL_PROFILE_HPP

#include <string>
#include <vector>

#include "kcsc/lattice/types.hpp"

namespace kcsc::spectral {

/// coeff * r^exponent * (log r)^log_power.
struct RadialTerm {
  Rational coeff;
  long exponent = 0;
  int log_power = 0;
};

/**
 * Function f(r) Phi_gamma on R^{2m} \ {0}, where Phi_gamma is a spherical harmonic
 * of the gamma-th eigenspace. Only the radial factor f is stored.
 */
struct RadialProfile {
  int m = 0;
  long gamma = 0;
  std::vector<RadialTerm> terms;

  /// Combines like terms and drops zeros.
  RadialProfile& normalize();
  bool is_zero() const;
  Rational value_at_one() const;
  Rational derivative_at_one() const;
  std::string to_string() const;
};

RadialProfile operator+(const RadialProfile& a, const RadialProfile& b);
RadialProfile operator-(const RadialProfile& a, const RadialProfile& b);
RadialProfile operator*(const RadialProfile& a, const Rational& q);

/// mu(a) = a(a+2m-2) + Lambda_gamma, so that Laplacian(r^a Phi) = mu(a) r^{a-2} Phi.
Integer radial_laplacian_coefficient(long a, int m, long gamma);

/// Exact Laplacian of f(r) Phi_gamma, including the logarithmic terms.
RadialProfile laplacian(const RadialProfile& p);

/// Bi-harmonic extension to |x| > 1 decaying at infinity, with value h and Laplacian k on |x| = 1.
RadialProfile outer_extension(int m, long gamma, const Rational& h, const Rational& k);

/// Bi-harmonic extension to |x| < 1, regular at the origin, with value h and Laplacian k on |x| = 1.
RadialProfile inner_extension(int m, long gamma, const Rational& h, const Rational& k);

struct BiharmonicCheck {
  bool biharmonic = false;  // the bi-Laplacian cancels term by term
  Rational value;           // f(1)
  Rational laplacian;       // (Laplacian f)(1)
};

BiharmonicCheck verify_biharmonic(const RadialProfile& p);

}  // namespace kcsc::spectral

#endif  // KCSC_SPECTRAL_RADIAL_PROFILE_HPP
