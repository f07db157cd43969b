#ifndef KCSC_TUNING_SYMBOLIC_HPP
#define KCSC_TUNING_SYMBOLIC_HPP

#include <map>
#include <optional>
#include <string>

#include "kcsc/lattice/types.hpp"

namespace kcsc::tuning {

/// coeff * pi^pi_pow, kept exact until presentation.
struct PiMultiple {
  Rational coeff = 0;
  int pi_pow = 0;

  PiMultiple() = default;
  PiMultiple(Rational c, int p = 0) : coeff(std::move(c)), pi_pow(p) {}

  bool is_zero() const { return coeff == 0; }
  /// The rational value when pi_pow = 0 (or the coefficient vanishes); throws otherwise.
  Rational rational() const;
  double to_double() const;
  std::string to_string() const;

  friend PiMultiple operator*(const PiMultiple& a, const PiMultiple& b) {
    return {a.coeff * b.coeff, a.pi_pow + b.pi_pow};
  }
  friend PiMultiple operator/(const PiMultiple& a, const PiMultiple& b);
  friend PiMultiple operator*(const PiMultiple& a, const Rational& q) { return {a.coeff * q, a.pi_pow}; }
  friend PiMultiple operator*(const Rational& q, const PiMultiple& a) { return a * q; }
  friend PiMultiple operator/(const PiMultiple& a, const Rational& q) { return {a.coeff / q, a.pi_pow}; }
  /// Sums need matching pi powers unless one side is zero.
  friend PiMultiple operator+(const PiMultiple& a, const PiMultiple& b);
  friend PiMultiple operator-(const PiMultiple& a, const PiMultiple& b) { return a + b * Rational(-1); }
  friend bool operator==(const PiMultiple& a, const PiMultiple& b) {
    return a.coeff == b.coeff && (a.pi_pow == b.pi_pow || a.coeff == 0);
  }
};

/// Finite Laurent polynomial in pi, for sums of terms with different pi powers.
struct PiSum {
  std::map<int, Rational> terms;  // pi power -> coefficient, zero coefficients dropped

  PiSum() = default;
  PiSum(const PiMultiple& x) { add(x); }

  PiSum& add(const PiMultiple& x);
  PiSum& add(const PiSum& x);
  PiSum scaled(const Rational& q) const;
  bool is_zero() const { return terms.empty(); }
  /// Single-term view; throws if more than one pi power is present.
  PiMultiple single() const;
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const PiSum& a, const PiSum& b) { return a.terms == b.terms; }
};

/**
 * base^exponent with a positive rational base and a rational exponent.
 * Comparisons happen on exact data; floats only for presentation.
 */
struct RationalPower {
  Rational base = 1;
  Rational exponent = 0;

  /// Exact rational value when both numerator and denominator of the base are perfect powers.
  std::optional<Rational> exact() const;
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const RationalPower& a, const RationalPower& b) {
    return a.base == b.base && a.exponent == b.exponent;
  }
};

/// q^n for an integer n (negative allowed for q != 0).
Rational pow(const Rational& q, long n);

/// Exact k-th root of a nonnegative integer, if it exists.
std::optional<Integer> exact_root(const Integer& z, unsigned long k);

/// m! as an exact integer.
Integer factorial(long m);

}  // namespace kcsc::tuning

#endif  // KCSC_TUNING_SYMBOLIC_HPP
