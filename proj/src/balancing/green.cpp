#include "kcsc/balancing/green.hpp"

#include "kcsc/tuning/tuning.hpp"

namespace kcsc::balancing {

using tuning::PiMultiple;

namespace {

void check(int m, const Integer& order) {
  if (m < 2) throw InputError("Green-function constants need m >= 2");
  if (order < 1) throw InputError("group order must be positive");
}

}  // namespace

DeficiencyCoefficients deficiency_coefficients(int m, const Rational& s, const Integer& order, const Rational& beta,
                                               const Rational& gamma) {
  check(m, order);
  const PiMultiple sphere = tuning::sphere_volume(m);
  const Rational g(order);
  if (m == 2) {
    const PiMultiple unit = PiMultiple(g) / sphere;
    return {unit * beta, unit * (gamma / 4 - s * beta / 6)};
  }
  const PiMultiple unit = PiMultiple(g) / (sphere * Rational(2 * (m - 1)));
  const Rational mm(m);
  const Rational bracket = gamma / (4 * (mm - 2)) - s * beta * (mm * mm - mm + 2) / ((mm - 2) * mm * (mm + 1));
  return {unit * beta, unit * (-bracket)};
}

GreenConstants green_constants(int m, const Rational& s, const Integer& order) {
  check(m, order);
  const PiMultiple sphere = tuning::sphere_volume(m);
  const Rational g(order);
  if (m == 2) return {sphere / g, sphere * (2 * s) / (3 * g), sphere * Rational(4) / g};
  const Rational mm(m);
  return {sphere * Rational(2 * (m - 1)) / g, PiMultiple(s * (mm * mm - mm + 2) / (mm * (mm + 1))),
          sphere * Rational(2 * (m - 1) * 4 * (m - 2)) / g};
}

}  // namespace kcsc::balancing
