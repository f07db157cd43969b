#include "kcsc/tuning/tuning.hpp"

#include <algorithm>
#include <cmath>

#include "kcsc/spectral/windows.hpp"

namespace kcsc::tuning {

void TuningInputs::validate() const {
  if (m < 2) throw InputError("tuning needs m >= 2");
  if (s < 0) throw InputError("scalar curvature must be nonnegative");
  if (order < 1) throw InputError("group order must be positive");
  if (b <= 0) throw InputError("weight b must be positive");
  if (c_gamma <= 0) throw InputError("ALE constant c(Gamma) must be positive");
  if (epsilon <= 0 || epsilon >= 1) throw InputError("epsilon must lie in (0, 1) so that r_eps < 1");
}

PiMultiple sphere_volume(int m) {
  if (m < 1) throw InputError("sphere volume needs m >= 1");
  return {Rational(2) / Rational(factorial(m - 1)), m};
}

BCoefficient B_coefficient(const TuningInputs& t) {
  t.validate();
  const PiMultiple denom = sphere_volume(t.m) * (2 * t.c_gamma * (t.m - 1));
  BCoefficient out;
  out.radicand = PiMultiple(t.b * Rational(t.order)) / denom;
  out.value = std::pow(out.radicand.to_double(), 1.0 / (2 * t.m));
  return out;
}

PiMultiple C_coefficient(const TuningInputs& t, const PiMultiple& B2m) {
  if (t.m < 3) throw InputError("C coefficient is only defined for m >= 3; m = 2 uses the logarithmic branch");
  const Rational mm(t.m), g(t.order);
  const Rational curvature_factor = 1 + (mm - 1) * (mm - 1) / (mm + 1);
  const PiMultiple leading = B2m * sphere_volume(t.m) * (2 * t.c_gamma * (mm - 1) / (mm * g)) * (t.s * curvature_factor);
  const PiMultiple bracket = leading - PiMultiple(t.c_value());
  return bracket * (g / (8 * (mm - 2) * (mm - 1)));
}

W4Coefficient w4_radial_coefficient(const TuningInputs& t) {
  if (t.m < 2) throw InputError("W4 needs m >= 2");
  const Rational mm(t.m);
  if (t.m == 2) return {-t.c_gamma * t.s / 6, true, 0};
  return {t.c_gamma * (mm - 1) * t.s / (2 * (mm - 2) * mm * (mm + 1)), false, 4 - 2 * t.m};
}

bool check_tuning(const RatVector& b, const RatVector& c, const Rational& s) {
  if (b.size() != c.size()) throw InputError("b and c must have the same length");
  return is_zero(RatVector(c - b * s));
}

PiSum tuned_b(const TuningInputs& t, const PiMultiple& B2m, const Rational& f_hat, const Rational& h0,
              const Rational& k0, const Rational& r_eps) {
  if (t.m == 2)
    throw InputError("tuned b is unsupported for m = 2: the divisor 4m-8 vanishes and no replacement formula is defined");
  if (t.epsilon <= 0) throw InputError("epsilon must be positive");
  const Rational eps2m = pow(t.epsilon, 2 * t.m);
  PiSum out(B2m * (1 - f_hat / eps2m));
  const Rational boundary = (h0 + k0 / (4 * t.m - 8)) * pow(r_eps, 2 * t.m - 2) / (t.c_gamma * eps2m);
  out.add(PiMultiple(boundary));
  return out;
}

Rational schedule_exponent(int m) { return Rational(2 * m - 1, 2 * m + 1); }

Rational tuned_b_error_exponent(int m, const Rational& delta) {
  if (m < 3) throw InputError("tuned b error exponent needs m >= 3");
  const Rational rho = schedule_exponent(m);
  const Rational from_base = 2 + rho * (2 - 2 * m - delta);
  const Rational from_boundary = 2 * m + 2 + rho * (2 - 4 * m - delta);
  return std::min(from_base, from_boundary);
}

Schedule epsilon_schedule(const Rational& epsilon, int m) {
  if (m < 1) throw InputError("schedule needs m >= 1");
  if (epsilon <= 0 || epsilon >= 1) throw InputError("epsilon must lie in (0, 1)");
  Schedule s;
  s.r_eps = {epsilon, schedule_exponent(m)};
  s.R_eps = {epsilon, Rational(-2, 2 * m + 1)};
  s.identity_holds = s.r_eps.base == s.R_eps.base && s.r_eps.exponent == 1 + s.R_eps.exponent;
  return s;
}

GluingBudget gluing_budget(int m, const Rational& delta) {
  const auto window = spectral::weight_window(m, spectral::WindowContext::gluing);
  if (!window.contains(delta))
    throw InputError("delta = " + to_string(delta) + " lies outside the gluing window " + window.to_string());
  const Rational rho = schedule_exponent(m);
  const Rational mm(m);
  GluingBudget g;
  g.m = m;
  g.delta = delta;
  g.principal = 2 * mm + rho * (2 - 2 * mm);

  const Rational base = m == 2 ? Rational(6 + rho * (-2 - delta)) : Rational(2 * mm + 2 + rho * (2 - 2 * mm - delta));
  // Model norm bound eps^{2m+4} r^{-4m-delta} R^{-2}, with R = eps^{rho-1}.
  const Rational model_raw = 2 * mm + 4 + rho * (-4 * mm - delta) - 2 * (rho - 1);
  g.bands = {
      {"base_correction", base, true, "norm bound of the base correction"},
      {"model_correction", model_raw + 2, true,
       "model correction norm bound times the eps^2 scale at which it enters the glued potential"},
      {"model_correction_unscaled", model_raw, false, "model correction norm bound on the model scale"},
      {"boundary_radial", 4 * mm + 2 + rho * (-6 * mm + 4 - delta), true, "radial boundary-data band"},
      {"boundary_nonradial", 2 * mm + 4 + rho * (2 - 4 * mm - delta), true, "non-radial boundary-data band"},
      {"scalar_curvature", 2 * mm, false, "scalar curvature perturbation"},
  };
  g.verdict = std::all_of(g.bands.begin(), g.bands.end(),
                          [&](const Band& b) { return !b.counted || b.exponent > g.principal; });
  return g;
}

GluingBudget gluing_budget(const TuningInputs& t) { return gluing_budget(t.m, t.delta); }

PiMultiple ale_volume(const Rational& R, int m, const Integer& order) {
  if (R <= 0) throw InputError("radius must be positive");
  if (order < 1) throw InputError("group order must be positive");
  return sphere_volume(m) * (pow(R, 2 * m) / (2 * Rational(m) * Rational(order)));
}

LeadingComparison leading_b_comparison(const TuningInputs& t, const PiMultiple& B2m) {
  LeadingComparison out;
  out.expansion_value = Rational(t.order) * t.b / (2 * Rational(t.m - 1));
  out.coefficient_value = B2m;
  out.ratio = PiMultiple(out.expansion_value) / B2m;
  out.coincide = out.ratio == PiMultiple(1);
  return out;
}

TuningReport run_tuning(const TuningInputs& t) {
  t.validate();
  TuningReport r;
  r.inputs = t;
  r.B = B_coefficient(t);
  if (t.m >= 3) r.C = C_coefficient(t, r.B.radicand);
  r.w4 = w4_radial_coefficient(t);
  r.tuning_ok = t.c_value() == t.s * t.b;
  r.schedule = epsilon_schedule(t.epsilon, t.m);
  if (t.m >= 3) {
    r.b_tilde_2m_leading = tuned_b(t, r.B.radicand, 0, 0, 0, 0);
    r.b_tilde_error_exponent = tuned_b_error_exponent(t.m, t.delta);
  }
  if (r.tuning_ok) r.budget = gluing_budget(t);
  if (const auto R = r.schedule.R_eps.exact()) {
    r.ale_volume = ale_volume(*R, t.m, t.order);
    r.ale_volume_exact = true;
  }
  r.leading = leading_b_comparison(t, r.B.radicand);
  return r;
}

}  // namespace kcsc::tuning
