#ifndef KCSC_TUNING_TUNING_HPP
#define KCSC_TUNING_TUNING_HPP

#include <optional>
#include <string>
#include <vector>

#include "kcsc/lattice/types.hpp"
#include "kcsc/tuning/symbolic.hpp"

namespace kcsc::tuning {

/**
 * Data of one singular point in the gluing. c_gamma is the constant in the
 * expansion of the Ricci-flat ALE potential (it depends on the chosen ALE metric
 * and has no default). When `c` is absent the tuned value s * b is used.
 */
struct TuningInputs {
  int m = 3;
  Rational s = 1;
  Integer order = 1;
  Rational b = 1;
  Rational c_gamma;
  Rational epsilon;
  Rational delta;
  std::optional<Rational> c;

  Rational c_value() const { return c ? *c : s * b; }
  /// Throws InputError on nonpositive b, c_gamma, order or epsilon, or epsilon >= 1.
  void validate() const;
};

/// |S^{2m-1}| = 2 pi^m / (m-1)!.
PiMultiple sphere_volume(int m);

struct BCoefficient {
  PiMultiple radicand;  // B^{2m}
  double value = 0;     // B, the positive 2m-th root
};

/// B^{2m} = b |G| / (2 c_gamma (m-1) |S^{2m-1}|).
BCoefficient B_coefficient(const TuningInputs& t);

/**
 * C = |G|/(8(m-2)(m-1)) [2 c_gamma B^{2m} ((m-1)|S|/(m|G|)) s (1 + (m-1)^2/(m+1)) - c].
 * Only defined for m >= 3.
 */
PiMultiple C_coefficient(const TuningInputs& t, const PiMultiple& B2m);

struct W4Coefficient {
  Rational coeff;
  bool log_branch = false;  // m = 2: coefficient of log|x|
  long exponent = 0;        // m >= 3: power of |x|
};

/// m >= 3: c_gamma (m-1) s / (2(m-2)m(m+1)) on |x|^{4-2m}; m = 2: -c_gamma s / 6 on log|x|.
W4Coefficient w4_radial_coefficient(const TuningInputs& t);

/// c = s b componentwise.
bool check_tuning(const RatVector& b, const RatVector& c, const Rational& s);

/**
 * b~^{2m} = B^{2m}(1 - f_hat/eps^{2m}) + (h0 + k0/(4m-8)) r_eps^{2m-2} / (c_gamma eps^{2m}).
 * Unsupported for m = 2.
 */
PiSum tuned_b(const TuningInputs& t, const PiMultiple& B2m, const Rational& f_hat, const Rational& h0,
              const Rational& k0, const Rational& r_eps);

/**
 * eps-exponent of |b~^{2m} - B^{2m}| when f_hat is at the base-correction bound and
 * (h0, k0) at the radial boundary-data band: the smaller of 2 + rho(2-2m-delta)
 * and 2m+2 + rho(2-4m-delta), rho = (2m-1)/(2m+1). m >= 3.
 */
Rational tuned_b_error_exponent(int m, const Rational& delta);

/// (2m-1)/(2m+1): r_eps = eps^rho.
Rational schedule_exponent(int m);

struct Schedule {
  RationalPower r_eps;  // eps^{(2m-1)/(2m+1)}
  RationalPower R_eps;  // eps^{-2/(2m+1)} = r_eps / eps
  bool identity_holds = false;  // exponent of r_eps equals 1 + exponent of R_eps
};

Schedule epsilon_schedule(const Rational& epsilon, int m);

struct Band {
  std::string name;
  Rational exponent;     // magnitude is eps^exponent
  bool counted = false;  // takes part in the verdict
  std::string note;
};

struct GluingBudget {
  int m = 0;
  Rational delta;
  Rational principal;  // 2m + rho(2-2m)
  std::vector<Band> bands;
  bool verdict = false;  // every counted band exponent > principal
};

/// Exponent comparison of the correction bands against the principal band; delta must lie in the gluing window.
GluingBudget gluing_budget(int m, const Rational& delta);
GluingBudget gluing_budget(const TuningInputs& t);

/// |S^{2m-1}| R^{2m} / (2m |G|).
PiMultiple ale_volume(const Rational& R, int m, const Integer& order);

struct LeadingComparison {
  Rational expansion_value;  // |G| b / (2(m-1))
  PiMultiple coefficient_value;  // B^{2m}
  PiMultiple ratio;        // expansion_value / B^{2m} = c_gamma |S^{2m-1}|
  bool coincide = false;
};

LeadingComparison leading_b_comparison(const TuningInputs& t, const PiMultiple& B2m);

struct TuningReport {
  TuningInputs inputs;
  BCoefficient B;
  std::optional<PiMultiple> C;  // absent for m = 2
  W4Coefficient w4;
  bool tuning_ok = false;
  std::optional<PiSum> b_tilde_2m_leading;  // unperturbed tuned value, absent for m = 2
  std::optional<Rational> b_tilde_error_exponent;
  Schedule schedule;
  std::optional<GluingBudget> budget;  // only when tuning_ok
  PiMultiple ale_volume;                // of the region |x| < R_eps, when R_eps is exact
  bool ale_volume_exact = false;
  LeadingComparison leading;
};

TuningReport run_tuning(const TuningInputs& t);

}  // namespace kcsc::tuning

#endif  // KCSC_TUNING_TUNING_HPP
