#include <doctest.h>

#include <cmath>

#include "kcsc/spectral/windows.hpp"
#include "kcsc/tuning/tuning.hpp"
#include "support/oracles.hpp"

using namespace kcsc;
using namespace kcsc::tuning;

namespace {

TuningInputs inputs(int m, Rational b, Integer order, Rational c_gamma, Rational s = 1) {
  TuningInputs t;
  t.m = m;
  t.b = std::move(b);
  t.order = std::move(order);
  t.c_gamma = std::move(c_gamma);
  t.s = std::move(s);
  t.epsilon = Rational(1, 1000);
  t.delta = Rational(9 - 4 * m, 2);  // midpoint of the gluing window
  return t;
}

// Expands the C bracket term by term from its definition, with B^{2m} written out in
// terms of b, |G|, c_gamma and |S^{2m-1}|; the sphere volume and c_gamma cancel by hand.
Rational expanded_C(int m, const Rational& s, const Rational& b, const Rational& order, const Rational& c) {
  const Rational mm(m);
  // 2 c_gamma B^{2m} (m-1)|S| / (m |G|) = 2 c_gamma (m-1)|S| b |G| / (2 c_gamma (m-1) |S| m |G|) = b / m.
  const Rational leading = b / mm;
  const Rational bracket = leading * s * (1 + (mm - 1) * (mm - 1) / (mm + 1)) - c;
  return order / (8 * (mm - 2) * (mm - 1)) * bracket;
}

}  // namespace

TEST_CASE("sphere volumes") {
  CHECK(sphere_volume(1) == PiMultiple(2, 1));
  CHECK(sphere_volume(2) == PiMultiple(2, 2));
  CHECK(sphere_volume(3) == PiMultiple(1, 3));
  CHECK(sphere_volume(4) == PiMultiple(Rational(1, 3), 4));
  CHECK(std::abs(sphere_volume(3).to_double() - std::pow(M_PI, 3)) < 1e-12);
  CHECK_THROWS_AS(sphere_volume(0), InputError);
}

TEST_CASE("B coefficient") {
  const auto three = B_coefficient(inputs(3, 1, 3, 1));
  CHECK(three.radicand == PiMultiple(Rational(3, 4), -3));
  CHECK(std::abs(three.value - std::pow(0.75 / std::pow(M_PI, 3), 1.0 / 6)) < 1e-12);

  const auto two = B_coefficient(inputs(2, 2, 2, 1));
  CHECK(two.radicand == PiMultiple(1, -2));

  // b |G| = 2 c_gamma (m-1) |S|: with c_gamma = 1/(4 pi^3) impossible rationally, so use the radicand directly.
  TuningInputs unit = inputs(3, 4, 1, 1);
  const auto unit_b = B_coefficient(unit);
  CHECK(unit_b.radicand == PiMultiple(1, -3));
  CHECK(std::abs(unit_b.value - 1 / std::sqrt(M_PI)) < 1e-12);

  CHECK_THROWS_AS(B_coefficient(inputs(3, 0, 1, 1)), InputError);
  CHECK_THROWS_AS(B_coefficient(inputs(3, 1, 1, 0)), InputError);
  CHECK_THROWS_AS(B_coefficient(inputs(3, 1, 0, 1)), InputError);
}

TEST_CASE("property: the B radicand is linear in b and inverse in c_gamma") {
  oracle::Gen gen(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = static_cast<int>(gen.integer(2, 6));
    const Rational b(gen.integer(1, 9), gen.integer(1, 5)), cg(gen.integer(1, 9), gen.integer(1, 5));
    const Integer order = gen.integer(1, 12);
    const Rational lam(gen.integer(1, 9), gen.integer(1, 5));
    const auto base = B_coefficient(inputs(m, b, order, cg)).radicand;
    CHECK(B_coefficient(inputs(m, b * lam, order, cg)).radicand == base * lam);
    CHECK(B_coefficient(inputs(m, b, order, cg * lam)).radicand == base / lam);
  }
}

TEST_CASE("C coefficient") {
  TuningInputs zero = inputs(3, 1, 1, 1, 0);
  zero.c = Rational(0);
  CHECK(C_coefficient(zero, B_coefficient(zero).radicand).is_zero());

  const TuningInputs t = inputs(3, 1, 1, 1);
  CHECK(C_coefficient(t, B_coefficient(t).radicand) == PiMultiple(Rational(-1, 48)));
  // Independent of c_gamma once B is substituted.
  for (const Rational cg : {Rational(1, 7), Rational(5), Rational(22, 3)}) {
    const TuningInputs u = inputs(3, 1, 1, cg);
    CHECK(C_coefficient(u, B_coefficient(u).radicand) == PiMultiple(Rational(-1, 48)));
  }
  CHECK_THROWS_AS(C_coefficient(inputs(2, 1, 1, 1), PiMultiple(1, -2)), InputError);
}

TEST_CASE("property: C agrees with the substitution identity") {
  oracle::Gen gen(43);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = static_cast<int>(gen.integer(3, 7));
    const Rational s(gen.integer(0, 9), gen.integer(1, 4)), b(gen.integer(1, 9), gen.integer(1, 4));
    const Rational cg(gen.integer(1, 9), gen.integer(1, 4));
    const Integer order = gen.integer(1, 12);
    TuningInputs t = inputs(m, b, order, cg, s);
    const PiMultiple B2m = B_coefficient(t).radicand;
    const PiMultiple C = C_coefficient(t, B2m);
    CHECK(C.rational() == expanded_C(m, s, b, Rational(order), s * b));
    // With c = s b the bracket is s b ((m^2-m+2)/(m(m+1)) - 1).
    const Rational mm(m);
    const Rational bracket = s * b * ((mm * mm - mm + 2) / (mm * (mm + 1)) - 1);
    CHECK(C.rational() == Rational(order) / (8 * (mm - 2) * (mm - 1)) * bracket);
    // An explicit c away from the tuning.
    t.c = s * b + 1;
    CHECK(C_coefficient(t, B2m).rational() == expanded_C(m, s, b, Rational(order), s * b + 1));
  }
}

TEST_CASE("W4 radial coefficient") {
  CHECK(w4_radial_coefficient(inputs(3, 1, 1, 1, 0)).coeff == 0);
  const auto three = w4_radial_coefficient(inputs(3, 1, 1, 1, 24));
  CHECK(three.coeff == 2);
  CHECK(three.exponent == -2);
  CHECK_FALSE(three.log_branch);
  const auto two = w4_radial_coefficient(inputs(2, 1, 1, 1, 6));
  CHECK(two.coeff == -1);
  CHECK(two.log_branch);
}

TEST_CASE("tuning check") {
  const Rational s(3, 2);
  CHECK(check_tuning(rat_vector({1, 2}), rat_vector({s, 2 * s}), s));
  CHECK(check_tuning(rat_vector({5, 7}), rat_vector({0, 0}), 0));
  CHECK_FALSE(check_tuning(rat_vector({1, 1}), rat_vector({s, 2 * s}), s));
  CHECK_THROWS_AS(check_tuning(rat_vector({1}), rat_vector({1, 1}), 1), InputError);
  oracle::Gen gen(47);
  for (int trial = 0; trial < 100; ++trial) {
    const RatVector b = gen.rat_matrix(3, 1, -3, 3).col(0), c = gen.rat_matrix(3, 1, -3, 3).col(0);
    const Rational sv(gen.integer(0, 3));
    CHECK(check_tuning(b, c, sv) == is_zero(RatVector(c - b * sv)));
  }
}

TEST_CASE("tuned b") {
  for (int m = 3; m <= 5; ++m) {
    const TuningInputs t = inputs(m, Rational(3, 2), 4, Rational(2, 5));
    const PiMultiple B2m = B_coefficient(t).radicand;
    CHECK(tuned_b(t, B2m, 0, 0, 0, 0) == PiSum(B2m));
    const Rational half = pow(t.epsilon, 2 * m) / 2;
    CHECK(tuned_b(t, B2m, half, 0, 0, 0) == PiSum(B2m * Rational(1, 2)));
    // Boundary data adds a rational term with no pi.
    const Rational r_eps(1, 10);
    const PiSum with_data = tuned_b(t, B2m, 0, 1, 4 * m - 8, r_eps);
    const Rational expected = 2 * pow(r_eps, 2 * m - 2) / (t.c_gamma * pow(t.epsilon, 2 * m));
    CHECK(with_data.terms.at(0) == expected);
    CHECK(with_data.terms.at(-m) == B2m.coeff);
  }
  const TuningInputs two = inputs(2, 1, 1, 1);
  CHECK_THROWS_AS(tuned_b(two, PiMultiple(1, -2), 0, 0, 0, 0), InputError);

  CHECK(tuned_b_error_exponent(3, Rational(-3, 2)) == Rational(3, 14));
  // Positive at the window midpoint for m = 3, 4; from m = 5 on the base term turns negative there.
  for (int m = 3; m <= 6; ++m) {
    const auto w = spectral::weight_window(m, spectral::WindowContext::gluing);
    CHECK((tuned_b_error_exponent(m, (w.lo + w.hi) / 2) > 0) == (m <= 4));
  }
}

TEST_CASE("epsilon schedule") {
  const Schedule s = epsilon_schedule(Rational(1, 10000000), 3);
  CHECK(s.identity_holds);
  REQUIRE(s.r_eps.exact());
  REQUIRE(s.R_eps.exact());
  CHECK(*s.r_eps.exact() == Rational(1, 100000));
  CHECK(*s.R_eps.exact() == 100);

  oracle::Gen gen(53);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = static_cast<int>(gen.integer(2, 5));
    const Rational t(gen.integer(1, 4), gen.integer(5, 9));
    const Schedule sc = epsilon_schedule(pow(t, 2 * m + 1), m);
    CHECK(sc.identity_holds);
    CHECK(*sc.r_eps.exact() == pow(t, 2 * m - 1));
    CHECK(*sc.R_eps.exact() == pow(t, -2));
    CHECK(sc.r_eps.to_double() < 1);
    CHECK(sc.R_eps.to_double() > 1);
    CHECK(sc.r_eps.exponent == 1 + sc.R_eps.exponent);
  }
  const Schedule irr = epsilon_schedule(Rational(1, 2), 3);
  CHECK_FALSE(irr.r_eps.exact());
  CHECK(irr.identity_holds);
  CHECK_THROWS_AS(epsilon_schedule(1, 3), InputError);
  CHECK_THROWS_AS(epsilon_schedule(0, 3), InputError);
}

TEST_CASE("gluing budget at the reference weight") {
  const GluingBudget g = gluing_budget(3, Rational(-3, 2));
  CHECK(g.principal == Rational(44, 14));
  CHECK(g.verdict);
  auto band = [&](const std::string& name) {
    for (const auto& b : g.bands)
      if (b.name == name) return b;
    FAIL("missing band " << name);
    return Band{};
  };
  CHECK(band("base_correction").exponent == Rational(87, 14));
  CHECK(band("model_correction").exponent == Rational(71, 14));
  CHECK(band("model_correction_unscaled").exponent == Rational(43, 14));
  CHECK_FALSE(band("model_correction_unscaled").counted);
  CHECK(band("boundary_radial").exponent == Rational(71, 14));
  CHECK(band("boundary_nonradial").exponent == Rational(55, 14));
  CHECK(band("scalar_curvature").exponent == 6);
  for (const auto& b : g.bands)
    if (b.counted) CHECK(b.exponent > g.principal);

  CHECK_THROWS_AS(gluing_budget(3, Rational(-1)), InputError);
  CHECK_THROWS_AS(gluing_budget(3, Rational(-5, 2)), InputError);

  const GluingBudget two = gluing_budget(2, Rational(1, 2));
  CHECK(two.verdict);
  CHECK(two.bands[0].exponent == 6 + Rational(3, 5) * Rational(-5, 2));
}

TEST_CASE("property: gluing budget exponents are monotone in delta") {
  for (int m = 2; m <= 6; ++m) {
    const auto w = spectral::weight_window(m, spectral::WindowContext::gluing);
    std::vector<GluingBudget> grid;
    for (int i = 1; i < 20; ++i) grid.push_back(gluing_budget(m, w.lo + (w.hi - w.lo) * Rational(i, 20)));
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      // A verdict that holds at some delta holds at every smaller delta.
      if (grid[i + 1].verdict) CHECK(grid[i].verdict);
      if (m <= 4) CHECK(grid[i].verdict);
      for (std::size_t j = 0; j < grid[i].bands.size(); ++j) {
        // Exponents are nonincreasing as delta grows; the delta-free band stays put.
        CHECK(grid[i].bands[j].exponent >= grid[i + 1].bands[j].exponent);
      }
    }
  }
}

TEST_CASE("ALE volumes") {
  CHECK(ale_volume(1, 2, 1) == PiMultiple(Rational(1, 2), 2));
  CHECK(ale_volume(1, 3, 3) == PiMultiple(Rational(1, 18), 3));
  for (int m = 1; m <= 5; ++m) CHECK(ale_volume(2, m, 5) == ale_volume(1, m, 5) * pow(Rational(2), 2 * m));
  CHECK_THROWS_AS(ale_volume(0, 3, 1), InputError);
}

TEST_CASE("leading b comparison") {
  const TuningInputs t = inputs(3, 1, 3, 1);
  const auto cmp = leading_b_comparison(t, B_coefficient(t).radicand);
  CHECK(cmp.expansion_value == Rational(3, 4));
  CHECK(cmp.coefficient_value == PiMultiple(Rational(3, 4), -3));
  CHECK(cmp.ratio == PiMultiple(1, 3));
  CHECK_FALSE(cmp.coincide);
  for (const Rational s : {Rational(0), Rational(5)}) {
    const TuningInputs u = inputs(3, 1, 3, 1, s);
    CHECK(leading_b_comparison(u, B_coefficient(u).radicand).expansion_value == Rational(3, 4));
  }
  // The ratio is c_gamma |S|; it is one only if the pi power also vanishes, which never happens
  // for rational c_gamma, so coincidence is checked on a hand-built radicand.
  const auto same = leading_b_comparison(t, PiMultiple(Rational(3, 4)));
  CHECK(same.coincide);
}

TEST_CASE("full tuning report") {
  TuningInputs t = inputs(3, 1, 3, 1);
  t.epsilon = Rational(1, 10000000);
  t.delta = Rational(-3, 2);
  const auto r = run_tuning(t);
  CHECK(r.tuning_ok);
  REQUIRE(r.budget);
  CHECK(r.budget->verdict);
  REQUIRE(r.b_tilde_2m_leading);
  CHECK(*r.b_tilde_2m_leading == PiSum(r.B.radicand));
  CHECK(*r.b_tilde_error_exponent == Rational(3, 14));
  CHECK(r.ale_volume_exact);
  CHECK(r.ale_volume == ale_volume(100, 3, 3));

  t.c = Rational(2);
  const auto off = run_tuning(t);
  CHECK_FALSE(off.tuning_ok);
  CHECK_FALSE(off.budget);

  const auto two = run_tuning(inputs(2, 1, 2, 1));
  CHECK_FALSE(two.C);
  CHECK_FALSE(two.b_tilde_2m_leading);
  CHECK(two.w4.log_branch);
  REQUIRE(two.budget);
}
