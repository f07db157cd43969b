#include "kcsc/spectral/radial_profile.hpp"

#include <algorithm>
#include <map>

#include "kcsc/spectral/eigen_data.hpp"

namespace kcsc::spectral {

namespace {

void check_mode(int m, long gamma) {
  if (m < 2) throw InputError("biharmonic extensions need m >= 2");
  if (gamma < 0) throw InputError("mode index must be nonnegative");
}

}  // namespace

RadialProfile& RadialProfile::normalize() {
  std::map<std::pair<long, int>, Rational> acc;
  for (const auto& t : terms) acc[{t.exponent, t.log_power}] += t.coeff;
  terms.clear();
  for (const auto& [key, c] : acc)
    if (c != 0) terms.push_back({c, key.first, key.second});
  return *this;
}

bool RadialProfile::is_zero() const {
  return std::all_of(terms.begin(), terms.end(), [](const RadialTerm& t) { return t.coeff == 0; });
}

Rational RadialProfile::value_at_one() const {
  Rational v = 0;
  for (const auto& t : terms)
    if (t.log_power == 0) v += t.coeff;
  return v;
}

Rational RadialProfile::derivative_at_one() const {
  // d/dr r^a (log r)^p at r = 1 is a for p = 0, 1 for p = 1, and 0 otherwise.
  Rational v = 0;
  for (const auto& t : terms) {
    if (t.log_power == 0) v += t.coeff * t.exponent;
    if (t.log_power == 1) v += t.coeff;
  }
  return v;
}

std::string RadialProfile::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += "(" + kcsc::to_string(t.coeff) + ")*r^" + std::to_string(t.exponent);
    if (t.log_power == 1) out += "*log(r)";
    if (t.log_power > 1) out += "*log(r)^" + std::to_string(t.log_power);
  }
  return out;
}

RadialProfile operator+(const RadialProfile& a, const RadialProfile& b) {
  if (a.m != b.m || a.gamma != b.gamma) throw InputError("profiles belong to different modes");
  RadialProfile out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  out.normalize();
  return out;
}

RadialProfile operator*(const RadialProfile& a, const Rational& q) {
  RadialProfile out = a;
  for (auto& t : out.terms) t.coeff *= q;
  out.normalize();
  return out;
}

RadialProfile operator-(const RadialProfile& a, const RadialProfile& b) { return a + b * Rational(-1); }

Integer radial_laplacian_coefficient(long a, int m, long gamma) { return Integer(a) * (a + 2 * m - 2) + eigenvalue(m, gamma); }

RadialProfile laplacian(const RadialProfile& p) {
  // Laplacian of r^a L^p Phi with L = log r:
  //   mu(a) r^{a-2} L^p + p(2a+2m-2) r^{a-2} L^{p-1} + p(p-1) r^{a-2} L^{p-2}.
  RadialProfile out{p.m, p.gamma, {}};
  for (const auto& t : p.terms) {
    const long a = t.exponent;
    const int k = t.log_power;
    out.terms.push_back({t.coeff * Rational(radial_laplacian_coefficient(a, p.m, p.gamma)), a - 2, k});
    if (k >= 1) out.terms.push_back({t.coeff * Rational(k * (2 * a + 2 * p.m - 2)), a - 2, k - 1});
    if (k >= 2) out.terms.push_back({t.coeff * Rational(k * (k - 1)), a - 2, k - 2});
  }
  out.normalize();
  return out;
}

RadialProfile outer_extension(int m, long gamma, const Rational& h, const Rational& k) {
  check_mode(m, gamma);
  RadialProfile p{m, gamma, {}};
  if (m == 2 && gamma == 0) {
    // r^{-2} and log r span the radial biharmonic functions that stay bounded relative to the Green function.
    p.terms = {{h, -2, 0}, {k / 2, 0, 1}};
  } else {
    const Rational q = k / (4 * Rational(m + gamma - 2));
    p.terms = {{h + q, 2 - 2 * m - gamma, 0}, {-q, 4 - 2 * m - gamma, 0}};
  }
  p.normalize();
  return p;
}

RadialProfile inner_extension(int m, long gamma, const Rational& h, const Rational& k) {
  check_mode(m, gamma);
  const Rational q = k / (4 * Rational(m + gamma));
  RadialProfile p{m, gamma, {{h - q, gamma, 0}, {q, gamma + 2, 0}}};
  p.normalize();
  return p;
}

BiharmonicCheck verify_biharmonic(const RadialProfile& p) {
  const RadialProfile lap = laplacian(p);
  BiharmonicCheck out;
  out.biharmonic = laplacian(lap).is_zero();
  out.value = p.value_at_one();
  out.laplacian = lap.value_at_one();
  return out;
}

}  // namespace kcsc::spectral
