#include "kcsc/tuning/symbolic.hpp"

#include <cmath>
#include <numbers>

#include <gmp.h>

namespace kcsc::tuning {

namespace {

// log of a positive rational without overflowing doubles.
long double log_rational(const Rational& q) {
  auto log_int = [](const Integer& z) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.backend().data());
    return std::log(static_cast<long double>(mant)) + static_cast<long double>(exp) * std::numbers::ln2_v<long double>;
  };
  return log_int(boost::multiprecision::numerator(q)) - log_int(boost::multiprecision::denominator(q));
}

std::string pi_suffix(int p) {
  if (p == 0) return "";
  if (p == 1) return "*pi";
  return "*pi^" + std::to_string(p);
}

}  // namespace

Rational PiMultiple::rational() const {
  if (coeff == 0 || pi_pow == 0) return coeff;
  throw InputError("value " + to_string() + " is not rational");
}

double PiMultiple::to_double() const {
  return static_cast<double>(kcsc::to_double(coeff) * std::pow(std::numbers::pi_v<long double>, pi_pow));
}

std::string PiMultiple::to_string() const {
  if (coeff == 0) return "0";
  return kcsc::to_string(coeff) + pi_suffix(pi_pow);
}

PiMultiple operator/(const PiMultiple& a, const PiMultiple& b) {
  if (b.coeff == 0) throw InputError("division by zero");
  return {a.coeff / b.coeff, a.pi_pow - b.pi_pow};
}

PiMultiple operator+(const PiMultiple& a, const PiMultiple& b) {
  if (a.coeff == 0) return b;
  if (b.coeff == 0) return a;
  if (a.pi_pow != b.pi_pow)
    throw InputError("cannot add " + a.to_string() + " and " + b.to_string() + " as a single pi multiple");
  return {a.coeff + b.coeff, a.pi_pow};
}

PiSum& PiSum::add(const PiMultiple& x) {
  if (x.coeff == 0) return *this;
  Rational& slot = terms[x.pi_pow];
  slot += x.coeff;
  if (slot == 0) terms.erase(x.pi_pow);
  return *this;
}

PiSum& PiSum::add(const PiSum& x) {
  for (const auto& [p, c] : x.terms) add(PiMultiple(c, p));
  return *this;
}

PiSum PiSum::scaled(const Rational& q) const {
  PiSum out;
  for (const auto& [p, c] : terms) out.add(PiMultiple(c * q, p));
  return out;
}

PiMultiple PiSum::single() const {
  if (terms.empty()) return {};
  if (terms.size() > 1) throw InputError("expression " + to_string() + " has several pi powers");
  return {terms.begin()->second, terms.begin()->first};
}

double PiSum::to_double() const {
  double total = 0;
  for (const auto& [p, c] : terms) total += PiMultiple(c, p).to_double();
  return total;
}

std::string PiSum::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += PiMultiple(it->second, it->first).to_string();
  }
  return out;
}

std::optional<Integer> exact_root(const Integer& z, unsigned long k) {
  if (z < 0 || k == 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.backend().data(), z.backend().data(), k) == 0) return std::nullopt;
  return r;
}

std::optional<Rational> RationalPower::exact() const {
  if (base <= 0) throw InputError("fractional power of a nonpositive base");
  const Integer p = boost::multiprecision::numerator(exponent);
  const Integer q = boost::multiprecision::denominator(exponent);
  const auto num = exact_root(boost::multiprecision::numerator(base), q.convert_to<unsigned long>());
  const auto den = exact_root(boost::multiprecision::denominator(base), q.convert_to<unsigned long>());
  if (!num || !den) return std::nullopt;
  return pow(Rational(*num, *den), p.convert_to<long>());
}

double RationalPower::to_double() const {
  if (base <= 0) throw InputError("fractional power of a nonpositive base");
  return static_cast<double>(std::exp(log_rational(base) * static_cast<long double>(kcsc::to_double(exponent))));
}

std::string RationalPower::to_string() const {
  return "(" + kcsc::to_string(base) + ")^(" + kcsc::to_string(exponent) + ")";
}

Rational pow(const Rational& q, long n) {
  if (n < 0) {
    if (q == 0) throw InputError("zero to a negative power");
    return pow(Rational(1) / q, -n);
  }
  Rational out = 1, b = q;
  while (n > 0) {
    if (n & 1) out *= b;
    b *= b;
    n >>= 1;
  }
  return out;
}

Integer factorial(long m) {
  Integer f = 1;
  for (long i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace kcsc::tuning
