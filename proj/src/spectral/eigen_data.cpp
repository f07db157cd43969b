#include "kcsc/spectral/eigen_data.hpp"

#include <vector>

namespace kcsc::spectral {

namespace {

void check_m(int m) {
  if (m < 1) throw InputError("complex dimension must be positive");
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out = 1;
  for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

Integer scaled_weight(const Rational& w, const Integer& d) {
  const Rational x = w * d;
  if (boost::multiprecision::denominator(x) != 1)
    throw InputError("generator weight is not compatible with its order");
  return boost::multiprecision::numerator(x);
}

}  // namespace

Integer eigenvalue(int m, long gamma) {
  check_m(m);
  if (gamma < 0) throw InputError("mode index must be nonnegative");
  return -Integer(gamma) * (2 * m - 2 + gamma);
}

Integer monomial_count(long n, long degree) {
  if (degree < 0) return 0;
  return binomial(degree + n - 1, n - 1);
}

Integer harmonic_dimension(int m, long gamma) {
  check_m(m);
  if (gamma < 0) return 0;
  return monomial_count(2 * m, gamma) - monomial_count(2 * m, gamma - 2);
}

Integer harmonic_dimension_closed_form(int m, long gamma) {
  check_m(m);
  const long n = 2 * m;
  if (gamma < 0) return 0;
  if (gamma == 0) return 1;
  if (n == 2) return 2;
  // (2g+n-2)(g+n-3)!/(g!(n-2)!) = (2g+n-2)/(n-2) * binomial(g+n-3, g)
  return Integer(2 * gamma + n - 2) * binomial(gamma + n - 3, gamma) / (n - 2);
}

Integer invariant_monomial_count(const toric::QuotientGroup& g, long degree) {
  if (degree < 0) return 0;
  const int m = g.dim();
  check_m(m);
  const std::size_t ngen = g.divisors.size();
  // Residue tuples (one per generator) are packed in mixed radix.
  std::vector<long> radix(ngen);
  long states = 1;
  for (std::size_t i = 0; i < ngen; ++i) {
    radix[i] = g.divisors[i].convert_to<long>();
    states *= radix[i];
  }
  // Character of z_k: residue of w_k * d for each generator.
  std::vector<std::vector<long>> shift(static_cast<std::size_t>(m), std::vector<long>(ngen));
  for (int k = 0; k < m; ++k)
    for (std::size_t i = 0; i < ngen; ++i)
      shift[static_cast<std::size_t>(k)][i] = scaled_weight(g.generator_weights[i](k), g.divisors[i]).convert_to<long>();

  auto moved = [&](long state, int k, long times) {
    long out = 0, place = 1;
    for (std::size_t i = 0; i < ngen; ++i) {
      const long digit = (state / place) % radix[i];
      long next = (digit + times * shift[static_cast<std::size_t>(k)][i]) % radix[i];
      if (next < 0) next += radix[i];
      out += next * place;
      place *= radix[i];
    }
    return out;
  };

  // dp[deg][state]: monomials in the variables seen so far with that degree and character.
  const std::size_t width = static_cast<std::size_t>(states);
  std::vector<std::vector<Integer>> dp(static_cast<std::size_t>(degree + 1), std::vector<Integer>(width, 0));
  dp[0][0] = 1;
  for (int k = 0; k < m; ++k) {
    std::vector<std::vector<Integer>> next(dp.size(), std::vector<Integer>(width, 0));
    for (long deg = 0; deg <= degree; ++deg)
      for (long st = 0; st < states; ++st) {
        const Integer& here = dp[static_cast<std::size_t>(deg)][static_cast<std::size_t>(st)];
        if (here == 0) continue;
        // z_k^a zbar_k^b contributes degree a + b and character a - b.
        for (long a = 0; deg + a <= degree; ++a)
          for (long b = 0; deg + a + b <= degree; ++b)
            next[static_cast<std::size_t>(deg + a + b)][static_cast<std::size_t>(moved(st, k, a - b))] += here;
      }
    dp = std::move(next);
  }
  return dp[static_cast<std::size_t>(degree)][0];
}

Integer invariant_harmonic_dimension(const toric::QuotientGroup& g, long gamma) {
  if (gamma < 0) return 0;
  return invariant_monomial_count(g, gamma) - invariant_monomial_count(g, gamma - 2);
}

long first_invariant_mode(const toric::QuotientGroup& g) {
  if (g.is_trivial()) throw InputError("first invariant mode needs a nontrivial group");
  if (!toric::acts_freely_off_origin(g)) throw InputError("group does not act freely away from the origin");
  // |z|^2 is always invariant, so gamma = 2 terminates the search.
  for (long gamma = 1;; ++gamma)
    if (invariant_harmonic_dimension(g, gamma) > 0) {
      if (gamma < 2) throw InconsistencyError("free action with invariant linear functions");
      return gamma;
    }
}

WCorrectionFactors w_correction_mode_factors(int m) {
  if (m < 2) throw InputError("correction factors need m >= 2");
  auto inv_sq = [&](long gamma) {
    const Integer l = eigenvalue(m, gamma);
    return Rational(1) / Rational(l * l);
  };
  return {inv_sq(2), inv_sq(4), inv_sq(3), inv_sq(5), m == 2};
}

Rational psi4_radial_constant(int m, const Rational& s) {
  if (m < 1) throw InputError("complex dimension must be positive");
  return -s / (16 * Rational(m) * (m + 1));
}

}  // namespace kcsc::spectral
