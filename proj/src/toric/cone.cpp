#include "kcsc/toric/cone.hpp"

#include <functional>

#include "kcsc/lattice/elimination.hpp"
#include "kcsc/lattice/smith.hpp"

namespace kcsc::toric {

namespace {

Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) q -= 1;
  return q;
}

Rational frac(const Rational& q) {
  const Integer n = boost::multiprecision::numerator(q);
  const Integer d = boost::multiprecision::denominator(q);
  return q - Rational(floor_div(n, d));
}

bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

long small_order(const QuotientGroup& g) {
  if (g.order > kEnumerationLimit) throw InputError("group too large to enumerate");
  return g.order.convert_to<long>();
}

// Calls f on every k-element subset of {0..n-1}, in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

Cone Cone::from_rays(std::string label, const std::vector<IntVector>& rays) {
  if (rays.empty()) throw InputError("cone needs at least one ray");
  const Index m = rays.front().size();
  if (static_cast<Index>(rays.size()) != m)
    throw InputError("cone " + label + " is not simplicial and full-dimensional");
  Cone c;
  c.label = std::move(label);
  c.generators.resize(m, m);
  for (Index k = 0; k < m; ++k) {
    if (rays[static_cast<std::size_t>(k)].size() != m) throw InputError("ray dimension mismatch");
    c.generators.col(k) = rays[static_cast<std::size_t>(k)];
  }
  if (lattice::determinant(c.generators) == 0)
    throw InputError("cone " + c.label + " has linearly dependent generators");
  return c;
}

std::vector<RatVector> QuotientGroup::elements() const {
  const long n = small_order(*this);
  std::vector<RatVector> out;
  out.reserve(static_cast<std::size_t>(n));
  const Index m = dim();
  std::vector<long> digits(divisors.size(), 0);
  for (long e = 0; e < n; ++e) {
    RatVector w = RatVector::Zero(m);
    for (std::size_t i = 0; i < divisors.size(); ++i)
      if (digits[i] != 0) w += generator_weights[i] * Rational(digits[i]);
    out.push_back(fractional_part(w));
    // Mixed-radix increment.
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < divisors[i].convert_to<long>()) break;
      digits[i] = 0;
    }
  }
  return out;
}

QuotientGroup QuotientGroup::cyclic(const RatVector& weights) {
  QuotientGroup g;
  const RatVector w = fractional_part(weights);
  Integer order = 1;
  for (Index k = 0; k < w.size(); ++k) order = boost::multiprecision::lcm(order, boost::multiprecision::denominator(w(k)));
  g.order = order;
  g.ambient_dim = static_cast<int>(w.size());
  if (order > 1) {
    g.divisors.push_back(order);
    g.generator_weights.push_back(w);
  }
  return g;
}

RatVector fractional_part(const RatVector& w) {
  RatVector out(w.size());
  for (Index k = 0; k < w.size(); ++k) out(k) = frac(w(k));
  return out;
}

Integer cone_order(const Cone& c) { return abs(lattice::determinant(c.generators)); }

QuotientGroup quotient_group(const Cone& c) {
  const auto snf = lattice::smith_normal_form(c.generators);
  const auto diag = snf.elementary_divisors();
  // U A V = D, so x -> U x maps Z^m / A Z^m onto the sum of Z / d_i; its inverse sends e_i to U^{-1} e_i.
  const RatMatrix u_inv = lattice::inverse_exact(to_rational(snf.U));
  const RatMatrix a_inv = lattice::inverse_exact(to_rational(c.generators));

  QuotientGroup g;
  g.order = 1;
  g.ambient_dim = c.dim();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == 0) throw InputError("cone " + c.label + " is degenerate");
    g.order *= diag[i];
    if (diag[i] == 1) continue;
    g.divisors.push_back(diag[i]);
    g.generator_weights.push_back(fractional_part(a_inv * u_inv.col(static_cast<Index>(i))));
  }
  if (g.order != cone_order(c)) throw InconsistencyError("Smith form order disagrees with |det| for " + c.label);
  return g;
}

bool all_proper_faces_smooth(const Cone& c) {
  const int m = c.dim();
  for (int k = 1; k < m; ++k) {
    bool smooth = true;
    for_each_subset(m, k, [&](const std::vector<int>& face) {
      if (!smooth) return;
      Integer g = 0;
      for_each_subset(m, k, [&](const std::vector<int>& rows) {
        IntMatrix minor(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) minor(i, j) = c.generators(rows[static_cast<std::size_t>(i)], face[static_cast<std::size_t>(j)]);
        g = boost::multiprecision::gcd(g, lattice::determinant(minor));
      });
      if (g != 1) smooth = false;
    });
    if (!smooth) return false;
  }
  return true;
}

bool acts_freely_off_origin(const QuotientGroup& g) {
  const auto elems = g.elements();
  for (std::size_t e = 1; e < elems.size(); ++e)
    for (Index k = 0; k < elems[e].size(); ++k)
      if (elems[e](k) == 0) return false;
  return true;
}

bool is_isolated(const Cone& c) {
  const bool faces = all_proper_faces_smooth(c);
  const QuotientGroup g = quotient_group(c);
  if (g.order <= kEnumerationLimit && acts_freely_off_origin(g) != faces)
    throw InconsistencyError("isolatedness criteria disagree for " + c.label);
  return faces;
}

RatVector gorenstein_candidate(const Cone& c) {
  const RatMatrix at = to_rational(IntMatrix(c.generators.transpose()));
  return lattice::solve_exact(at, RatVector::Constant(c.dim(), Rational(-1)));
}

bool weights_in_special_unitary(const QuotientGroup& g) {
  for (const auto& w : g.elements())
    if (!is_integral(w.sum())) return false;
  return true;
}

SuTest is_su_singularity(const Cone& c) {
  const RatVector u = gorenstein_candidate(c);
  SuTest out;
  out.is_su = true;
  for (Index k = 0; k < u.size(); ++k)
    if (!is_integral(u(k))) out.is_su = false;
  if (out.is_su) {
    IntVector z(u.size());
    for (Index k = 0; k < u.size(); ++k) z(k) = boost::multiprecision::numerator(u(k));
    out.functional = z;
  }
  const QuotientGroup g = quotient_group(c);
  if (g.order <= kEnumerationLimit && weights_in_special_unitary(g) != out.is_su)
    throw InconsistencyError("special-unitary criteria disagree for " + c.label);
  return out;
}

}  // namespace kcsc::toric
