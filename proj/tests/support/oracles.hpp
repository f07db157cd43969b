// Independent reference computations used only by the tests. They trade speed
// for transparency and share no code with the library beyond the number types.
#ifndef KCSC_TESTS_ORACLES_HPP
#define KCSC_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "kcsc/lattice/types.hpp"

namespace oracle {

using kcsc::Index;
using kcsc::IntMatrix;
using kcsc::IntVector;
using kcsc::Integer;
using kcsc::RatMatrix;
using kcsc::RatVector;
using kcsc::Rational;

/// Laplace expansion along the first row.
template <typename Scalar>
Scalar cofactor_determinant(const kcsc::MatrixX<Scalar>& a) {
  const Index n = a.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return a(0, 0);
  Scalar total = 0;
  for (Index j = 0; j < n; ++j) {
    kcsc::MatrixX<Scalar> minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r)
      for (Index c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = a(r, c);
    const Scalar term = a(0, j) * cofactor_determinant(minor);
    total += (j % 2 == 0) ? term : Scalar(-term);
  }
  return total;
}

/// Cramer's rule with cofactor determinants.
inline RatMatrix cramer_inverse(const RatMatrix& a) {
  const Index n = a.rows();
  const Rational det = cofactor_determinant(a);
  RatMatrix inv(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      RatMatrix minor(n - 1, n - 1);
      for (Index r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (Index c = 0, cc = 0; c < n; ++c)
          if (c != i) minor(rr, cc++) = a(r, c);
        ++rr;
      }
      const Rational cof = cofactor_determinant(minor) * (((i + j) % 2 == 0) ? 1 : -1);
      inv(i, j) = cof / det;
    }
  return inv;
}

/**
 * Fourier-Motzkin decision of {M b = 0, b >= 1}: eliminates every variable from
 * the inequality system and checks the remaining constant constraints.
 * Exponential, so meant for at most ~6 columns.
 */
inline bool fm_positive_kernel_exists(const RatMatrix& m) {
  struct Ineq {
    RatVector a;  // a . b <= c
    Rational c;
  };
  const Index n = m.cols();
  std::vector<Ineq> eqs, sys;
  for (Index i = 0; i < m.rows(); ++i) eqs.push_back({m.row(i).transpose(), 0});
  for (Index j = 0; j < n; ++j) {
    RatVector a = RatVector::Zero(n);
    a(j) = -1;
    sys.push_back({a, -1});
  }
  // Equalities first: solve one for a variable and substitute everywhere.
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    Index v = -1;
    for (Index j = 0; j < n; ++j)
      if (eqs[e].a(j) != 0) v = j;
    if (v < 0) {
      if (eqs[e].c != 0) return false;
      continue;
    }
    const Ineq piv = eqs[e];
    auto substitute = [&](Ineq& q) {
      if (q.a(v) == 0) return;
      const Rational f = q.a(v) / piv.a(v);
      q.a -= piv.a * f;
      q.c -= piv.c * f;
    };
    for (std::size_t k = e + 1; k < eqs.size(); ++k) substitute(eqs[k]);
    for (auto& q : sys) substitute(q);
  }
  auto normalize = [](Ineq q) {
    Rational scale = 0;
    for (Index j = 0; j < q.a.size(); ++j)
      if (q.a(j) != 0) {
        scale = abs(q.a(j));
        break;
      }
    if (scale != 0) {
      q.a /= scale;
      q.c /= scale;
    }
    return q;
  };
  for (Index v = 0; v < n; ++v) {
    std::vector<Ineq> pos, neg, keep;
    for (auto& q : sys) {
      if (q.a(v) > 0)
        pos.push_back(q);
      else if (q.a(v) < 0)
        neg.push_back(q);
      else
        keep.push_back(q);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        const Rational sp = -q.a(v), sq = p.a(v);
        keep.push_back(normalize({p.a * sp + q.a * sq, p.c * sp + q.c * sq}));
      }
    // Drop exact duplicates so the system stays small.
    std::vector<Ineq> unique;
    for (const auto& q : keep) {
      bool dup = false;
      for (const auto& u : unique)
        if (u.c == q.c && kcsc::exactly_equal(u.a, q.a)) dup = true;
      if (!dup) unique.push_back(q);
    }
    sys = std::move(unique);
  }
  for (const auto& q : sys)
    if (q.c < 0) return false;
  return true;
}

/**
 * Weights of all group elements of Z^m / A Z^m by walking the lattice points
 * of the half-open fundamental parallelepiped of the columns of A.
 */
inline std::vector<RatVector> parallelepiped_weights(const IntMatrix& a) {
  const Index m = a.rows();
  const RatMatrix inv = cramer_inverse(a.cast<Rational>());
  std::vector<Integer> lo(static_cast<std::size_t>(m), 0), hi(static_cast<std::size_t>(m), 0);
  for (Index i = 0; i < m; ++i)
    for (Index k = 0; k < m; ++k) {
      if (a(i, k) < 0) lo[static_cast<std::size_t>(i)] += a(i, k);
      if (a(i, k) > 0) hi[static_cast<std::size_t>(i)] += a(i, k);
    }
  std::vector<RatVector> out;
  IntVector x(m);
  std::function<void(Index)> rec = [&](Index i) {
    if (i == m) {
      const RatVector w = inv * x.cast<Rational>();
      for (Index k = 0; k < m; ++k)
        if (w(k) < 0 || w(k) >= 1) return;
      out.push_back(w);
      return;
    }
    for (Integer v = lo[static_cast<std::size_t>(i)]; v <= hi[static_cast<std::size_t>(i)]; ++v) {
      x(i) = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/**
 * Centroid and area of a convex polygon from its vertex set: sort by angle
 * around the vertex mean using exact cross products, then apply the shoelace
 * formulas.
 */
inline std::pair<RatVector, Rational> shoelace_centroid(std::vector<RatVector> pts) {
  RatVector c = RatVector::Zero(2);
  for (const auto& p : pts) c += p;
  c /= Rational(static_cast<long>(pts.size()));
  auto half = [&](const RatVector& p) { return (p(1) - c(1) < 0 || (p(1) == c(1) && p(0) - c(0) < 0)) ? 1 : 0; };
  std::sort(pts.begin(), pts.end(), [&](const RatVector& a, const RatVector& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return (a(0) - c(0)) * (b(1) - c(1)) - (a(1) - c(1)) * (b(0) - c(0)) > 0;
  });
  Rational area2 = 0;
  RatVector acc = RatVector::Zero(2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const RatVector& a = pts[i];
    const RatVector& b = pts[(i + 1) % pts.size()];
    const Rational cross = a(0) * b(1) - b(0) * a(1);
    area2 += cross;
    acc += (a + b) * cross;
  }
  return {acc / (Rational(3) * area2), area2 / 2};
}

/// Small seeded generator for hand-rolled property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  IntMatrix int_matrix(Index r, Index c, long lo, long hi) {
    IntMatrix m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) m(i, j) = integer(lo, hi);
    return m;
  }
  RatMatrix rat_matrix(Index r, Index c, long lo, long hi) { return int_matrix(r, c, lo, hi).cast<Rational>(); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

#endif  // KCSC_TESTS_ORACLES_HPP
