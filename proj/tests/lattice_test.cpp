#include <doctest.h>

#include "kcsc/lattice/elimination.hpp"
#include "kcsc/lattice/positive_kernel.hpp"
#include "kcsc/lattice/simplex.hpp"
#include "kcsc/lattice/smith.hpp"
#include "support/oracles.hpp"

using namespace kcsc;
using namespace kcsc::lattice;

namespace {

// Balancing matrices of the two surface examples, with the curvature factor set to 1.
RatMatrix two_spheres_matrix() {
  return rat_matrix({{-1, -1, 1, 1}, {-1, 1, -1, 1}}) * Rational(1, 2);
}
RatMatrix triangle_matrix() { return rat_matrix({{1, -1, 0}, {0, -1, 1}}) * Rational(2, 3); }

Integer abs_det(const IntMatrix& m) { return abs(determinant(m)); }

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("determinant of small integer matrices") {
    CHECK(determinant(IntMatrix(IntMatrix::Identity(3, 3))) == 1);
    const IntMatrix c1 = int_matrix({{-1, 0, -1}, {-1, -3, 1}, {-1, 0, 0}});
    const IntMatrix c2 = int_matrix({{1, 3, -1}, {-1, 0, -1}, {-1, 0, 0}});
    CHECK(determinant(c1) == oracle::cofactor_determinant(c1));
    CHECK(determinant(c2) == oracle::cofactor_determinant(c2));
    CHECK(abs_det(c1) == 3);
    CHECK(abs_det(c2) == 3);
    CHECK_THROWS_AS(determinant(int_matrix({{1, 2, 3}})), InputError);
  }

  TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
    oracle::Gen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
      const Index n = gen.integer(1, 5);
      const IntMatrix a = gen.int_matrix(n, n, -6, 6);
      REQUIRE(determinant(a) == oracle::cofactor_determinant(a));
      const RatMatrix q = a.cast<Rational>() * Rational(1, 3);
      REQUIRE(determinant(q) == oracle::cofactor_determinant(q));
    }
  }

  TEST_CASE("Smith normal form examples") {
    auto id = smith_normal_form(IntMatrix(IntMatrix::Identity(2, 2)));
    CHECK(exactly_equal(id.D, IntMatrix(IntMatrix::Identity(2, 2))));

    auto d = smith_normal_form(int_matrix({{2, 0}, {0, 4}}));
    CHECK(exactly_equal(d.D, int_matrix({{2, 0}, {0, 4}})));

    auto c1 = smith_normal_form(int_matrix({{-1, 0, -1}, {-1, -3, 1}, {-1, 0, 0}}));
    const auto divs = c1.elementary_divisors();
    CHECK(divs == std::vector<Integer>{1, 1, 3});
  }

  TEST_CASE("Smith normal form invariants on random matrices") {
    oracle::Gen gen(7);
    for (int trial = 0; trial < 300; ++trial) {
      const Index r = gen.integer(1, 4), c = gen.integer(1, 4);
      const IntMatrix a = gen.int_matrix(r, c, -9, 9);
      const auto s = smith_normal_form(a);
      REQUIRE(exactly_equal(s.U * a * s.V, s.D));
      REQUIRE(abs(determinant(s.U)) == 1);
      REQUIRE(abs(determinant(s.V)) == 1);
      const auto divs = s.elementary_divisors();
      for (Index i = 0; i < s.D.rows(); ++i)
        for (Index j = 0; j < s.D.cols(); ++j)
          if (i != j) REQUIRE(s.D(i, j) == 0);
      for (std::size_t k = 0; k + 1 < divs.size(); ++k) {
        REQUIRE(divs[k] >= 0);
        if (divs[k] == 0)
          REQUIRE(divs[k + 1] == 0);
        else
          REQUIRE(divs[k + 1] % divs[k] == 0);
      }
      if (r == c) {
        Integer prod = 1;
        for (const auto& x : divs) prod *= x;
        REQUIRE(prod == abs(determinant(a)));
      }
    }
  }

  TEST_CASE("rank and nullspace") {
    CHECK(rank(RatMatrix(RatMatrix::Zero(3, 4))) == 0);
    CHECK(nullspace(RatMatrix(RatMatrix::Identity(3, 3))).empty());

    for (Rational s : {Rational(1), Rational(7, 3), Rational(-2)}) {
      CHECK(rank(RatMatrix(two_spheres_matrix() * s)) == 2);
      CHECK(rank(RatMatrix(triangle_matrix() * s)) == 2);
    }

    const RatMatrix x2 = two_spheres_matrix();
    const auto k2 = nullspace(x2);
    REQUIRE(k2.size() == 2);
    for (const auto& v : k2) CHECK(is_zero(x2 * v));
    // Both expected vectors lie in the span: stacking them does not raise the rank.
    RatMatrix span(4, 4);
    span << k2[0], k2[1], rat_vector({1, 1, 1, 1}), rat_vector({1, -1, -1, 1});
    CHECK(rank(span) == 2);

    const auto k3 = nullspace(triangle_matrix());
    REQUIRE(k3.size() == 1);
    CHECK(exactly_equal(k3[0], rat_vector({1, 1, 1})));
  }

  TEST_CASE("rank plus nullity equals column count") {
    oracle::Gen gen(3);
    for (int trial = 0; trial < 300; ++trial) {
      const Index r = gen.integer(1, 5), c = gen.integer(1, 6);
      RatMatrix a = gen.rat_matrix(r, c, -2, 2) * Rational(gen.integer(1, 5), gen.integer(1, 5));
      const auto ns = nullspace(a);
      REQUIRE(rank(a) + static_cast<Index>(ns.size()) == c);
      for (const auto& v : ns) REQUIRE(is_zero(a * v));
    }
  }

  TEST_CASE("exact solve and inverse") {
    const RatMatrix a = rat_matrix({{2, 1}, {1, 3}});
    const RatVector x = solve_exact(a, rat_vector({1, 2}));
    CHECK(exactly_equal(x, rat_vector({Rational(1, 5), Rational(3, 5)})));
    CHECK(exactly_equal(inverse_exact(a), oracle::cramer_inverse(a)));
    CHECK_THROWS_AS(inverse_exact(rat_matrix({{1, 2}, {2, 4}})), InputError);
  }

  TEST_CASE("simplex on small programs") {
    // min x + y  s.t.  x - y = 1  ->  x = 1, y = 0.
    auto r = minimize(rat_matrix({{1, -1}}), rat_vector({1}), rat_vector({1, 1}));
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.objective == 1);
    CHECK(exactly_equal(r.x, rat_vector({1, 0})));

    auto inf = minimize(rat_matrix({{1, 1}}), rat_vector({-1}), rat_vector({0, 0}));
    CHECK(inf.status == LpStatus::infeasible);

    auto unb = minimize(rat_matrix({{1, -1}}), rat_vector({0}), rat_vector({-1, 0}));
    CHECK(unb.status == LpStatus::unbounded);

    // Redundant equality rows are tolerated.
    auto red = minimize(rat_matrix({{1, 1}, {2, 2}}), rat_vector({2, 4}), rat_vector({1, 2}));
    REQUIRE(red.status == LpStatus::optimal);
    CHECK(red.objective == 2);
  }

  TEST_CASE("positive kernel witness examples") {
    auto w2 = positive_nullspace_witness(two_spheres_matrix());
    REQUIRE(w2);
    CHECK(exactly_equal(*w2, rat_vector({1, 1, 1, 1})));

    auto w3 = positive_nullspace_witness(triangle_matrix());
    REQUIRE(w3);
    CHECK(exactly_equal(*w3, rat_vector({1, 1, 1})));

    CHECK_FALSE(positive_nullspace_witness(rat_matrix({{1, 1}})));
  }

  TEST_CASE("positive kernel witness against Fourier-Motzkin") {
    oracle::Gen gen(2024);
    int found = 0, absent = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const Index r = gen.integer(1, 3), c = gen.integer(1, 6);
      const RatMatrix m = gen.rat_matrix(r, c, -3, 3);
      const auto w = positive_nullspace_witness(m);
      const bool fm = oracle::fm_positive_kernel_exists(m);
      REQUIRE(w.has_value() == fm);
      if (w) {
        ++found;
        REQUIRE(is_zero(m * *w));
        REQUIRE(w->minCoeff() == 1);
      } else {
        ++absent;
      }
    }
    CHECK(found > 20);
    CHECK(absent > 20);
  }

  TEST_CASE("rank and witness existence are invariant under positive scaling") {
    oracle::Gen gen(99);
    for (int trial = 0; trial < 150; ++trial) {
      const Index r = gen.integer(1, 3), c = gen.integer(2, 5);
      const RatMatrix m = gen.rat_matrix(r, c, -3, 3);
      RatMatrix cols = m, rows = m;
      for (Index j = 0; j < c; ++j) cols.col(j) *= Rational(gen.integer(1, 7), gen.integer(1, 7));
      for (Index i = 0; i < r; ++i) rows.row(i) *= Rational(gen.integer(1, 7), gen.integer(1, 7));
      const bool base = positive_nullspace_witness(m).has_value();
      REQUIRE(rank(cols) == rank(m));
      REQUIRE(rank(rows) == rank(m));
      REQUIRE(positive_nullspace_witness(cols).has_value() == base);
      REQUIRE(positive_nullspace_witness(rows).has_value() == base);
    }
  }

  TEST_CASE("rational formatting and parsing") {
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(parse_rational(" 10/4 ") == Rational(5, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
  }
}
