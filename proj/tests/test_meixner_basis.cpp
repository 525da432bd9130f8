#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "ortho/meixner_basis.hpp"

using ortho::column_norm;
using ortho::h_eval;
using ortho::h_eval_exact;
using ortho::h_orthogonality_sum;
using ortho::HFunction;
using ortho::HOrthoSum;
using ortho::illustration_overlap;
using ortho::meixner_norm_reference;
using ortho::meixner_norm_sum;
using ortho::orthogonal_block;
using ortho::phi_norm_row;
using ortho::Rational;
using ortho::recentering_coefficient;
using ortho::transform_entry;
using ortho::TransformEntry;
using ortho::TransformMatrix;

TEST_CASE("discrete basis function values") {
  const HFunction h1(Rational(0), 1);
  CHECK(h1.u() == Rational(2, 3));
  CHECK(h_eval_exact(h1, -1) == Rational(0));
  CHECK(h_eval_exact(h1, 0) == Rational(1));
  CHECK(h_eval_exact(h1, 1) == Rational(7, 9));
  const HFunction h2(Rational(0), 2);
  CHECK(h2.u() == Rational(3, 4));
  CHECK(h_eval_exact(h2, 1) == Rational(13, 18));
  // floating route agrees
  CHECK(h_eval(h1, 1.0) == doctest::Approx(7.0 / 9.0).epsilon(1e-14));
  CHECK(h_eval(h2, 1.0) == doctest::Approx(13.0 / 18.0).epsilon(1e-14));
  CHECK(h_eval(h1, -1.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(HFunction(Rational(-1, 2), 1), std::invalid_argument);
  CHECK_THROWS_AS(HFunction(Rational(0), -1), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(h_eval_exact(h1, -2)), std::invalid_argument);
}

TEST_CASE("continuous overlap illustration") {
  // frozen: n=1, m=0, alpha=0, beta=1/3
  CHECK(illustration_overlap(1, 0, Rational(0), Rational(1, 3)) == Rational(4, 3));
  for (const Rational& beta : {Rational(1, 5), Rational(2, 3), Rational(3, 2)}) {
    for (long n = 0; n <= 4; ++n)
      for (long m = 0; m <= 4; ++m)
        CHECK_NOTHROW(static_cast<void>(illustration_overlap(n, m, Rational(1, 2), beta)));
  }
  CHECK_THROWS_AS(static_cast<void>(illustration_overlap(1, 1, Rational(0), Rational(1))),
                  std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(illustration_overlap(1, 1, Rational(0), Rational(2))),
                  std::invalid_argument);
}

TEST_CASE("transform entries") {
  // frozen corner: n=m=1 at alpha=0 is (3/2)*(3/2)^2 = 27/8
  const TransformEntry e11 = transform_entry(1, 1, Rational(0));
  CHECK(e11.reduced == Rational(3, 2));
  CHECK(e11.prefactor.base == Rational(3, 2));
  CHECK(e11.prefactor.exponent == Rational(2));
  CHECK(e11.value == doctest::Approx(27.0 / 8.0).epsilon(1e-14));
  // row and column zero vanish except the unit corner
  CHECK(transform_entry(0, 0, Rational(0)).reduced == Rational(1));
  for (long j = 1; j <= 6; ++j) {
    CHECK(transform_entry(0, j, Rational(0)).reduced == Rational(0));
    CHECK(transform_entry(j, 0, Rational(0)).reduced == Rational(0));
    CHECK(transform_entry(0, j, Rational(1, 2)).reduced == Rational(0));
  }
  // the closed-form cross check runs inside; reaching here means it held
  for (const Rational& alpha : {Rational(0), Rational(1, 2), Rational(2)}) {
    for (long n = 1; n <= 6; ++n)
      for (long m = 1; m <= 6; ++m)
        CHECK_NOTHROW(static_cast<void>(transform_entry(n, m, alpha)));
  }
}

TEST_CASE("norm helpers") {
  // N_0 at alpha=0: 1^2 * (2)_0 / 0! = 1
  CHECK(column_norm(0, Rational(0)) == doctest::Approx(1.0));
  // N_2 at alpha=0: (2)_2 / 2! = 3
  CHECK(column_norm(2, Rational(0)) == doctest::Approx(3.0));
  // row norm at n=0, alpha=0: 1^3 * (1/(alpha+1)) / 0! = 1
  CHECK(phi_norm_row(0, Rational(0)) == doctest::Approx(1.0));
  // row norm at n=1, alpha=0: 3^3 * (2)_0 / 1! = 27
  CHECK(phi_norm_row(1, Rational(0)) == doctest::Approx(27.0));
}

TEST_CASE("rows of the rescaled transform are orthonormal") {
  const TransformMatrix m = orthogonal_block(Rational(0), 4, 150);
  REQUIRE(m.rows.size() == 5);
  REQUIRE(m.rows[0].size() == 151);
  CHECK(m.gram_deviation() < 1e-8);
  const TransformMatrix half = orthogonal_block(Rational(1, 2), 3, 150);
  CHECK(half.gram_deviation() < 1e-8);
  CHECK_THROWS_AS(static_cast<void>(orthogonal_block(Rational(0), -1, 10)),
                  std::invalid_argument);
}

TEST_CASE("discrete orthogonality of the h family") {
  // frozen diagonal: n=l=1 at alpha=0 sums to 256/27
  const HOrthoSum d11 = h_orthogonality_sum(1, 1, Rational(0), 1e-12);
  CHECK(d11.reference == doctest::Approx(256.0 / 27.0).epsilon(1e-13));
  CHECK(d11.sum == doctest::Approx(d11.reference).epsilon(1e-10));
  CHECK(d11.terms > 10);
  for (const Rational& alpha : {Rational(0), Rational(1, 2)}) {
    for (long n = 1; n <= 5; ++n) {
      for (long l = n; l <= 5; ++l) {
        const HOrthoSum s = h_orthogonality_sum(n, l, alpha, 1e-12);
        if (n == l) {
          CHECK(std::abs(s.sum - s.reference) < 1e-10 * std::abs(s.reference));
        } else {
          CHECK(std::abs(s.sum) < 1e-10);
        }
      }
    }
  }
  CHECK_THROWS_AS(static_cast<void>(h_orthogonality_sum(0, 1, Rational(0), 1e-12)),
                  std::invalid_argument);
}

TEST_CASE("meixner weight orthogonality by direct summation") {
  for (const Rational& c : {Rational(1, 4), Rational(9, 16)}) {
    const Rational gamma(3);
    for (long n = 0; n <= 4; ++n) {
      for (long m = n; m <= 4; ++m) {
        const double sum = meixner_norm_sum(n, m, gamma, c, 1e-14);
        const double ref = meixner_norm_reference(n, m, gamma, c);
        if (n == m) {
          CHECK(std::abs(sum - ref) < 1e-12 * std::abs(ref));
        } else {
          CHECK(ref == 0.0);
          CHECK(std::abs(sum) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("recentering coefficient") {
  CHECK(recentering_coefficient(1, Rational(0)) == Rational(2));
  CHECK(recentering_coefficient(3, Rational(1, 2)) == Rational(9));
  for (const Rational& alpha : {Rational(0), Rational(1, 2), Rational(2)}) {
    for (long n = 1; n <= 8; ++n) {
      CHECK(recentering_coefficient(n, alpha) ==
            Rational(n) * (alpha + Rational(n + 1)) / (alpha + 1));
    }
  }
  CHECK_THROWS_AS(static_cast<void>(recentering_coefficient(0, Rational(0))),
                  std::invalid_argument);
}
