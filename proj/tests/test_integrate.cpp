#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "ortho/integrate.hpp"
#include "ortho/specfun.hpp"

using ortho::gamma_moment;
using ortho::gamma_pos;
using ortho::gauss_laguerre_rule;
using ortho::laguerre_orthonorm_check;
using ortho::quad_integrate;
using ortho::QuadRule;
using ortho::Rational;
using ortho::RationalPoly;
using ortho::ReducedIntegral;

TEST_CASE("gamma function spot values") {
  CHECK(gamma_pos(1.0) == doctest::Approx(1.0));
  CHECK(gamma_pos(5.0) == doctest::Approx(24.0));
  CHECK(gamma_pos(0.5) == doctest::Approx(std::sqrt(std::acos(-1.0))));
  CHECK(gamma_pos(3.5) == doctest::Approx(2.5 * 1.5 * 0.5 * std::sqrt(std::acos(-1.0))));
}

TEST_CASE("gamma moment reduction") {
  // integral (1 + s^2) s^(1/2) e^-s ds = Gamma(3/2) (1 + (3/2)(5/2))
  const ReducedIntegral r =
      gamma_moment(RationalPoly({Rational(1), Rational(0), Rational(1)}), Rational(1, 2));
  CHECK(r.coefficient == Rational(19, 4));
  CHECK(r.base == Rational(1, 2));
  CHECK(r.value() == doctest::Approx(4.75 * gamma_pos(1.5)));
  // integral s^3 e^-s ds = 6 = Gamma(1) * (1)_3
  const ReducedIntegral cube = gamma_moment(RationalPoly::monomial(Rational(1), 3), Rational(0));
  CHECK(cube.coefficient == Rational(6));
  CHECK(cube.value() == doctest::Approx(6.0));
  CHECK(gamma_moment(RationalPoly(), Rational(0)).coefficient == Rational(0));
  CHECK_THROWS_WITH_AS(
      static_cast<void>(gamma_moment(RationalPoly::constant(Rational(1)), Rational(-1))),
      "divergent integral", std::domain_error);
}

TEST_CASE("two point rule closed form") {
  // weight e^-s: nodes 2 -+ sqrt(2), weights (2 +- sqrt(2))/4
  const QuadRule r = gauss_laguerre_rule(2, 0.0);
  REQUIRE(r.nodes.size() == 2);
  const double s2 = std::sqrt(2.0);
  CHECK(r.nodes[0] == doctest::Approx(2.0 - s2).epsilon(1e-12));
  CHECK(r.nodes[1] == doctest::Approx(2.0 + s2).epsilon(1e-12));
  CHECK(r.weights[0] == doctest::Approx((2.0 + s2) / 4.0).epsilon(1e-12));
  CHECK(r.weights[1] == doctest::Approx((2.0 - s2) / 4.0).epsilon(1e-12));
}

TEST_CASE("rule invariants and moment reproduction") {
  for (const double a : {0.0, 0.5, 2.0, 7.0 / 3.0}) {
    for (const int size : {1, 2, 5, 12, 25}) {
      const QuadRule r = gauss_laguerre_rule(size, a);
      REQUIRE(r.nodes.size() == static_cast<std::size_t>(size));
      REQUIRE(r.weights.size() == static_cast<std::size_t>(size));
      double wsum = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        CHECK(r.nodes[i] > 0.0);
        CHECK(r.weights[i] > 0.0);
        if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
        wsum += r.weights[i];
      }
      CHECK(wsum == doctest::Approx(gamma_pos(a + 1.0)).epsilon(1e-12));
      // moments of the weight: integral s^k s^a e^-s = Gamma(a+1) (a+1)_k,
      // exact for k <= 2*size - 1 up to roundoff amplified by the degree
      double moment = gamma_pos(a + 1.0);
      for (int k = 1; k <= 2 * size - 1; ++k) {
        moment *= a + k;
        const double quad = quad_integrate([k](double s) { return std::pow(s, k); }, r);
        CHECK(std::abs(quad - moment) < 5e-12 * moment);
      }
    }
  }
  CHECK_THROWS_AS(static_cast<void>(gauss_laguerre_rule(0, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(gauss_laguerre_rule(3, -1.5)), std::domain_error);
}

TEST_CASE("quadrature rejects non-finite integrand values") {
  const QuadRule r = gauss_laguerre_rule(4, 0.0);
  CHECK_THROWS_AS(
      static_cast<void>(quad_integrate([](double s) { return 1.0 / (s - s); }, r)),
      std::domain_error);
}

TEST_CASE("laguerre orthonormality cross check") {
  const Rational alpha(1, 2);
  for (long m = 0; m <= 6; ++m) {
    for (long n = 0; n <= 6; ++n) {
      const Rational expected = laguerre_orthonorm_check(m, n, alpha);
      if (m != n) CHECK(expected == Rational(0));
      // independent route: exact product polynomial through the gamma moment
      const RationalPoly prod = ortho::laguerre_coeffs({m, alpha}) *
                                ortho::laguerre_coeffs({n, alpha});
      CHECK(gamma_moment(prod, alpha).coefficient == expected);
      // floating route: product integrated by a rule exact at degree m+n
      const QuadRule r = gauss_laguerre_rule(static_cast<int>(m + n) / 2 + 1, 0.5);
      const double quad = quad_integrate([&](double s) { return prod.evaluate_d(s); }, r);
      const double exact = expected.to_double() * gamma_pos(1.5);
      CHECK(std::abs(quad - exact) < 1e-10 * std::max(1.0, std::abs(exact)));
    }
  }
  CHECK(laguerre_orthonorm_check(3, 3, Rational(0)) == Rational(1));
  CHECK(laguerre_orthonorm_check(2, 2, Rational(1, 2)) == Rational(15, 8));
}
