#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "ortho/meixner_basis.hpp"
#include "ortho/meixner_operator.hpp"

using ortho::apply_D;
using ortho::DiscreteFunction;
using ortho::eigen_residual;
using ortho::first_zeros;
using ortho::h_eval_exact;
using ortho::h_infinity_eval;
using ortho::h_infinity_exact;
using ortho::HFunction;
using ortho::limit_study;
using ortho::LimitStudy;
using ortho::Rational;
using ortho::series_solution_exact;
using ortho::solve_difference;
using ortho::SpectralSolution;
using ortho::symmetry_residual;

namespace {

DiscreteFunction random_compact(std::mt19937_64& rng, long xmax) {
  std::uniform_int_distribution<long> num(-99, 99), den(1, 12), len(3, std::min<long>(24, xmax));
  DiscreteFunction f(xmax);
  const long support = len(rng);
  for (long x = 0; x <= support; ++x) f.set(x, Rational(num(rng), den(rng)));
  return f;
}

}  // namespace

TEST_CASE("discrete function storage") {
  DiscreteFunction f(5);
  CHECK(f.at(-1) == Rational(0));
  CHECK(f.at(5) == Rational(0));
  f.set(3, Rational(7, 2));
  CHECK(f.at(3) == Rational(7, 2));
  CHECK(f.extended(3) == Rational(7, 2));
  CHECK(f.extended(11) == Rational(0));
  CHECK(f.extended(-4) == Rational(0));
  CHECK_THROWS_AS(static_cast<void>(f.at(6)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(f.at(-2)), std::invalid_argument);
  CHECK_THROWS_AS(f.set(-1, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(f.set(6, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteFunction(-1), std::invalid_argument);
}

TEST_CASE("difference operator pointwise") {
  // D f(x) = (x+alpha+3)/(x+2) f(x+1) + ((alpha+1)/(x+1) - 2) f(x) + f(x-1)
  DiscreteFunction f(4);
  for (long x = 0; x <= 4; ++x) f.set(x, Rational(x + 1));
  const Rational alpha(1, 2);
  for (long x = 0; x < 4; ++x) {
    const Rational direct = (Rational(x) + alpha + 3) / Rational(x + 2) * f.at(x + 1) +
                            ((alpha + 1) / Rational(x + 1) - 2) * f.at(x) + f.at(x - 1);
    CHECK(apply_D(f, alpha, x) == direct);
  }
  CHECK_THROWS_AS(static_cast<void>(apply_D(f, alpha, 4)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(apply_D(f, alpha, -1)), std::invalid_argument);
}

TEST_CASE("operator splits into three named parts") {
  // D = second difference + (alpha+1)/(x+2) forward difference
  //     + (alpha+1) (1/(x+1) + 1/(x+2)) identity
  std::mt19937_64 rng(8801);
  const Rational alpha(7, 3);
  DiscreteFunction f = random_compact(rng, 30);
  for (long x = 0; x < 30; ++x) {
    const Rational second = f.at(x + 1) - 2 * f.at(x) + f.at(x - 1);
    const Rational forward = (alpha + 1) / Rational(x + 2) * (f.at(x + 1) - f.at(x));
    const Rational local =
        (alpha + 1) * (Rational(1, 1) / Rational(x + 1) + Rational(1, 1) / Rational(x + 2)) *
        f.at(x);
    CHECK(apply_D(f, alpha, x) == second + forward + local);
  }
}

TEST_CASE("discrete family diagonalizes the operator") {
  for (const Rational& alpha : {Rational(0), Rational(1, 2), Rational(7, 3)}) {
    for (long n = 1; n <= 6; ++n) {
      CHECK(eigen_residual(n, alpha, 40) == Rational(0));
    }
  }
  CHECK_THROWS_AS(static_cast<void>(eigen_residual(0, Rational(0), 10)), std::invalid_argument);
}

TEST_CASE("first eigenvalue frozen") {
  const SpectralSolution s(Rational(0), Rational(0));
  // (alpha+1)^2 / (n(alpha+n+1)) at n=1, alpha=0 is 1/2
  CHECK(-s.lambda() == Rational(1, 2));
  CHECK(s.u() == Rational(1, 2));
}

TEST_CASE("operator is symmetric for the binomial weight") {
  std::mt19937_64 rng(12345);
  for (const Rational& alpha : {Rational(0), Rational(5, 2)}) {
    for (int rep = 0; rep < 20; ++rep) {
      const DiscreteFunction f1 = random_compact(rng, 40);
      const DiscreteFunction f2 = random_compact(rng, 40);
      CHECK(symmetry_residual(f1, f2, alpha, 40) == Rational(0));
    }
  }
}

TEST_CASE("spectral family routes agree") {
  for (const Rational& alpha : {Rational(0), Rational(1, 2)}) {
    for (long g = 0; g <= 6; ++g) {
      const SpectralSolution s(Rational(g), alpha);
      // quadratic identity for u
      CHECK(s.u() * s.u() - (Rational(2) - s.lambda()) * s.u() + 1 == Rational(0));
      // recurrence solution of D f = -lambda f matches the terminating series
      const DiscreteFunction f = solve_difference(s.lambda(), alpha, 24);
      for (long x = -1; x <= 24; ++x) {
        CHECK(f.at(x) == series_solution_exact(s, x));
      }
    }
  }
  CHECK_THROWS_AS(SpectralSolution(Rational(-2), Rational(0)), std::invalid_argument);
}

TEST_CASE("integer spectral parameter reproduces the discrete basis") {
  for (const Rational& alpha : {Rational(0), Rational(1, 2), Rational(7, 3)}) {
    for (long k = 1; k <= 5; ++k) {
      const SpectralSolution s(Rational(k), alpha);
      const HFunction h(alpha, k);
      for (long x = -1; x <= 20; ++x) {
        CHECK(series_solution_exact(s, x) == h_eval_exact(h, x));
      }
    }
  }
}

TEST_CASE("zero spectral parameter gives the limiting function") {
  for (const Rational& alpha : {Rational(0), Rational(1), Rational(7, 3)}) {
    const DiscreteFunction f = solve_difference(Rational(0), alpha, 30);
    for (long x = -1; x <= 30; ++x) {
      CHECK(f.at(x) == h_infinity_exact(alpha, x));
    }
  }
}

TEST_CASE("limiting function values") {
  // (x+1) sum_j (-x)_j / (alpha+3)_j (2(alpha+1))^j / j!
  CHECK(h_infinity_exact(Rational(0), -1) == Rational(0));
  CHECK(h_infinity_exact(Rational(0), 0) == Rational(1));
  // x=1: 2 (1 - 2/(alpha+3)); alpha=0 gives 2/3, alpha=1 gives 0
  CHECK(h_infinity_exact(Rational(0), 1) == Rational(2, 3));
  CHECK(h_infinity_exact(Rational(1), 1) == Rational(0));
  CHECK(h_infinity_exact(Rational(7, 3), 1) == Rational(-1, 2));
  // extended-precision accumulation keeps the alternating-series cancellation
  // near machine precision over this range
  for (const Rational& alpha : {Rational(0), Rational(1), Rational(7, 3)}) {
    for (const long x : {1L, 7L, 19L}) {
      const double exact = h_infinity_exact(alpha, x).to_double();
      const double series = h_infinity_eval(alpha, static_cast<double>(x), 1e-15);
      CHECK(std::abs(series - exact) < 1e-13);
    }
  }
  // non-integer arguments interleave the integer values sanely
  const double mid = h_infinity_eval(Rational(0), 0.5, 1e-15);
  CHECK(mid > h_infinity_exact(Rational(0), 1).to_double());
  CHECK(mid < h_infinity_exact(Rational(0), 0).to_double());
  CHECK_THROWS_AS(static_cast<void>(h_infinity_exact(Rational(0), -2)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(h_infinity_eval(Rational(0), 1.0, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("pointwise convergence to the limiting function") {
  const std::vector<long> ns = {10, 50, 200};
  for (const Rational& alpha : {Rational(0), Rational(1)}) {
    for (const double x : {0.5, 1.0, 2.5}) {
      const LimitStudy s = limit_study(alpha, x, ns, 1e-15);
      REQUIRE(s.rows.size() == 3);
      CHECK(s.monotone);
      CHECK(s.rows[0].error > s.rows[2].error);
      CHECK(s.final_error == s.rows[2].error);
      CHECK(s.pass(1e-2));
      CHECK(!s.pass(s.final_error * 0.5));
    }
  }
}

TEST_CASE("zero scan finds simple roots") {
  const auto zeros = first_zeros([](double x) { return (x - 1) * (x - 3) * (x - 7); }, 3, 10.0);
  REQUIRE(zeros.size() == 3);
  CHECK(zeros[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(zeros[1] == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(zeros[2] == doctest::Approx(7.0).epsilon(1e-9));
  CHECK_THROWS_AS(
      static_cast<void>(first_zeros([](double x) { return x + 2.0; }, 1, 10.0)),
      std::domain_error);
}

TEST_CASE("first zero of the discrete family decreases toward the limit") {
  const Rational alpha(0);
  std::vector<double> firsts;
  for (const long n : {5L, 20L, 80L}) {
    const HFunction h(alpha, n);
    firsts.push_back(first_zeros([&](double x) { return ortho::h_eval(h, x); }, 1, 30.0)[0]);
  }
  const double limit = first_zeros(
      [&](double x) { return h_infinity_eval(alpha, x, 1e-13); }, 1, 30.0)[0];
  CHECK(firsts[0] - limit > firsts[1] - limit);
  CHECK(firsts[1] - limit > firsts[2] - limit);
  CHECK(firsts[2] - limit > 0.0);
  CHECK(limit == doctest::Approx(2.0).epsilon(1e-6));
}
