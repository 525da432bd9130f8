#pragma once

#include <functional>
#include <vector>

#include "ortho/poly.hpp"
#include "ortho/rational.hpp"

namespace ortho {

// Gamma(x) for x > 0.
double gamma_pos(double x);

// Value of integral_0^inf p(s) s^base e^-s ds, held as
// coefficient * Gamma(base+1) with the Gamma factor kept symbolic.
// Invariant: base > -1.
struct ReducedIntegral {
  Rational coefficient;
  Rational base;
  double value() const;  // collapses the Gamma factor to floating point
};

// Exact reduction of integral_0^inf p(s) s^base e^-s ds using
// integral s^(base+j) e^-s ds = Gamma(base+1) (base+1)_j.
// pre: base > -1 ("divergent integral" otherwise).
ReducedIntegral gamma_moment(const RationalPoly& p, const Rational& base);

// Nodes/weights integrating f against s^exponent e^-s on (0, inf),
// exact for polynomial f of degree <= 2*size-1.
// Invariants: nodes strictly increasing and positive, weights positive,
// sum of weights = Gamma(exponent+1).
struct QuadRule {
  double exponent;
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Golub-Welsch: eigen-decomposition of the Jacobi matrix with
// diag 2i+a+1, offdiag sqrt(i(i+a)), by implicit-shift QL on the
// tridiagonal, off-diagonal tolerance 1e-14. pre: size >= 1, a > -1.
QuadRule gauss_laguerre_rule(int size, double a);

// sum_i w_i f(x_i); throws on non-finite f(x_i).
double quad_integrate(const std::function<double(double)>& f, const QuadRule& rule);

// Reduced coefficient of integral L_m^alpha L_n^alpha s^alpha e^-s ds:
// (alpha+1)_n / n! for m == n and 0 otherwise.
Rational laguerre_orthonorm_check(long m, long n, const Rational& alpha);

}  // namespace ortho
