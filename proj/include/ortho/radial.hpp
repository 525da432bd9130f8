#pragma once

#include "ortho/integrate.hpp"
#include "ortho/poly.hpp"
#include "ortho/rational.hpp"

namespace ortho {

// A positive quantity base^exponent held exactly until reporting.
// Invariant: base > 0.
struct ScaledValue {
  Rational base;
  Rational exponent;
  double factor() const;
};

// Bound radial mode of the dim-dimensional Coulomb problem.
// Invariants: dim >= 1, l >= 0, n >= 0, k > 0, and alpha() > -1.
struct RadialMode {
  int dim;
  long l;
  long n;
  Rational k;
  RadialMode(int dim_, long l_, long n_, Rational k_);
  Rational alpha() const;   // dim + 2l - 2
  Rational energy() const;  // -(k / (2(alpha + 2n + 1)))^2
};

// phi_n(x) = L_n^alpha(x / (alpha+2n+1)) exp(-x / (2(alpha+2n+1))).
struct PhiFunction {
  Rational alpha;
  long n;
  PhiFunction(Rational alpha_, long n_);
  double operator()(double x) const;
};

// Reduced coefficient of integral_0^inf L_m^alpha(beta s) L_n^alpha((2-beta) s)
// s^(alpha+kappa) e^-s ds. pre: alpha+kappa > -1, 0 < beta < 2.
ReducedIntegral cross_integral_reduced(long m, long n, const Rational& alpha,
                                       const Rational& kappa, const Rational& beta);

// integral phi_m phi_n x^(alpha+1) dx after the substitution
// s = (x/2)(1/(alpha+2m+1) + 1/(alpha+2n+1)):
// reduced * Gamma * prefactor, prefactor =
// ((alpha+2m+1)(alpha+2n+1)/(alpha+m+n+1))^(alpha+2).
struct PhiInnerProduct {
  ReducedIntegral reduced;
  ScaledValue prefactor;
  double value;  // floating collapse of the product
};
PhiInnerProduct phi_inner_product(long m, long n, const Rational& alpha);

// The same inner product by npts-point quadrature. The substitution
// s = x (c_m + c_n) / (2 c_m c_n), c_j = alpha+2j+1, turns the integrand
// into a degree-(m+n) polynomial against s^(alpha+1) e^-s, so the rule is
// exact up to rounding once 2*npts > m+n.
double phi_inner_quad(long m, long n, const Rational& alpha, int npts);

// Exact diagonal: integral phi_n^2 x^(alpha+1) dx =
// (alpha+2n+1)^(alpha+3) Gamma(alpha+1+n)/n!, returned as the pair
// (base power, rational multiple of Gamma(alpha+1)).
struct PhiNorm {
  ScaledValue power;     // (alpha+2n+1)^(alpha+3)
  Rational coefficient;  // (alpha+1)_n / n!, multiplies Gamma(alpha+1)
  double value() const;
};
PhiNorm phi_norm(long n, const Rational& alpha);

// (gamma-1) 2F1(1-m,1-n;alpha+2;gamma) + 2F1(-m,-n;alpha+2;gamma)
//   - gamma (alpha+m+n+1)/(alpha+2) 2F1(1-m,1-n;alpha+3;gamma);
// identically zero. pre: m, n >= 1.
Rational contiguity_combination(long m, long n, const Rational& alpha, const Rational& gamma);

// Closed form of the kappa=1 cross integral via the terminating-sum route;
// cross-checks against cross_integral_reduced and returns the common
// coefficient (zero for m != n). pre: m != n, m, n >= 0.
Rational bsum_check(long m, long n, const Rational& alpha);

}  // namespace ortho
