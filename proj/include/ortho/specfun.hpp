#pragma once

#include <utility>
#include <vector>

#include "ortho/poly.hpp"
#include "ortho/rational.hpp"

namespace ortho {

// Generalized Laguerre parameter set. Invariant: n >= 0, alpha > -1.
struct LaguerreSpec {
  long n;
  Rational alpha;
  LaguerreSpec(long n_, Rational alpha_);
};

// Exact coefficients of L_n^alpha as a polynomial in x.
RationalPoly laguerre_coeffs(const LaguerreSpec& s);

// Floating evaluation via the three-term recurrence
// (k+1) L_{k+1} = (alpha+1+2k-x) L_k - (k+alpha) L_{k-1}.
double laguerre_eval(const LaguerreSpec& s, double x);

// x y'' + (alpha+1-x) y' + n y for y = L_n^alpha; identically zero.
RationalPoly ode_residual(const LaguerreSpec& s);

// L_n^alpha = L_n^(alpha+1) - L_{n-1}^(alpha+1), returned as the pair of
// right-hand-side coefficient vectors. pre: n >= 1.
std::pair<RationalPoly, RationalPoly> contig_expand(const LaguerreSpec& s);

// Coefficients c_j with L_n^delta(b x) = sum_j c_j L_j^delta(x),
// c_j = (delta+1+j)_(n-j) / (n-j)! * b^j (1-b)^(n-j). pre: delta > -1.
std::vector<Rational> rescale_expand(long n, const Rational& delta, const Rational& b);

// Terminating 2F1(-m, b; c; z) = sum_{j<=m} (-m)_j (b)_j / ((c)_j j!) z^j.
// pre: m >= 0; c must not hit a pole inside the summation range
// ("pole in lower parameter").
Rational hyp2f1_terminating(long m, const Rational& b, const Rational& c, const Rational& z);

// Meixner parameter set. Invariant: n >= 0, gamma > 0, 0 < c < 1.
struct MeixnerSpec {
  long n;
  Rational gamma;
  Rational c;
  MeixnerSpec(long n_, Rational gamma_, Rational c_);
};

// M_n(x; gamma, c) = 2F1(-n, -x; gamma; 1 - 1/c) as an exact polynomial in x.
RationalPoly meixner_poly(const MeixnerSpec& s);

// Same series evaluated directly at a real or rational point; (-x)_j is
// accumulated as a running product, never through Gamma.
double meixner_eval(const MeixnerSpec& s, double x);
Rational meixner_eval_exact(const MeixnerSpec& s, const Rational& x);

}  // namespace ortho
