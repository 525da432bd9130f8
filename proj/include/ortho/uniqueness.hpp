#pragma once

#include <vector>

#include "ortho/integrate.hpp"
#include "ortho/poly.hpp"
#include "ortho/radial.hpp"
#include "ortho/rational.hpp"

namespace ortho {

// Candidate family L_n^alpha(g_n x) exp(-g_n x / 2) weighted by x^(alpha+kappa).
// All scalings must be positive; g_0 is normalized to 1.
// The pairwise inner product reduces, via s = x (g_m + g_n) / 2, to
// prefactor * Gamma(alpha+kappa+1) * coefficient with
// beta = 2 g_m / (g_m + g_n).

// Coefficient of integral L_m^alpha(beta s) L_n^alpha((2-beta) s)
// s^(alpha+kappa) e^-s ds as an exact polynomial in beta.
// pre: alpha + kappa > -1.
RationalPoly beta_condition_poly(long m, long n, const Rational& alpha, const Rational& kappa);

// The reduced inner product at concrete scalings.
// pre: g_m, g_n > 0, alpha + kappa > -1.
struct ScaledInner {
  ReducedIntegral reduced;
  ScaledValue prefactor;  // ((g_m + g_n)/2)^-(alpha+kappa+1)
};
ScaledInner scaled_inner_reduced(long m, long n, const Rational& g_m, const Rational& g_n,
                                 const Rational& alpha, const Rational& kappa);

// Unique positive scaling with <phi_0, phi_1> = 0: (alpha+1)/(alpha+2kappa+1).
// Throws "no admissible scaling" when the candidate is not positive and
// rejects the degenerate linear condition alpha + 2 kappa + 1 = 0.
Rational gamma1_solve(const Rational& alpha, const Rational& kappa);

// q2: the <phi_0, phi_2> = 0 condition as a primitive integer polynomial in
// g_2 (degree 2, positive leading coefficient); q3: the <phi_1, phi_2> = 0
// condition with g_1 = gamma1_solve(...) (degree 3). Degree drops are
// reported, never silently accepted.
struct QPair {
  RationalPoly q2;
  RationalPoly q3;
};
QPair q_polynomials(const Rational& alpha, const Rational& kappa);

// Compares disc(q2) with 16 kappa (alpha+kappa+1) (alpha+2): both vanish
// together, agree in sign, and their ratio is the square of a rational
// (the two normalizations of q2 differ by a rational multiple).
struct DiscriminantCheck {
  Rational computed;
  Rational reference;
  Rational ratio;  // 0 when both vanish
  bool pass;
};
DiscriminantCheck discriminant_check(const Rational& alpha, const Rational& kappa);

// res(q2, q3) over a parameter grid; a simultaneous root of q2, q3 exists
// exactly where the resultant vanishes.
struct ResultantRow {
  Rational alpha;
  Rational kappa;
  Rational res;
  bool vanishes;
};
std::vector<ResultantRow> resultant_scan(const std::vector<Rational>& alphas,
                                         const std::vector<Rational>& kappas);

// kappa = 0: the <phi_0, phi_n> coefficient, as a polynomial in
// beta = 2/(1+g_n), equals ((alpha+1)_n / n!) (beta-1)^n. Verifies the exact
// polynomial division and returns the coefficient value at g_n (zero iff
// g_n = 1). pre: n >= 1.
Rational kappa0_factor_check(long n, const Rational& alpha, const Rational& g_n);

// kappa = 1: the <phi_0, phi_n> condition polynomial factors exactly as
// constant * (beta-1)^(n-1) ((alpha+1+n)(beta-1) - n); returns the constant
// cofactor (alpha+2)_(n-1) / n!. pre: n >= 2.
Rational kappa1_phi0_phin_cofactor(long n, const Rational& alpha);

// kappa = 1 with g_1 = (alpha+1)/(alpha+3) and g_n = 1: the exact reduced
// inner product against the closed form
// (-1)^(n-1) n ((alpha+3)n - 1) (alpha+3)(alpha+3)_(n-2) /
// ((alpha+1)^(n-2) (alpha+2)); both nonzero, matching sign, ratio recorded.
// pre: n >= 2.
struct Phi1PhinResult {
  Rational coefficient;   // reduced coefficient (multiplies Gamma(alpha+2))
  ScaledValue prefactor;  // ((g_1+1)/2)^-(alpha+2)
  Rational reference;     // closed form above
  double ratio;           // full inner product / reference, positive
};
Phi1PhinResult kappa1_phi1_phin(long n, const Rational& alpha);

}  // namespace ortho
