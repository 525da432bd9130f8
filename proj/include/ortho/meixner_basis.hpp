#pragma once

#include <vector>

#include "ortho/radial.hpp"
#include "ortho/rational.hpp"
#include "ortho/specfun.hpp"

namespace ortho {

// h_n^alpha(x) = u^x (x+1) M_n(x; alpha+3, u^2), u = (n+1)/(alpha+n+2).
// Invariants: alpha >= 0, n >= 0 (hence 0 < u < 1); h_n^alpha(-1) = 0.
struct HFunction {
  Rational alpha;
  long n;
  HFunction(Rational alpha_, long n_);
  Rational u() const;
  MeixnerSpec meixner() const;
};

Rational h_eval_exact(const HFunction& h, long x);  // pre: x >= -1
double h_eval(const HFunction& h, double x);        // pre: x >= -1

// Gamma(alpha+2)^-1 integral of L_n^(alpha+1)(beta x) e^(-beta x/2) *
// L_m^(alpha+1)((2-beta) x) e^(-(2-beta) x/2) x^(alpha+1) dx, exactly, and
// cross-checked against the closed form
// (1-beta)^(n+m) (-1)^m (alpha+2)_n (alpha+2)_m / (n! m!) *
// M_n(m; alpha+2, (1-beta)^2). pre: 0 < beta < 2, beta != 1.
Rational illustration_overlap(long n, long m, const Rational& alpha, const Rational& beta);

// I(n,m) = Gamma(alpha+2)^-1 integral L_n^alpha(x/(alpha+2n+1)) *
// L_m^(alpha+1)(x/(alpha+1)) e^(-A_n x) x^(alpha+1) dx,
// A_n = ((alpha+1)(1+u_n))^-1, u_n = n/(alpha+n+1):
// reduced coefficient times prefactor ((alpha+1)(1+u_n))^(alpha+2).
// The reduced part is cross-checked against the closed form
// (alpha+3)_(m-1) (alpha+2)_(n-1) / ((m-1)! (n-1)!) (-1)^(m-1) (1-u_n^2)
//   u_n^(m+n-3) 2F1(1-n, 1-m; alpha+3; 1-u_n^-2)  (n, m >= 1)
// and against zero in row/column 0 (except the (0,0) entry, 1).
struct TransformEntry {
  Rational reduced;
  ScaledValue prefactor;
  double value;
};
TransformEntry transform_entry(long n, long m, const Rational& alpha);

// N_m = (alpha+1)^(alpha+2) (alpha+2)_m / m!.
double column_norm(long m, const Rational& alpha);

// ||phi_n||^2 / Gamma(alpha+2) = (alpha+2n+1)^(alpha+3) (alpha+2)_(n-1) / n!
// with (alpha+2)_(-1) = 1/(alpha+1).
double phi_norm_row(long n, const Rational& alpha);

// Rows n = 0..nmax of the orthogonal matrix I(n,m) / (||phi_n|| sqrt(N_m)),
// columns m = 0..mmax, evaluated in floating point.
struct TransformMatrix {
  Rational alpha;
  long nmax;
  long mmax;
  std::vector<std::vector<double>> rows;
  // max over row pairs of |<row_i, row_j> - delta_ij|
  double gram_deviation() const;
};
TransformMatrix orthogonal_block(const Rational& alpha, long nmax, long mmax);

// sum_{m>=1} (alpha+2)_m / m! h_(n-1)(m-1) h_(l-1)(m-1) against
// delta_nl (n-1)!/(alpha+2)_(n-1) *
// (alpha+2)^2 (alpha+n+1)^(2alpha+2n+4) /
// ((alpha+1)^(alpha+4) (alpha+2n+1)^(alpha+3) n^(2n-3)).
// Truncated when a geometric majorant of the tail drops below tol.
// pre: n, l >= 1.
struct HOrthoSum {
  double sum;
  double reference;
  long terms;
};
HOrthoSum h_orthogonality_sum(long n, long l, const Rational& alpha, double tol);

// sum_x (gamma)_x / x! c^x M_n(x) M_m(x), truncated at tail bound tol.
double meixner_norm_sum(long n, long m, const Rational& gamma, const Rational& c, double tol);
// delta_nm n! / ((gamma)_n c^n (1-c)^gamma).
double meixner_norm_reference(long n, long m, const Rational& gamma, const Rational& c);

// Coefficient of M_(n-1) in the expansion of (x+1) M_(n-1)(x; alpha+3, u_n^2)
// over the same family: n(alpha+n+1)/(alpha+1). Verified by peeling the
// expansion off exactly. pre: n >= 1.
Rational recentering_coefficient(long n, const Rational& alpha);

}  // namespace ortho
