#pragma once

#include <functional>
#include <vector>

#include "ortho/rational.hpp"

namespace ortho {

// Function on the integer domain x = -1, 0, 1, ..., xmax with f(-1) = 0.
class DiscreteFunction {
 public:
  explicit DiscreteFunction(long xmax);  // identically zero
  long xmax() const { return xmax_; }
  const Rational& at(long x) const;  // pre: -1 <= x <= xmax
  Rational extended(long x) const;   // zero outside the stored range
  void set(long x, const Rational& v);  // pre: 0 <= x <= xmax

 private:
  long xmax_;
  std::vector<Rational> vals_;  // index x+1
};

// D f(x) = (x+alpha+3)/(x+2) f(x+1) + ((alpha+1)/(x+1) - 2) f(x) + f(x-1).
// pre: 0 <= x < f.xmax() (both neighbors must be stored).
Rational apply_D(const DiscreteFunction& f, const Rational& alpha, long x);

// max over 0 <= x <= xmax of
// |D h_(n-1)(x) - (alpha+1)^2 / (n(alpha+n+1)) h_(n-1)(x)|, exactly.
// pre: n >= 1.
Rational eigen_residual(long n, const Rational& alpha, long xmax);

// <D f1, f2> - <f1, D f2> with <f,g> = sum_x (alpha+2)_(x+1)/(x+1)! f g,
// for f1, f2 supported within [0, xmax] (zero beyond). Exactly zero.
Rational symmetry_residual(const DiscreteFunction& f1, const DiscreteFunction& f2,
                           const Rational& alpha, long xmax);

// Unique solution of D f = -lambda f with f(-1) = 0, f(0) = 1, by forward
// recurrence on x = 0..xmax-1.
DiscreteFunction solve_difference(const Rational& lambda, const Rational& alpha, long xmax);

// One-parameter eigenfunction family: for spectral parameter g (not a
// difference of the grid variable), u = (1+g)/(alpha+2+g),
// lambda = -(alpha+1)^2 / ((g+1)(alpha+g+2)), and u^2 - (2-lambda)u + 1 = 0.
// pre: g > -1.
struct SpectralSolution {
  Rational g;
  Rational alpha;
  SpectralSolution(Rational g_, Rational alpha_);
  Rational u() const;
  Rational lambda() const;
};

// f(x) = u^x (x+1) 2F1(-x, -g; alpha+3; 1 - u^-2) at integer x >= -1; the
// series terminates through the (-x)_j factor.
Rational series_solution_exact(const SpectralSolution& s, long x);

// h_infinity(x) = (x+1) sum_j (-x)_j / (alpha+3)_j (2(alpha+1))^j / j!.
// Exact at integer x >= -1; floating for real x with factorially decaying
// terms, truncated when |term| < tol * |partial sum|.
Rational h_infinity_exact(const Rational& alpha, long x);
double h_infinity_eval(const Rational& alpha, double x, double tol);

// |h_n(x) - h_infinity(x)| for each n; pass requires the errors to be
// non-increasing along n_list and the last one below threshold.
struct LimitRow {
  long n;
  double error;
};
struct LimitStudy {
  std::vector<LimitRow> rows;
  bool monotone;
  double final_error;
  bool pass(double threshold) const { return monotone && final_error < threshold; }
};
LimitStudy limit_study(const Rational& alpha, double x, const std::vector<long>& n_list,
                       double tol);

// First k sign changes of f scanned on (-1, xmax] with the given step,
// each refined by bisection to width 1e-10. Throws if fewer than k are found.
std::vector<double> first_zeros(const std::function<double(double)>& f, int k, double xmax,
                                double step = 0.05);

}  // namespace ortho
