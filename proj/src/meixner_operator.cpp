#include "ortho/meixner_operator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ortho/meixner_basis.hpp"
#include "ortho/specfun.hpp"

namespace ortho {

DiscreteFunction::DiscreteFunction(long xmax) : xmax_(xmax) {
  if (xmax < 0) throw std::invalid_argument("xmax must be nonnegative");
  vals_.assign(static_cast<std::size_t>(xmax) + 2, Rational(0));
}

const Rational& DiscreteFunction::at(long x) const {
  if (x < -1 || x > xmax_) throw std::invalid_argument("x outside stored range");
  return vals_[static_cast<std::size_t>(x + 1)];
}

Rational DiscreteFunction::extended(long x) const {
  if (x < -1 || x > xmax_) return Rational(0);
  return vals_[static_cast<std::size_t>(x + 1)];
}

void DiscreteFunction::set(long x, const Rational& v) {
  if (x < 0 || x > xmax_) throw std::invalid_argument("x outside assignable range");
  vals_[static_cast<std::size_t>(x + 1)] = v;
}

Rational apply_D(const DiscreteFunction& f, const Rational& alpha, long x) {
  if (x < 0 || x >= f.xmax()) throw std::invalid_argument("operator needs both neighbors stored");
  Rational up = (x + alpha + Rational(3)) / Rational(x + 2);
  Rational mid = (alpha + Rational(1)) / Rational(x + 1) - Rational(2);
  return up * f.at(x + 1) + mid * f.at(x) + f.at(x - 1);
}

Rational eigen_residual(long n, const Rational& alpha, long xmax) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  HFunction h(alpha, n - 1);
  DiscreteFunction f(xmax + 1);  // one extra point so D is defined at xmax
  for (long x = 0; x <= xmax + 1; ++x) f.set(x, h_eval_exact(h, x));
  Rational lam = (alpha + Rational(1)).pow(2) / (Rational(n) * (alpha + Rational(n) + Rational(1)));
  Rational worst(0);
  for (long x = 0; x <= xmax; ++x) {
    Rational r = (apply_D(f, alpha, x) - lam * f.at(x)).abs();
    if (worst < r) worst = r;
  }
  return worst;
}

Rational symmetry_residual(const DiscreteFunction& f1, const DiscreteFunction& f2,
                           const Rational& alpha, long xmax) {
  // <D f, g>: D reaches one step beyond each support, so pad by one.
  Rational lhs(0), rhs(0);
  Rational w = alpha + Rational(2);  // (alpha+2)_(x+1)/(x+1)! at x = 0
  for (long x = 0; x <= xmax + 1; ++x) {
    Rational up = (x + alpha + Rational(3)) / Rational(x + 2);
    Rational mid = (alpha + Rational(1)) / Rational(x + 1) - Rational(2);
    Rational df1 = up * f1.extended(x + 1) + mid * f1.extended(x) + f1.extended(x - 1);
    Rational df2 = up * f2.extended(x + 1) + mid * f2.extended(x) + f2.extended(x - 1);
    lhs += w * df1 * f2.extended(x);
    rhs += w * f1.extended(x) * df2;
    w *= (alpha + Rational(x) + Rational(3)) / Rational(x + 2);
  }
  return lhs - rhs;
}

DiscreteFunction solve_difference(const Rational& lambda, const Rational& alpha, long xmax) {
  DiscreteFunction f(xmax);
  f.set(0, Rational(1));
  // (x+alpha+3)/(x+2) f(x+1) = (2 - lambda - (alpha+1)/(x+1)) f(x) - f(x-1)
  for (long x = 0; x < xmax; ++x) {
    Rational c = Rational(2) - lambda - (alpha + Rational(1)) / Rational(x + 1);
    Rational next = (c * f.at(x) - f.at(x - 1)) * Rational(x + 2) / (x + alpha + Rational(3));
    f.set(x + 1, next);
  }
  return f;
}

SpectralSolution::SpectralSolution(Rational g_, Rational alpha_)
    : g(std::move(g_)), alpha(std::move(alpha_)) {
  if (!(g > Rational(-1))) throw std::invalid_argument("spectral parameter must exceed -1");
  if (!(alpha > Rational(-1))) throw std::invalid_argument("alpha must exceed -1");
}

Rational SpectralSolution::u() const { return (Rational(1) + g) / (alpha + Rational(2) + g); }

Rational SpectralSolution::lambda() const {
  return -(alpha + Rational(1)).pow(2) / ((g + Rational(1)) * (alpha + g + Rational(2)));
}

Rational series_solution_exact(const SpectralSolution& s, long x) {
  if (x < -1) throw std::invalid_argument("x must be at least -1");
  if (x == -1) return Rational(0);
  Rational u = s.u();
  Rational z = Rational(1) - u.pow(-2);
  Rational f = hyp2f1_terminating(x, -s.g, s.alpha + Rational(3), z);
  return u.pow(x) * Rational(x + 1) * f;
}

Rational h_infinity_exact(const Rational& alpha, long x) {
  if (x < -1) throw std::invalid_argument("x must be at least -1");
  if (x == -1) return Rational(0);
  Rational w = Rational(2) * (alpha + Rational(1));
  Rational sum(1), term(1);
  for (long j = 1; j <= x; ++j) {
    // (-x)_j / (alpha+3)_j / j! * w^j, ratio (j-1-x)/((alpha+2+j) j) * w
    term *= Rational(j - 1 - x) * w / ((alpha + Rational(2) + Rational(j)) * Rational(j));
    sum += term;
  }
  return Rational(x + 1) * sum;
}

double h_infinity_eval(const Rational& alpha, double x, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  // the series alternates and its terms grow before they decay, so extended
  // precision keeps the cancellation error well under the partial-sum size
  long double a = static_cast<long double>(alpha.to_double());
  long double xl = static_cast<long double>(x);
  long double w = 2.0L * (a + 1.0L);
  if (x >= 0.0 && x == std::floor(x) && x < 1e9) {
    // the (-x)_j factor terminates the series after x+1 terms
    long xi = static_cast<long>(x);
    long double sum = 1.0L, term = 1.0L;
    for (long j = 1; j <= xi; ++j) {
      term *= (static_cast<long double>(j) - 1.0L - xl) * w /
              ((a + 2.0L + static_cast<long double>(j)) * static_cast<long double>(j));
      sum += term;
    }
    return static_cast<double>((xl + 1.0L) * sum);
  }
  long double sum = 1.0L, term = 1.0L;
  for (long j = 1; j < 100000; ++j) {
    term *= (static_cast<long double>(j) - 1.0L - xl) * w /
            ((a + 2.0L + static_cast<long double>(j)) * static_cast<long double>(j));
    sum += term;
    // factorial decay: once j exceeds |x| and w the terms shrink monotonically;
    // the absolute floor covers partial sums that round to exactly zero
    if (static_cast<double>(j) > std::abs(x) + static_cast<double>(w) &&
        (std::abs(static_cast<double>(term)) < tol * std::abs(static_cast<double>(sum)) ||
         std::abs(static_cast<double>(term)) < 1e-300)) {
      return static_cast<double>((xl + 1.0L) * sum);
    }
  }
  throw std::domain_error("series for the limiting function failed to converge");
}

LimitStudy limit_study(const Rational& alpha, double x, const std::vector<long>& n_list,
                       double tol) {
  if (n_list.empty()) throw std::invalid_argument("empty n list");
  double target = h_infinity_eval(alpha, x, tol);
  LimitStudy out;
  out.monotone = true;
  double prev = 0.0;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    HFunction h(alpha, n_list[i] - 1);
    double err = std::abs(h_eval(h, x) - target);
    out.rows.push_back({n_list[i], err});
    if (i > 0 && err > prev) out.monotone = false;
    prev = err;
  }
  out.final_error = prev;
  return out;
}

std::vector<double> first_zeros(const std::function<double(double)>& f, int k, double xmax,
                                double step) {
  if (k <= 0 || step <= 0) throw std::invalid_argument("need positive count and step");
  std::vector<double> zeros;
  double lo = -1.0 + step;
  double flo = f(lo);
  for (double hi = lo + step; hi <= xmax + step / 2 && static_cast<int>(zeros.size()) < k;
       hi += step) {
    double fhi = f(hi);
    if (flo == 0.0) {
      zeros.push_back(lo);
    } else if (flo * fhi < 0.0) {
      double a = lo, b = hi, fa = flo;
      while (b - a > 1e-10) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) {
          a = b = m;
        } else if (fa * fm < 0.0) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
      }
      zeros.push_back(0.5 * (a + b));
    }
    lo = hi;
    flo = fhi;
  }
  if (static_cast<int>(zeros.size()) < k) {
    throw std::domain_error("found only " + std::to_string(zeros.size()) + " zeros on the scan range");
  }
  return zeros;
}

}  // namespace ortho
