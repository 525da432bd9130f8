#include "ortho/specfun.hpp"

#include <stdexcept>

namespace ortho {

LaguerreSpec::LaguerreSpec(long n_, Rational alpha_) : n(n_), alpha(std::move(alpha_)) {
  if (n < 0) throw std::invalid_argument("laguerre: negative degree");
  if (alpha <= Rational(-1)) throw std::invalid_argument("laguerre: alpha <= -1");
}

RationalPoly laguerre_coeffs(const LaguerreSpec& s) {
  // c_0 = (alpha+1)_n / n!, c_{j+1}/c_j = (j-n) / ((alpha+1+j)(j+1))
  std::vector<Rational> c(static_cast<std::size_t>(s.n) + 1);
  c[0] = pochhammer(s.alpha + 1, s.n) / factorial(s.n);
  for (long j = 0; j < s.n; ++j)
    c[j + 1] = c[j] * Rational(j - s.n) / ((s.alpha + 1 + Rational(j)) * Rational(j + 1));
  return RationalPoly(std::move(c));
}

double laguerre_eval(const LaguerreSpec& s, double x) {
  const double a = s.alpha.to_double();
  double prev = 1.0;
  if (s.n == 0) return prev;
  double cur = a + 1.0 - x;
  for (long k = 1; k < s.n; ++k) {
    const double next = ((a + 1.0 + 2.0 * k - x) * cur - (k + a) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

RationalPoly ode_residual(const LaguerreSpec& s) {
  const RationalPoly y = laguerre_coeffs(s);
  const RationalPoly dy = y.derivative();
  const RationalPoly x = RationalPoly::variable();
  const RationalPoly lin({s.alpha + 1, Rational(-1)});  // alpha+1-x
  return x * dy.derivative() + lin * dy + Rational(s.n) * y;
}

std::pair<RationalPoly, RationalPoly> contig_expand(const LaguerreSpec& s) {
  if (s.n < 1) throw std::invalid_argument("contig_expand: degree must be >= 1");
  return {laguerre_coeffs({s.n, s.alpha + 1}), laguerre_coeffs({s.n - 1, s.alpha + 1})};
}

std::vector<Rational> rescale_expand(long n, const Rational& delta, const Rational& b) {
  if (n < 0) throw std::invalid_argument("rescale_expand: negative degree");
  if (delta <= Rational(-1)) throw std::invalid_argument("rescale_expand: delta <= -1");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j)
    c[j] = pochhammer(delta + 1 + Rational(j), n - j) / factorial(n - j) * b.pow(j) *
           (Rational(1) - b).pow(n - j);
  return c;
}

Rational hyp2f1_terminating(long m, const Rational& b, const Rational& c, const Rational& z) {
  if (m < 0) throw std::invalid_argument("hyp2f1: negative truncation order");
  Rational sum = 1;
  Rational term = 1;
  for (long j = 0; j < m; ++j) {
    const Rational cj = c + Rational(j);
    if (cj.is_zero()) {
      // (b)_j or (-m)_j may already have terminated the series
      if ((b + Rational(j)).is_zero() || Rational(-m + j).is_zero()) break;
      throw std::domain_error("pole in lower parameter");
    }
    term *= Rational(-m + j) * (b + Rational(j)) * z / (cj * Rational(j + 1));
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

MeixnerSpec::MeixnerSpec(long n_, Rational gamma_, Rational c_)
    : n(n_), gamma(std::move(gamma_)), c(std::move(c_)) {
  if (n < 0) throw std::invalid_argument("meixner: negative degree");
  if (gamma <= Rational(0)) throw std::invalid_argument("meixner: gamma <= 0");
  if (c <= Rational(0) || c >= Rational(1)) throw std::invalid_argument("meixner: c outside (0,1)");
}

RationalPoly meixner_poly(const MeixnerSpec& s) {
  const Rational z = Rational(1) - s.c.inv();
  RationalPoly acc = RationalPoly::constant(1);
  Rational factor = 1;                        // (-n)_j z^j / ((gamma)_j j!)
  RationalPoly poch = RationalPoly::constant(1);  // (-x)_j as a polynomial in x
  for (long j = 0; j < s.n; ++j) {
    factor *= Rational(-s.n + j) * z / ((s.gamma + Rational(j)) * Rational(j + 1));
    poch = poch * RationalPoly({Rational(j), Rational(-1)});  // *(j-x) -> (-x)_{j+1}
    acc += factor * poch;
  }
  return acc;
}

double meixner_eval(const MeixnerSpec& s, double x) {
  const double z = (Rational(1) - s.c.inv()).to_double();
  const double g = s.gamma.to_double();
  double sum = 1.0;
  double term = 1.0;
  for (long j = 0; j < s.n; ++j) {
    term *= static_cast<double>(-s.n + j) * (-x + j) * z / ((g + j) * (j + 1));
    sum += term;
  }
  return sum;
}

Rational meixner_eval_exact(const MeixnerSpec& s, const Rational& x) {
  const Rational z = Rational(1) - s.c.inv();
  Rational sum = 1;
  Rational term = 1;
  for (long j = 0; j < s.n; ++j) {
    term *= Rational(-s.n + j) * (Rational(j) - x) * z / ((s.gamma + Rational(j)) * Rational(j + 1));
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

}  // namespace ortho
