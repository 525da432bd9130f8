#include "ortho/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ortho/specfun.hpp"

namespace ortho {

double ScaledValue::factor() const {
  if (base.sign() <= 0) throw std::domain_error("scaled value: nonpositive base");
  if (exponent.is_integer() && exponent.num().fits_slong_p())
    return base.pow(exponent.num().get_si()).to_double();
  return std::pow(base.to_double(), exponent.to_double());
}

RadialMode::RadialMode(int dim_, long l_, long n_, Rational k_)
    : dim(dim_), l(l_), n(n_), k(std::move(k_)) {
  if (dim < 1) throw std::invalid_argument("radial mode: dimension must be >= 1");
  if (l < 0) throw std::invalid_argument("radial mode: negative angular degree");
  if (n < 0) throw std::invalid_argument("radial mode: negative radial degree");
  if (k <= Rational(0)) throw std::invalid_argument("radial mode: coupling must be positive");
  if (alpha() <= Rational(-1)) throw std::invalid_argument("radial mode: alpha <= -1");
}

Rational RadialMode::alpha() const { return Rational(dim + 2 * l - 2); }

Rational RadialMode::energy() const {
  const Rational mu = k / (Rational(2) * (alpha() + Rational(2 * n + 1)));
  return -(mu * mu);
}

PhiFunction::PhiFunction(Rational alpha_, long n_) : alpha(std::move(alpha_)), n(n_) {
  if (n < 0) throw std::invalid_argument("phi: negative degree");
  if (alpha <= Rational(-1)) throw std::invalid_argument("phi: alpha <= -1");
}

double PhiFunction::operator()(double x) const {
  const double scale = (alpha + Rational(2 * n + 1)).to_double();
  return laguerre_eval({n, alpha}, x / scale) * std::exp(-x / (2.0 * scale));
}

ReducedIntegral cross_integral_reduced(long m, long n, const Rational& alpha,
                                       const Rational& kappa, const Rational& beta) {
  if (beta <= Rational(0) || beta >= Rational(2))
    throw std::invalid_argument("cross integral: beta outside (0,2)");
  const RationalPoly p =
      laguerre_coeffs({m, alpha}).scale_arg(beta) *
      laguerre_coeffs({n, alpha}).scale_arg(Rational(2) - beta);
  return gamma_moment(p, alpha + kappa);
}

PhiInnerProduct phi_inner_product(long m, long n, const Rational& alpha) {
  const Rational span = alpha + Rational(m + n + 1);
  const Rational beta = (alpha + Rational(2 * n + 1)) / span;
  PhiInnerProduct out;
  out.reduced = cross_integral_reduced(m, n, alpha, 1, beta);
  out.prefactor = {(alpha + Rational(2 * m + 1)) * (alpha + Rational(2 * n + 1)) / span,
                   alpha + 2};
  out.value = out.reduced.value() * out.prefactor.factor();
  return out;
}

double phi_inner_quad(long m, long n, const Rational& alpha, int npts) {
  const double cm = alpha.to_double() + 2 * m + 1;
  const double cn = alpha.to_double() + 2 * n + 1;
  const double d = 2 * cm * cn / (cm + cn);  // x = d * s
  const QuadRule rule = gauss_laguerre_rule(npts, alpha.to_double() + 1);
  const LaguerreSpec lm(m, alpha), ln(n, alpha);
  const double pref = std::pow(d, alpha.to_double() + 2);
  return pref * quad_integrate(
                    [&](double s) { return laguerre_eval(lm, s * d / cm) * laguerre_eval(ln, s * d / cn); },
                    rule);
}

double PhiNorm::value() const {
  return power.factor() * coefficient.to_double() * gamma_pos(power.exponent.to_double() - 2.0);
}

PhiNorm phi_norm(long n, const Rational& alpha) {
  if (n < 0) throw std::invalid_argument("phi norm: negative degree");
  PhiNorm out;
  out.power = {alpha + Rational(2 * n + 1), alpha + 3};
  out.coefficient = pochhammer(alpha + 1, n) / factorial(n);
  return out;
}

Rational contiguity_combination(long m, long n, const Rational& alpha, const Rational& gamma) {
  if (m < 1 || n < 1) throw std::invalid_argument("contiguity combination needs m, n >= 1");
  const Rational f1 = hyp2f1_terminating(m - 1, Rational(1 - n), alpha + 2, gamma);
  const Rational f2 = hyp2f1_terminating(m, Rational(-n), alpha + 2, gamma);
  const Rational f3 = hyp2f1_terminating(m - 1, Rational(1 - n), alpha + 3, gamma);
  return (gamma - 1) * f1 + f2 - gamma * (alpha + Rational(m + n + 1)) / (alpha + 2) * f3;
}

Rational bsum_check(long m, long n, const Rational& alpha) {
  if (m == n) throw std::invalid_argument("bsum_check needs m != n");
  if (m < 0 || n < 0) throw std::invalid_argument("bsum_check: negative degree");
  const Rational span = alpha + Rational(m + n + 1);
  const Rational beta = (alpha + Rational(2 * n + 1)) / span;
  const Rational one_minus = Rational(1) - beta;  // (m-n)/span, nonzero
  const Rational gamma = beta * (beta - 2) / (one_minus * one_minus);
  const Rational pref = pochhammer_ext(alpha + 2, m - 1) * pochhammer_ext(alpha + 2, n - 1) /
                        (factorial(m) * factorial(n)) * one_minus.pow(m - 1) *
                        (-one_minus).pow(n - 1);
  Rational sum = 0;
  Rational term = 1;  // (-m)_j (-n)_j gamma^j / ((alpha+2)_j j!)
  const long jmax = std::min(m, n);
  for (long j = 0; j <= jmax; ++j) {
    sum += term * (Rational(j) - Rational(n) * (Rational(2) - beta)) *
           (Rational(j) - Rational(m) * beta);
    term *= Rational(-m + j) * Rational(-n + j) * gamma /
            ((alpha + 2 + Rational(j)) * Rational(j + 1));
  }
  const Rational value = pref * sum;
  const ReducedIntegral direct = cross_integral_reduced(m, n, alpha, 1, beta);
  if (value != direct.coefficient)
    throw std::runtime_error("closed-form cross integral disagrees with direct reduction");
  return value;
}

}  // namespace ortho
