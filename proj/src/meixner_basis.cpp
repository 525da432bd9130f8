#include "ortho/meixner_basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ortho/integrate.hpp"

namespace ortho {

HFunction::HFunction(Rational alpha_, long n_) : alpha(std::move(alpha_)), n(n_) {
  if (alpha < Rational(0)) throw std::invalid_argument("h function: alpha < 0");
  if (n < 0) throw std::invalid_argument("h function: negative degree");
}

Rational HFunction::u() const { return Rational(n + 1) / (alpha + Rational(n + 2)); }

MeixnerSpec HFunction::meixner() const {
  const Rational uu = u();
  return {n, alpha + 3, uu * uu};
}

Rational h_eval_exact(const HFunction& h, long x) {
  if (x < -1) throw std::invalid_argument("h function: x < -1");
  if (x == -1) return 0;
  return h.u().pow(x) * Rational(x + 1) * meixner_eval_exact(h.meixner(), Rational(x));
}

double h_eval(const HFunction& h, double x) {
  if (x < -1.0) throw std::invalid_argument("h function: x < -1");
  return std::pow(h.u().to_double(), x) * (x + 1.0) * meixner_eval(h.meixner(), x);
}

Rational illustration_overlap(long n, long m, const Rational& alpha, const Rational& beta) {
  if (beta <= Rational(0) || beta >= Rational(2) || beta == Rational(1))
    throw std::invalid_argument("overlap: beta outside (0,2) or at the degenerate point 1");
  const RationalPoly p = laguerre_coeffs({n, alpha + 1}).scale_arg(beta) *
                         laguerre_coeffs({m, alpha + 1}).scale_arg(Rational(2) - beta);
  const Rational direct = gamma_moment(p, alpha + 1).coefficient;
  const Rational omb = Rational(1) - beta;
  const Rational closed = omb.pow(n + m) * Rational(m % 2 == 0 ? 1 : -1) *
                          pochhammer(alpha + 2, n) * pochhammer(alpha + 2, m) /
                          (factorial(n) * factorial(m)) *
                          meixner_eval_exact({n, alpha + 2, omb * omb}, Rational(m));
  if (direct != closed)
    throw std::runtime_error("basis overlap disagrees with its Meixner closed form");
  return direct;
}

TransformEntry transform_entry(long n, long m, const Rational& alpha) {
  if (n < 0 || m < 0) throw std::invalid_argument("transform entry: negative index");
  if (alpha <= Rational(-1)) throw std::invalid_argument("transform entry: alpha <= -1");
  const Rational u = Rational(n) / (alpha + Rational(n + 1));
  const Rational beta = (alpha + 1) / (alpha + Rational(n + 1));
  const RationalPoly p = laguerre_coeffs({n, alpha}).scale_arg(beta) *
                         laguerre_coeffs({m, alpha + 1}).scale_arg(Rational(2) - beta);
  TransformEntry out;
  out.reduced = gamma_moment(p, alpha + 1).coefficient;
  out.prefactor = {(alpha + 1) * (Rational(1) + u), alpha + 2};
  Rational closed;
  if (n == 0 && m == 0) {
    closed = 1;
  } else if (n == 0 || m == 0) {
    closed = 0;
  } else {
    closed = pochhammer(alpha + 3, m - 1) * pochhammer(alpha + 2, n - 1) /
             (factorial(m - 1) * factorial(n - 1)) * Rational(m % 2 == 1 ? 1 : -1) *
             (Rational(1) - u * u) * u.pow(m + n - 3) *
             hyp2f1_terminating(n - 1, Rational(1 - m), alpha + 3,
                                Rational(1) - u.pow(-2));
  }
  if (out.reduced != closed)
    throw std::runtime_error("transform entry disagrees with its closed form");
  out.value = out.reduced.to_double() * out.prefactor.factor();
  return out;
}

namespace {

double poch_d(double a, long n) {
  double p = 1.0;
  for (long j = 0; j < n; ++j) p *= a + j;
  return p;
}

}  // namespace

double column_norm(long m, const Rational& alpha) {
  const double a = alpha.to_double();
  return std::pow(a + 1.0, a + 2.0) * poch_d(a + 2.0, m) / std::tgamma(m + 1.0);
}

double phi_norm_row(long n, const Rational& alpha) {
  const double a = alpha.to_double();
  const double tail = n == 0 ? 1.0 / (a + 1.0) : poch_d(a + 2.0, n - 1) / std::tgamma(n + 1.0);
  return std::pow(a + 2.0 * n + 1.0, a + 3.0) * tail;
}

double TransformMatrix::gram_deviation() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) {
      double dot = 0.0;
      for (std::size_t m = 0; m < rows[i].size(); ++m) dot += rows[i][m] * rows[j][m];
      const double dev = std::abs(dot - (i == j ? 1.0 : 0.0));
      if (dev > worst) worst = dev;
    }
  return worst;
}

TransformMatrix orthogonal_block(const Rational& alpha, long nmax, long mmax) {
  if (nmax < 0 || mmax < 0) throw std::invalid_argument("orthogonal block: negative extent");
  TransformMatrix out;
  out.alpha = alpha;
  out.nmax = nmax;
  out.mmax = mmax;
  out.rows.assign(nmax + 1, std::vector<double>(mmax + 1, 0.0));
  out.rows[0][0] = 1.0;
  const double a = alpha.to_double();
  for (long n = 1; n <= nmax; ++n) {
    const double u = static_cast<double>(n) / (a + n + 1.0);
    const double z = 1.0 - 1.0 / (u * u);
    const double pref = std::pow((a + 1.0) * (1.0 + u), a + 2.0);
    const double row_norm = std::sqrt(phi_norm_row(n, alpha));
    for (long m = 1; m <= mmax; ++m) {
      // terminating 2F1(1-n, 1-m; alpha+3; z)
      double f = 1.0;
      double term = 1.0;
      for (long j = 0; j < n - 1; ++j) {
        term *= (1.0 - n + j) * (1.0 - m + j) * z / ((a + 3.0 + j) * (j + 1.0));
        f += term;
      }
      const double mag = std::exp(std::lgamma(a + 2.0 + m) - std::lgamma(a + 3.0) -
                                  std::lgamma(static_cast<double>(m))) *
                         poch_d(a + 2.0, n - 1) / std::tgamma(static_cast<double>(n));
      const double entry = pref * mag * (m % 2 == 1 ? 1.0 : -1.0) * (1.0 - u * u) *
                           std::pow(u, static_cast<double>(m + n - 3)) * f;
      out.rows[n][m] = entry / (row_norm * std::sqrt(column_norm(m, alpha)));
    }
  }
  return out;
}

namespace {

// Coefficientwise absolute value, a pointwise majorant on x >= 0.
RationalPoly abs_poly(const RationalPoly& p) {
  std::vector<Rational> c(p.coeffs());
  for (auto& v : c) v = v.abs();
  return RationalPoly(std::move(c));
}

}  // namespace

HOrthoSum h_orthogonality_sum(long n, long l, const Rational& alpha, double tol) {
  if (n < 1 || l < 1) throw std::invalid_argument("h sum needs n, l >= 1");
  if (!(tol > 0)) throw std::invalid_argument("h sum: tolerance must be positive");
  const HFunction hn(alpha, n - 1);
  const HFunction hl(alpha, l - 1);
  const double a = alpha.to_double();
  const double r = hn.u().to_double() * hl.u().to_double();
  const RationalPoly qn = abs_poly(meixner_poly(hn.meixner()));
  const RationalPoly ql = abs_poly(meixner_poly(hl.meixner()));
  const int dn = qn.degree();
  const int dl = ql.degree();
  double sum = 0.0;
  double w = 1.0;  // (alpha+2)_m / m!
  long m = 0;
  while (true) {
    ++m;
    w *= (a + 1.0 + m) / m;
    const double x = static_cast<double>(m - 1);
    sum += w * h_eval(hn, x) * h_eval(hl, x);
    if (m >= 8) {
      const double bound = w * std::pow(r, x) * (x + 1.0) * (x + 1.0) * qn.evaluate_d(x) *
                           ql.evaluate_d(x);
      // every later term ratio is at most rho (all three factors decrease in m)
      const double rho = r * (1.0 + (a + 1.0) / (m + 1.0)) *
                         std::pow((m + 1.0) / m, 2.0) *
                         std::pow(m / (m - 1.0), static_cast<double>(dn + dl));
      if (rho < 1.0 && bound * rho / (1.0 - rho) < tol) break;
    }
    if (m > 2000000) throw std::runtime_error("h sum fails to converge");
  }
  HOrthoSum out;
  out.sum = sum;
  out.terms = m;
  if (n != l) {
    out.reference = 0.0;
  } else {
    out.reference = std::tgamma(static_cast<double>(n)) / poch_d(a + 2.0, n - 1) *
                    std::pow(a + 2.0, 2.0) * std::pow(a + n + 1.0, 2.0 * a + 2.0 * n + 4.0) /
                    (std::pow(a + 1.0, a + 4.0) * std::pow(a + 2.0 * n + 1.0, a + 3.0) *
                     std::pow(static_cast<double>(n), 2.0 * n - 3.0));
  }
  return out;
}

double meixner_norm_sum(long n, long m, const Rational& gamma, const Rational& c, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("norm sum: tolerance must be positive");
  const MeixnerSpec sn{n, gamma, c};
  const MeixnerSpec sm{m, gamma, c};
  const RationalPoly qn = abs_poly(meixner_poly(sn));
  const RationalPoly qm = abs_poly(meixner_poly(sm));
  const double g = gamma.to_double();
  const double cd = c.to_double();
  double sum = meixner_eval(sn, 0.0) * meixner_eval(sm, 0.0);
  double w = 1.0;  // (gamma)_x / x! c^x
  long x = 0;
  while (true) {
    ++x;
    w *= cd * (g + x - 1.0) / x;
    sum += w * meixner_eval(sn, x) * meixner_eval(sm, x);
    if (x >= 8) {
      const double bound = w * qn.evaluate_d(x) * qm.evaluate_d(x);
      const double rho = cd * (1.0 + std::max(0.0, g - 1.0) / (x + 1.0)) *
                         std::pow(x / (x - 1.0), static_cast<double>(qn.degree() + qm.degree()));
      if (rho < 1.0 && bound * rho / (1.0 - rho) < tol) break;
    }
    if (x > 2000000) throw std::runtime_error("norm sum fails to converge");
  }
  return sum;
}

double meixner_norm_reference(long n, long m, const Rational& gamma, const Rational& c) {
  if (n != m) return 0.0;
  const double g = gamma.to_double();
  const double cd = c.to_double();
  return std::tgamma(n + 1.0) / (poch_d(g, n) * std::pow(cd, static_cast<double>(n)) *
                                 std::pow(1.0 - cd, g));
}

Rational recentering_coefficient(long n, const Rational& alpha) {
  if (n < 1) throw std::invalid_argument("recentering needs n >= 1");
  const HFunction h(alpha, n - 1);
  const MeixnerSpec spec = h.meixner();
  const RationalPoly target = RationalPoly({Rational(1), Rational(1)}) * meixner_poly(spec);
  const RationalPoly up = meixner_poly({n, spec.gamma, spec.c});
  const RationalPoly mid = meixner_poly(spec);
  RationalPoly rest = target;
  const Rational c_up = rest.coeff(n) / up.coeff(n);
  rest -= c_up * up;
  if (rest.degree() > static_cast<int>(n) - 1)
    throw std::runtime_error("recentering expansion fails to close");
  const Rational c_mid = rest.coeff(n - 1) / mid.coeff(n - 1);
  rest -= c_mid * mid;
  if (n >= 2) {
    const RationalPoly down = meixner_poly({n - 2, spec.gamma, spec.c});
    const Rational c_down = rest.coeff(n - 2) / down.coeff(n - 2);
    rest -= c_down * down;
  }
  if (!rest.is_zero())
    throw std::runtime_error("recentering expansion needs more than three terms");
  return c_mid;
}

}  // namespace ortho
