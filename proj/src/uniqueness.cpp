#include "ortho/uniqueness.hpp"

#include <stdexcept>

#include "ortho/specfun.hpp"

namespace ortho {

RationalPoly beta_condition_poly(long m, long n, const Rational& alpha, const Rational& kappa) {
  const Rational base = alpha + kappa;
  if (base <= Rational(-1)) throw std::domain_error("divergent integral");
  const RationalPoly am = laguerre_coeffs({m, alpha});
  const RationalPoly bn = laguerre_coeffs({n, alpha});
  // sum_{j,k} am_j bn_k (base+1)_(j+k) beta^j (2-beta)^k
  std::vector<Rational> poch(static_cast<std::size_t>(m + n) + 1);
  poch[0] = 1;
  for (long d = 0; d < m + n; ++d) poch[d + 1] = poch[d] * (base + 1 + Rational(d));
  const RationalPoly two_minus({Rational(2), Rational(-1)});
  std::vector<RationalPoly> tm_pow(static_cast<std::size_t>(n) + 1);
  tm_pow[0] = RationalPoly::constant(1);
  for (long k = 1; k <= n; ++k) tm_pow[k] = tm_pow[k - 1] * two_minus;
  RationalPoly acc;
  for (long j = 0; j <= m; ++j) {
    RationalPoly inner;
    for (long k = 0; k <= n; ++k) {
      const Rational c = am.coeff(j) * bn.coeff(k) * poch[j + k];
      if (!c.is_zero()) inner += c * tm_pow[k];
    }
    acc += RationalPoly::monomial(1, static_cast<std::size_t>(j)) * inner;
  }
  return acc;
}

ScaledInner scaled_inner_reduced(long m, long n, const Rational& g_m, const Rational& g_n,
                                 const Rational& alpha, const Rational& kappa) {
  if (g_m <= Rational(0) || g_n <= Rational(0))
    throw std::invalid_argument("scaled inner product: scalings must be positive");
  const Rational beta = Rational(2) * g_m / (g_m + g_n);
  ScaledInner out;
  out.reduced = cross_integral_reduced(m, n, alpha, kappa, beta);
  out.prefactor = {(g_m + g_n) / 2, -(alpha + kappa + 1)};
  return out;
}

Rational gamma1_solve(const Rational& alpha, const Rational& kappa) {
  if ((alpha + Rational(2) * kappa + 1).is_zero())
    throw std::domain_error("degenerate scaling condition");
  const RationalPoly cond = beta_condition_poly(0, 1, alpha, kappa);
  // beta = 2/(1+g): root in g of the cleared numerator
  const MobiusNumerator mb = cond.mobius(2, 0, 1, 1);
  if (mb.numerator.degree() != 1) throw std::domain_error("degenerate scaling condition");
  const Rational root = -mb.numerator.coeff(0) / mb.numerator.coeff(1);
  if (root <= Rational(0)) throw std::domain_error("no admissible scaling");
  if (!cond.evaluate(Rational(2) / (Rational(1) + root)).is_zero())
    throw std::runtime_error("scaling condition root fails to verify");
  return root;
}

QPair q_polynomials(const Rational& alpha, const Rational& kappa) {
  QPair out;
  {
    const RationalPoly c2 = beta_condition_poly(0, 2, alpha, kappa);
    const MobiusNumerator mb = c2.mobius(2, 0, 1, 1);
    out.q2 = mb.numerator.primitive();
    if (out.q2.degree() != 2)
      throw std::domain_error("degenerate quadratic scaling condition");
  }
  {
    const Rational g1 = gamma1_solve(alpha, kappa);
    const RationalPoly c3 = beta_condition_poly(1, 2, alpha, kappa);
    // beta = 2 g1 / (g1 + g)
    const MobiusNumerator mb = c3.mobius(Rational(2) * g1, 0, g1, 1);
    out.q3 = mb.numerator.primitive();
    if (out.q3.degree() != 3) throw std::domain_error("degenerate cubic scaling condition");
  }
  return out;
}

DiscriminantCheck discriminant_check(const Rational& alpha, const Rational& kappa) {
  const QPair q = q_polynomials(alpha, kappa);
  DiscriminantCheck out;
  out.computed = discriminant(q.q2);
  out.reference = Rational(16) * kappa * (alpha + kappa + 1) * (alpha + 2);
  if (out.computed.is_zero() || out.reference.is_zero()) {
    out.ratio = 0;
    out.pass = out.computed.is_zero() && out.reference.is_zero();
  } else {
    out.ratio = out.computed / out.reference;
    out.pass = out.computed.sign() == out.reference.sign() && out.ratio.is_square();
  }
  return out;
}

std::vector<ResultantRow> resultant_scan(const std::vector<Rational>& alphas,
                                         const std::vector<Rational>& kappas) {
  std::vector<ResultantRow> rows;
  rows.reserve(alphas.size() * kappas.size());
  for (const Rational& a : alphas)
    for (const Rational& k : kappas) {
      const QPair q = q_polynomials(a, k);
      const Rational r = resultant(q.q2, q.q3);
      rows.push_back({a, k, r, r.is_zero()});
    }
  return rows;
}

Rational kappa0_factor_check(long n, const Rational& alpha, const Rational& g_n) {
  if (n < 1) throw std::invalid_argument("factor check needs n >= 1");
  if (g_n <= Rational(0)) throw std::invalid_argument("scaling must be positive");
  const RationalPoly cond = beta_condition_poly(0, n, alpha, 0);
  RationalPoly divisor = RationalPoly::constant(1);
  const RationalPoly lin({Rational(-1), Rational(1)});  // beta - 1
  for (long i = 0; i < n; ++i) divisor = divisor * lin;
  const auto [quot, rem] = cond.divrem(divisor);
  if (!rem.is_zero() || quot.degree() != 0)
    throw std::runtime_error("coefficient is not a constant multiple of (beta-1)^n");
  if (quot.coeff(0) != pochhammer(alpha + 1, n) / factorial(n))
    throw std::runtime_error("unexpected cofactor in (beta-1)^n factorization");
  const Rational beta = Rational(2) / (Rational(1) + g_n);
  return cond.evaluate(beta);
}

Rational kappa1_phi0_phin_cofactor(long n, const Rational& alpha) {
  if (n < 2) throw std::invalid_argument("cofactor check needs n >= 2");
  const RationalPoly cond = beta_condition_poly(0, n, alpha, 1);
  RationalPoly divisor({-(alpha + Rational(n + 1)) - Rational(n), alpha + Rational(n + 1)});
  const RationalPoly lin({Rational(-1), Rational(1)});  // beta - 1
  for (long i = 0; i < n - 1; ++i) divisor = divisor * lin;
  const auto [quot, rem] = cond.divrem(divisor);
  if (!rem.is_zero() || quot.degree() != 0)
    throw std::runtime_error("condition polynomial fails the claimed factorization");
  const Rational expected = pochhammer(alpha + 2, n - 1) / factorial(n);
  if (quot.coeff(0) != expected)
    throw std::runtime_error("unexpected cofactor in scaling factorization");
  return quot.coeff(0);
}

Phi1PhinResult kappa1_phi1_phin(long n, const Rational& alpha) {
  if (n < 2) throw std::invalid_argument("cross check needs n >= 2");
  const Rational g1 = (alpha + 1) / (alpha + 3);
  const ScaledInner inner = scaled_inner_reduced(1, n, g1, 1, alpha, 1);
  Phi1PhinResult out;
  out.coefficient = inner.reduced.coefficient;
  out.prefactor = inner.prefactor;
  out.reference = Rational(n % 2 == 1 ? 1 : -1) * Rational(n) *
                  ((alpha + 3) * Rational(n) - 1) * (alpha + 3) *
                  pochhammer(alpha + 3, n - 2) /
                  ((alpha + 1).pow(n - 2) * (alpha + 2));
  if (out.coefficient.is_zero() || out.coefficient.sign() != out.reference.sign())
    throw std::runtime_error("cross inner product sign disagrees with closed form");
  // normalized inner product = prefactor * coefficient (the Gamma factors cancel)
  out.ratio = out.coefficient.to_double() * out.prefactor.factor() / out.reference.to_double();
  return out;
}

}  // namespace ortho
