#include "ortho/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ortho/specfun.hpp"

namespace ortho {

double gamma_pos(double x) {
  if (!(x > 0)) throw std::domain_error("gamma_pos: argument must be positive");
  return std::exp(std::lgamma(x));
}

double ReducedIntegral::value() const {
  return coefficient.to_double() * gamma_pos(base.to_double() + 1.0);
}

ReducedIntegral gamma_moment(const RationalPoly& p, const Rational& base) {
  if (base <= Rational(-1)) throw std::domain_error("divergent integral");
  Rational acc = 0;
  Rational poch = 1;  // (base+1)_j
  const int deg = p.degree();
  for (int j = 0; j <= deg; ++j) {
    acc += p.coeff(static_cast<std::size_t>(j)) * poch;
    poch *= base + 1 + Rational(j);
  }
  return {acc, base};
}

namespace {

// Implicit-shift QL on a symmetric tridiagonal, accumulating only the first
// row of the eigenvector matrix (all that quadrature weights need).
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  constexpr double kTol = 1e-14;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double scale = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kTol * scale) break;
      }
      if (m == l) break;
      if (++iter > 50) throw std::runtime_error("quadrature eigen-iteration stalled");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

}  // namespace

QuadRule gauss_laguerre_rule(int size, double a) {
  if (size < 1) throw std::invalid_argument("quadrature rule needs size >= 1");
  if (!(a > -1.0)) throw std::domain_error("divergent integral");
  std::vector<double> d(size), e(size, 0.0), z(size, 0.0);
  for (int i = 0; i < size; ++i) d[i] = 2.0 * i + a + 1.0;
  for (int i = 1; i < size; ++i) e[i - 1] = std::sqrt(i * (i + a));
  z[0] = 1.0;
  tridiag_ql(d, e, z);
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });
  QuadRule rule;
  rule.exponent = a;
  rule.nodes.reserve(size);
  rule.weights.reserve(size);
  const double total = gamma_pos(a + 1.0);
  for (int i : order) {
    rule.nodes.push_back(d[i]);
    rule.weights.push_back(total * z[i] * z[i]);
  }
  return rule;
}

double quad_integrate(const std::function<double(double)>& f, const QuadRule& rule) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double fx = f(rule.nodes[i]);
    if (!std::isfinite(fx))
      throw std::domain_error("quad_integrate: non-finite integrand at node " +
                              std::to_string(rule.nodes[i]));
    acc += rule.weights[i] * fx;
  }
  return acc;
}

Rational laguerre_orthonorm_check(long m, long n, const Rational& alpha) {
  const RationalPoly p = laguerre_coeffs({m, alpha}) * laguerre_coeffs({n, alpha});
  const ReducedIntegral red = gamma_moment(p, alpha);
  const Rational expected = m == n ? pochhammer(alpha + 1, n) / factorial(n) : Rational(0);
  if (red.coefficient != expected)
    throw std::runtime_error("laguerre orthogonality reduction mismatch");
  return red.coefficient;
}

}  // namespace ortho

