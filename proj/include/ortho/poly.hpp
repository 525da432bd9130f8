#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ortho/rational.hpp"

namespace ortho {

struct MobiusNumerator;

// Univariate polynomial with exact rational coefficients, stored dense by
// ascending power. Invariant: no trailing zero coefficients (zero poly is
// the empty vector, degree -1).
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly variable();
  static RationalPoly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t j) const;  // zero beyond degree
  const Rational& leading() const;      // pre: nonzero
  const std::vector<Rational>& coeffs() const { return c_; }

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& s, const RationalPoly& p);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

  RationalPoly derivative() const;
  Rational evaluate(const Rational& x) const;
  double evaluate_d(double x) const;

  // p(b*x)
  RationalPoly scale_arg(const Rational& b) const;

  // Substitutes x -> (a + b t) / (c + d t) and clears denominators:
  // numerator = (c + d t)^deg(p) * p((a+bt)/(c+dt)), cleared_power = deg(p).
  // pre: (c, d) != (0, 0)
  MobiusNumerator mobius(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d) const;

  // Quotient and remainder with deg(rem) < deg(divisor). pre: divisor nonzero.
  std::pair<RationalPoly, RationalPoly> divrem(const RationalPoly& divisor) const;

  // Integer-coefficient associate with coprime coefficients and positive
  // leading coefficient. pre: nonzero.
  RationalPoly primitive() const;
  // Rational c with *this == c * primitive(). pre: nonzero.
  Rational content() const;

  std::string str() const;  // human-readable, for diagnostics

 private:
  void normalize();
  std::vector<Rational> c_;
};

struct MobiusNumerator {
  RationalPoly numerator;
  long cleared_power = 0;
};

// Monic gcd over the rationals (1 for coprime inputs).
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);

// Resultant via the subresultant pseudo-remainder sequence after clearing
// denominators. pre: both nonzero ("undefined resultant" otherwise).
Rational resultant(const RationalPoly& p, const RationalPoly& q);

// (-1)^{d(d-1)/2} resultant(p, p') / leading(p), d = deg(p). pre: d >= 1.
Rational discriminant(const RationalPoly& p);

}  // namespace ortho
