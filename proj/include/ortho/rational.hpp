#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace ortho {

// Exact rational number. Always reduced to lowest terms with positive
// denominator, so operator== is canonical equality.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Parses "p" or "p/q" (base 10).
  static Rational parse(const std::string& text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  // True iff this equals r*r for some rational r.
  bool is_square() const;

  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  Rational abs() const;
  Rational inv() const;        // pre: nonzero
  Rational pow(long e) const;  // pre: nonzero when e < 0

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // pre: o nonzero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1. pre: n >= 0.
Rational pochhammer(const Rational& a, long n);

// Rising factorial extended to n = -1 by (a)_{-1} = 1/(a-1). pre: n >= -1.
Rational pochhammer_ext(const Rational& a, long n);

Rational factorial(long n);  // pre: n >= 0

}  // namespace ortho
