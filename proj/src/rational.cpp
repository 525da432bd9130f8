#include "ortho/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ortho {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("division by zero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("division by zero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0) throw std::domain_error("division by zero");
  q.canonicalize();
  Rational r;
  r.v_ = q;
  return r;
}

bool Rational::is_square() const {
  if (sign() < 0) return false;
  if (is_zero()) return true;
  return mpz_perfect_square_p(v_.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(v_.get_den().get_mpz_t()) != 0;
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.sign() < 0) r.v_ = -r.v_;
  return r;
}

Rational Rational::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Rational r;
  mpz_pow_ui(r.v_.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.v_.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return r;  // powers of a canonical fraction stay canonical
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pochhammer(const Rational& a, long n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational p = 1;
  for (long j = 0; j < n; ++j) p *= a + Rational(j);
  return p;
}

Rational pochhammer_ext(const Rational& a, long n) {
  if (n >= 0) return pochhammer(a, n);
  if (n == -1) return (a - 1).inv();
  throw std::invalid_argument("pochhammer_ext: length below -1");
}

Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

}  // namespace ortho
