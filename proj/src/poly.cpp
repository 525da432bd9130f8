#include "ortho/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ortho {

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions for
// integer inputs. pre: b nonzero, deg a >= deg b.
RationalPoly pseudo_rem(RationalPoly a, const RationalPoly& b) {
  const long db = b.degree();
  const Rational lb = b.leading();
  long steps = a.degree() - db + 1;
  while (!a.is_zero() && a.degree() >= db) {
    const long shift = a.degree() - db;
    const Rational la = a.leading();
    a = lb * a - la * RationalPoly::monomial(1, static_cast<std::size_t>(shift)) * b;
    --steps;
  }
  // keep the full lc(b)^(delta+1) scaling even when division terminates early
  while (steps-- > 0) a = lb * a;
  return a;
}

}  // namespace

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void RationalPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::variable() { return RationalPoly({Rational(0), Rational(1)}); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return RationalPoly(std::move(v));
}

Rational RationalPoly::coeff(std::size_t j) const {
  return j < c_.size() ? c_[j] : Rational(0);
}

const Rational& RationalPoly::leading() const {
  if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return c_.back();
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  normalize();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return RationalPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const Rational& s, const RationalPoly& p) {
  if (s.is_zero()) return RationalPoly();
  RationalPoly r = p;
  for (auto& c : r.c_) c *= s;
  return r;
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return RationalPoly();
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t j = 1; j < c_.size(); ++j) out[j - 1] = Rational(static_cast<long>(j)) * c_[j];
  return RationalPoly(std::move(out));
}

Rational RationalPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t j = c_.size(); j-- > 0;) acc = acc * x + c_[j];
  return acc;
}

double RationalPoly::evaluate_d(double x) const {
  double acc = 0;
  for (std::size_t j = c_.size(); j-- > 0;) acc = acc * x + c_[j].to_double();
  return acc;
}

RationalPoly RationalPoly::scale_arg(const Rational& b) const {
  RationalPoly r = *this;
  Rational p = 1;
  for (std::size_t j = 1; j < r.c_.size(); ++j) {
    p *= b;
    r.c_[j] *= p;
  }
  r.normalize();
  return r;
}

MobiusNumerator RationalPoly::mobius(const Rational& a, const Rational& b,
                                     const Rational& c, const Rational& d) const {
  if (c.is_zero() && d.is_zero()) throw std::invalid_argument("mobius: zero denominator map");
  if (is_zero()) return {RationalPoly(), 0};
  const long deg = degree();
  const RationalPoly num({a, b});
  const RationalPoly den({c, d});
  // sum_j c_[j] * num^j * den^(deg-j)
  std::vector<RationalPoly> den_pow(static_cast<std::size_t>(deg) + 1);
  den_pow[0] = constant(1);
  for (long k = 1; k <= deg; ++k) den_pow[k] = den_pow[k - 1] * den;
  RationalPoly acc;
  RationalPoly num_pow = constant(1);
  for (long j = 0; j <= deg; ++j) {
    if (!c_[static_cast<std::size_t>(j)].is_zero())
      acc += c_[static_cast<std::size_t>(j)] * (num_pow * den_pow[deg - j]);
    if (j < deg) num_pow = num_pow * num;
  }
  return {acc, deg};
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divrem(const RationalPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  RationalPoly rem = *this;
  RationalPoly quot;
  const long dd = divisor.degree();
  const Rational ld = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const long shift = rem.degree() - dd;
    const Rational q = rem.leading() / ld;
    const RationalPoly term = monomial(q, static_cast<std::size_t>(shift));
    quot += term;
    rem -= term * divisor;
  }
  return {quot, rem};
}

Rational RationalPoly::content() const {
  if (is_zero()) throw std::invalid_argument("content of zero polynomial");
  mpz_class den_lcm = 1;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : c_) {
    mpz_class scaled = c.num() * (den_lcm / c.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational cont(num_gcd, den_lcm);
  return leading().sign() < 0 ? -cont : cont;
}

RationalPoly RationalPoly::primitive() const {
  const Rational inv = content().inv();
  return inv * *this;
}

std::string RationalPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = c_.size(); j-- > 0;) {
    if (c_[j].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[j].str();
    if (j >= 1) os << "*x";
    if (j >= 2) os << "^" << j;
    first = false;
  }
  return os.str();
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.leading().inv() * a;
}

Rational resultant(const RationalPoly& p, const RationalPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("undefined resultant");
  RationalPoly A = p;
  RationalPoly B = q;
  Rational s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -1;
  }
  // res(p, q) = ca^deg(q) * cb^deg(p) * res(A/ca, B/cb) with integer
  // primitive parts, then the subresultant sequence stays in Z.
  const Rational ca = A.content();
  const Rational cb = B.content();
  Rational t = ca.pow(B.degree()) * cb.pow(A.degree());
  A = A.primitive();
  B = B.primitive();
  Rational g = 1;
  Rational h = 1;
  while (B.degree() > 0) {
    const long delta = A.degree() - B.degree();
    if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -s;
    RationalPoly R = pseudo_rem(A, B);
    A = B;
    const Rational divisor = g * h.pow(delta);
    B = divisor.inv() * R;
    g = A.leading();
    h = delta == 0 ? h : g.pow(delta) / h.pow(delta - 1);
  }
  if (B.is_zero()) return Rational(0);
  const long da = A.degree();
  if (da == 0) return s * t;
  return s * t * B.coeff(0).pow(da) / h.pow(da - 1);
}

Rational discriminant(const RationalPoly& p) {
  const long d = p.degree();
  if (d < 1) throw std::invalid_argument("discriminant needs degree >= 1");
  const RationalPoly dp = p.derivative();
  const Rational r = dp.is_zero() ? Rational(0) : resultant(p, dp);
  const Rational sign = (d * (d - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1);
  return sign * r / p.leading();
}

}  // namespace ortho
