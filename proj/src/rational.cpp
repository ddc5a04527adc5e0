#include "holonomy/rational.hpp"

#include <cctype>
#include <ostream>

#include "holonomy/errors.hpp"

namespace holonomy {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e > 0 ? *this : reciprocal();
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
  return Rational(num, den);
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Rational Rational::from_string(const std::string& text) {
  std::size_t i = 0, n = text.size();
  auto fail = [&] { throw ParseError("bad rational literal: '" + text + "'"); };
  while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = n;
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (i >= end) fail();

  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail();
    return text.substr(start, pos - start);
  };

  std::string ip = digits(i);
  Rational result;
  if (i < end && text[i] == '/') {
    ++i;
    std::string dp = digits(i);
    if (i != end) fail();
    mpz_class den(dp);
    if (den == 0) fail();
    result = Rational(mpz_class(ip), den);
  } else if (i < end && text[i] == '.') {
    ++i;
    std::string fp = digits(i);
    if (i != end) fail();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    result = Rational(mpz_class(ip) * scale + mpz_class(fp), scale);
  } else {
    if (i != end) fail();
    result = Rational(mpz_class(ip), mpz_class(1));
  }
  return neg ? -result : result;
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (!is_integer()) s += "/" + v_.get_den().get_str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  return Rational(num, den);
}

}  // namespace holonomy
