#ifndef HOLONOMY_RATIONAL_HPP
#define HOLONOMY_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace holonomy {

// Exact rational number backed by GMP. Always canonical: gcd(|num|, den) = 1
// and den > 0. Every constructor canonicalizes, so the invariant cannot be
// broken from outside.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p", "p/q", and decimal notation "a.b" (converted exactly).
  static Rational from_string(const std::string& text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational reciprocal() const;
  // Integer power; negative exponents allowed for nonzero values.
  Rational pow(long e) const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  // Largest integer <= value.
  mpz_class floor() const;

  double to_double() const { return v_.get_d(); }

  // "p" when integral, "p/q" otherwise. This is the certificate wire format.
  std::string str() const;

  // Combined bit length of numerator and denominator; used by resource caps.
  std::size_t bit_size() const {
    return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// gcd of |a|, |b| as a nonnegative rational: gcd(num)/lcm(den). gcd(0,0) = 0.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace holonomy

#endif
