#ifndef HOLONOMY_UNIPOLY_HPP
#define HOLONOMY_UNIPOLY_HPP

#include <string>
#include <vector>

#include "holonomy/interval.hpp"
#include "holonomy/multipoly.hpp"
#include "holonomy/rational.hpp"

namespace holonomy {

// Dense univariate polynomial over the rationals. Coefficients ascending;
// trailing zeros trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rational& c);
  // c * x^e
  static UniPoly monomial(const Rational& c, int e);

  // Converts a MultiPoly using at most one variable. Returns the variable
  // index through `var_out` (-1 when constant).
  static UniPoly from_multipoly(const MultiPoly& p, int* var_out = nullptr);
  MultiPoly to_multipoly(Ctx ctx, const std::string& var) const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }
  // Lowest exponent with nonzero coefficient; -1 for the zero polynomial.
  int valuation() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Rational& c) const;
  // Quotient by x^k; caller guarantees divisibility.
  UniPoly shifted_down(int k) const;
  // Multiplication by x^k.
  UniPoly shifted_up(int k) const;

  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  // Interval extension via Horner; sound enclosure of the range over `x`.
  RatInterval eval_interval(const RatInterval& x) const;
  double eval_double(double x) const;

  // Exact sign of the value at x; integer-coefficient polynomials use a
  // cleared-denominator Horner scheme instead of full rational evaluation.
  int sign_at(const Rational& x) const;
  int sign_at_pos_inf() const { return is_zero() ? 0 : leading().sign(); }
  int sign_at_neg_inf() const {
    if (is_zero()) return 0;
    return degree() % 2 == 0 ? leading().sign() : -leading().sign();
  }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  void divmod(const UniPoly& d, UniPoly* q, UniPoly* r) const;
  UniPoly rem(const UniPoly& d) const;
  // Exact quotient; throws if the division leaves a remainder.
  UniPoly exact_div(const UniPoly& d) const;

  // Positive rational content; primitive part has coprime integer
  // coefficients and the same signs.
  Rational content() const;
  UniPoly primitive_part() const;

  // Monic gcd via a primitive remainder sequence.
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);
  // p / gcd(p, p'): same distinct roots, all simple.
  UniPoly squarefree_part() const;

  // Cauchy bound: every real root lies in (-M, M).
  Rational root_bound() const;

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rational> c_;
  void trim();
};

}  // namespace holonomy

#endif
