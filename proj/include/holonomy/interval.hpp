#ifndef HOLONOMY_INTERVAL_HPP
#define HOLONOMY_INTERVAL_HPP

#include <algorithm>
#include <initializer_list>

#include "holonomy/errors.hpp"
#include "holonomy/rational.hpp"

namespace holonomy {

// Closed interval [lo, hi] with exact rational endpoints. All operations are
// outward-exact (no rounding happens at all), so enclosures are sound.
struct RatInterval {
  Rational lo;
  Rational hi;

  RatInterval() = default;
  explicit RatInterval(const Rational& point) : lo(point), hi(point) {}
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw DomainError("interval with lo > hi");
  }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  // Sign if determined: +1 when lo > 0, -1 when hi < 0, 0 when straddling.
  int determined_sign() const {
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }

  // Exact range of x^e over the interval (monotone on each side of zero).
  RatInterval pow(unsigned e) const {
    if (e == 0) return RatInterval(Rational(1));
    if (e % 2 == 1) return {lo.pow(e), hi.pow(e)};
    Rational alo = lo.abs(), ahi = hi.abs();
    Rational big = std::max(alo, ahi).pow(e);
    Rational small = contains_zero() ? Rational(0) : std::min(alo, ahi).pow(e);
    return {small, big};
  }

  static RatInterval hull(const RatInterval& a, const RatInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
  }
};

}  // namespace holonomy

#endif
