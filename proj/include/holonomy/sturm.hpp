#ifndef HOLONOMY_STURM_HPP
#define HOLONOMY_STURM_HPP

#include <optional>
#include <vector>

#include "holonomy/rational.hpp"
#include "holonomy/unipoly.hpp"

namespace holonomy {

// Endpoint of a root-counting interval: finite rational or +/- infinity.
struct Ext {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value;

  static Ext neg_inf() { return {Kind::NegInf, Rational(0)}; }
  static Ext pos_inf() { return {Kind::PosInf, Rational(0)}; }
  static Ext finite(Rational v) { return {Kind::Finite, std::move(v)}; }
  bool is_finite() const { return kind == Kind::Finite; }
};

// Signed remainder sequence p, p', -rem(...), ... with every element scaled
// to primitive integer form by a positive rational, so the sign pattern is
// exactly the classical chain's. The last element is (up to a positive
// factor) gcd(p, p').
struct SturmChain {
  std::vector<UniPoly> polys;

  int variations_at(const Rational& x) const;
  int variations_at_infinity(int dir) const;  // dir=-1 or +1
  int variations(const Ext& x) const;
};

SturmChain sturm_chain(const UniPoly& p);

// Rational interval certified to contain exactly one real root of `poly`
// (which is squarefree at that root): the endpoint signs differ and are
// nonzero.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  UniPoly poly;     // squarefree witness polynomial
  int sign_lo = 0;  // sign of poly at lo (= -sign at hi)

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  double to_double() const { return midpoint().to_double(); }
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  // Bisect until width <= w.
  void refine_to(const Rational& w);
  // Exact comparison of the enclosed root against a rational.
  int cmp(const Rational& x) const;
};

// Root counting and isolation for one polynomial, caching the chain of the
// squarefree part.
class RootIsolator {
 public:
  explicit RootIsolator(const UniPoly& p);

  const UniPoly& squarefree() const { return sqf_; }
  const SturmChain& chain() const { return chain_; }

  // Number of distinct real roots in the half-open interval (lo, hi].
  int count_halfopen(const Ext& lo, const Ext& hi) const;
  // Open / closed variants (exact at endpoints).
  int count_open(const Ext& lo, const Ext& hi) const;
  int count_closed(const Ext& lo, const Ext& hi) const;

  // One interval per distinct real root, sorted, each of width <= width.
  std::vector<IsolatingInterval> isolate_all(const Rational& width) const;
  // Roots restricted to the open interval (lo, hi).
  std::vector<IsolatingInterval> isolate_open(const Ext& lo, const Ext& hi,
                                              const Rational& width) const;
  // Isolating interval for a root known to sit exactly at r.
  IsolatingInterval pin_root_at(const Rational& r) const;

 private:
  UniPoly sqf_;
  SturmChain chain_;

  void bisect(const Rational& a, const Rational& b, int va, int vb,
              std::vector<IsolatingInterval>& out) const;
  IsolatingInterval pin_exact_root(const Rational& r, const Rational& radius) const;
};

// Convenience wrappers matching the certificate operations.
int count_real_roots(const UniPoly& p, const Ext& lo, const Ext& hi);
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p, const Rational& width);

}  // namespace holonomy

#endif
