#include "holonomy/sturm.hpp"

#include <algorithm>

#include "holonomy/errors.hpp"

namespace holonomy {

namespace {

// Positive rational multiple of rem(a, b), computed fraction-free.
// a and b must have integer coefficients; the result is primitive integer
// with the exact sign pattern of the true remainder.
UniPoly positive_multiple_rem(const UniPoly& a, const UniPoly& b) {
  int n = b.degree();
  int delta = a.degree() - n;
  std::vector<mpz_class> r(a.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeffs()[i].num();
  std::vector<mpz_class> d(b.coeffs().size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = b.coeffs()[i].num();
  const mpz_class& dn = d[static_cast<std::size_t>(n)];

  // pseudo-division: repeatedly r := dn*r - r_top * x^k * b
  for (int k = delta; k >= 0; --k) {
    mpz_class t = r[static_cast<std::size_t>(n + k)];
    for (int i = 0; i < n + k; ++i) r[static_cast<std::size_t>(i)] *= dn;
    r[static_cast<std::size_t>(n + k)] = 0;
    if (t != 0)
      for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i + k)] -= t * d[static_cast<std::size_t>(i)];
  }
  // the multiplier was dn^(delta+1); restore true signs when it was negative
  bool flip = dn < 0 && (delta + 1) % 2 == 1;
  std::vector<Rational> out(static_cast<std::size_t>(n) /* deg <= n-1 */);
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = Rational(flip ? mpz_class(-r[static_cast<std::size_t>(i)])
                                                     : r[static_cast<std::size_t>(i)],
                                                mpz_class(1));
  UniPoly res{std::move(out)};
  return res.is_zero() ? res : res.primitive_part();
}

int sign_variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

SturmChain sturm_chain(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of zero polynomial");
  SturmChain chain;
  chain.polys.push_back(p.primitive_part());
  if (p.degree() == 0) return chain;
  chain.polys.push_back(chain.polys[0].derivative().primitive_part());
  while (!chain.polys.back().is_zero() && chain.polys.back().degree() > 0) {
    const UniPoly& a = chain.polys[chain.polys.size() - 2];
    const UniPoly& b = chain.polys.back();
    UniPoly r = -positive_multiple_rem(a, b);
    if (r.is_zero()) break;
    chain.polys.push_back(r.primitive_part());
  }
  return chain;
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(polys.size());
  for (const auto& p : polys) signs.push_back(p.sign_at(x));
  return sign_variations(signs);
}

int SturmChain::variations_at_infinity(int dir) const {
  std::vector<int> signs;
  signs.reserve(polys.size());
  for (const auto& p : polys)
    signs.push_back(dir > 0 ? p.sign_at_pos_inf() : p.sign_at_neg_inf());
  return sign_variations(signs);
}

int SturmChain::variations(const Ext& x) const {
  switch (x.kind) {
    case Ext::Kind::NegInf:
      return variations_at_infinity(-1);
    case Ext::Kind::PosInf:
      return variations_at_infinity(+1);
    default:
      return variations_at(x.value);
  }
}

void IsolatingInterval::refine_to(const Rational& w) {
  while (width() > w) {
    Rational m = midpoint();
    int s = poly.sign_at(m);
    if (s == 0) {
      // the root is exactly m; shrink symmetrically keeping the sign certificate
      Rational eps = std::min(w, width()) / Rational(4);
      while (poly.sign_at(m - eps) != sign_lo || poly.sign_at(m + eps) != -sign_lo)
        eps /= Rational(2);
      lo = m - eps;
      hi = m + eps;
      return;
    }
    if (s == sign_lo)
      lo = m;
    else
      hi = m;
  }
}

int IsolatingInterval::cmp(const Rational& x) const {
  if (x >= hi) return -1;  // root < hi <= x
  if (x <= lo) return 1;
  int s = poly.sign_at(x);
  if (s == 0) return 0;
  return s == sign_lo ? 1 : -1;  // same sign as lo side: root still to the right
}

RootIsolator::RootIsolator(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("root isolation of zero polynomial");
  sqf_ = p.squarefree_part().primitive_part();
  chain_ = sturm_chain(sqf_);
}

int RootIsolator::count_halfopen(const Ext& lo, const Ext& hi) const {
  if (sqf_.degree() <= 0) return 0;
  return chain_.variations(lo) - chain_.variations(hi);
}

int RootIsolator::count_open(const Ext& lo, const Ext& hi) const {
  int n = count_halfopen(lo, hi);
  if (hi.is_finite() && sqf_.sign_at(hi.value) == 0) --n;
  return n;
}

int RootIsolator::count_closed(const Ext& lo, const Ext& hi) const {
  int n = count_halfopen(lo, hi);
  if (lo.is_finite() && sqf_.sign_at(lo.value) == 0) ++n;
  return n;
}

IsolatingInterval RootIsolator::pin_exact_root(const Rational& r, const Rational& radius) const {
  Rational eps = radius;
  for (;;) {
    int sl = sqf_.sign_at(r - eps);
    int sr = sqf_.sign_at(r + eps);
    if (sl != 0 && sr != 0 && sl != sr &&
        chain_.variations_at(r - eps) - chain_.variations_at(r + eps) == 1)
      return {r - eps, r + eps, sqf_, sl};
    eps /= Rational(2);
  }
}

void RootIsolator::bisect(const Rational& a, const Rational& b, int va, int vb,
                          std::vector<IsolatingInterval>& out) const {
  int n = va - vb;  // roots in (a, b]; b is never a root here
  if (n <= 0) return;
  if (n == 1) {
    int sa = sqf_.sign_at(a);
    int sb = sqf_.sign_at(b);
    if (sa == 0 || sb == 0 || sa == sb)
      throw Error("isolation invariant violated");  // cannot happen for simple roots
    out.push_back({a, b, sqf_, sa});
    return;
  }
  Rational m = (a + b) / Rational(2);
  if (sqf_.sign_at(m) == 0) {
    IsolatingInterval pin = pin_exact_root(m, (b - a) / Rational(8));
    int vl = chain_.variations_at(pin.lo);
    int vr = chain_.variations_at(pin.hi);
    bisect(a, pin.lo, va, vl, out);
    out.push_back(pin);
    bisect(pin.hi, b, vr, vb, out);
    return;
  }
  int vm = chain_.variations_at(m);
  bisect(a, m, va, vm, out);
  bisect(m, b, vm, vb, out);
}

std::vector<IsolatingInterval> RootIsolator::isolate_all(const Rational& width) const {
  std::vector<IsolatingInterval> out;
  if (sqf_.degree() <= 0) return out;
  Rational bound = sqf_.root_bound();
  int va = chain_.variations_at(-bound);
  int vb = chain_.variations_at(bound);
  bisect(-bound, bound, va, vb, out);
  for (auto& iv : out) iv.refine_to(width);
  return out;
}

std::vector<IsolatingInterval> RootIsolator::isolate_open(const Ext& lo, const Ext& hi,
                                                          const Rational& width) const {
  std::vector<IsolatingInterval> all = isolate_all(width);
  std::vector<IsolatingInterval> kept;
  for (auto& iv : all) {
    if (lo.is_finite() && iv.cmp(lo.value) <= 0) continue;
    if (hi.is_finite() && iv.cmp(hi.value) >= 0) continue;
    kept.push_back(std::move(iv));
  }
  return kept;
}

IsolatingInterval RootIsolator::pin_root_at(const Rational& r) const {
  if (sqf_.sign_at(r) != 0) throw DomainError("pin_root_at: not a root");
  return pin_exact_root(r, Rational(1, 1000000));
}

int count_real_roots(const UniPoly& p, const Ext& lo, const Ext& hi) {
  return RootIsolator(p).count_open(lo, hi);
}

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p, const Rational& width) {
  return RootIsolator(p).isolate_all(width);
}

}  // namespace holonomy
