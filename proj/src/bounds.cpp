#include "holonomy/bounds.hpp"

#include <algorithm>
#include <vector>

namespace holonomy {

RatInterval bound_on_interval(const UniPoly& p, const RatInterval& domain,
                              const BoundOptions& opts) {
  if (p.degree() <= 0) {
    Rational c = p.is_zero() ? Rational(0) : p.coeff(0);
    return RatInterval(c);
  }

  struct Piece {
    RatInterval dom;
    RatInterval range;
  };
  std::vector<Piece> pieces{{domain, p.eval_interval(domain)}};
  // attained values bound the true range from inside
  Rational inner_lo = p.eval(domain.lo), inner_hi = inner_lo;
  auto sample = [&](const Rational& x) {
    Rational v = p.eval(x);
    inner_lo = std::min(inner_lo, v);
    inner_hi = std::max(inner_hi, v);
  };
  sample(domain.hi);
  sample(domain.midpoint());

  for (;;) {
    Rational hull_lo = pieces[0].range.lo, hull_hi = pieces[0].range.hi;
    for (const auto& pc : pieces) {
      hull_lo = std::min(hull_lo, pc.range.lo);
      hull_hi = std::max(hull_hi, pc.range.hi);
    }
    bool hi_tight = hull_hi - inner_hi <= opts.tolerance;
    bool lo_tight = inner_lo - hull_lo <= opts.tolerance;
    if ((hi_tight && lo_tight) || static_cast<int>(pieces.size()) >= opts.max_pieces)
      return {hull_lo, hull_hi};

    // split every piece that currently carries a loose hull endpoint
    std::vector<Piece> next;
    next.reserve(pieces.size() * 2);
    for (const auto& pc : pieces) {
      bool loose = (!hi_tight && pc.range.hi == hull_hi) || (!lo_tight && pc.range.lo == hull_lo);
      if (!loose || pc.dom.width().is_zero()) {
        next.push_back(pc);
        continue;
      }
      Rational m = pc.dom.midpoint();
      sample(m);
      RatInterval left(pc.dom.lo, m), right(m, pc.dom.hi);
      next.push_back({left, p.eval_interval(left)});
      next.push_back({right, p.eval_interval(right)});
    }
    pieces = std::move(next);
  }
}

}  // namespace holonomy
