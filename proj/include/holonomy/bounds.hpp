#ifndef HOLONOMY_BOUNDS_HPP
#define HOLONOMY_BOUNDS_HPP

#include "holonomy/interval.hpp"
#include "holonomy/unipoly.hpp"

namespace holonomy {

struct BoundOptions {
  // Refinement target: enclosure endpoints within this distance of attained
  // sample values.
  Rational tolerance = Rational(1, 1000);
  int max_pieces = 4096;
};

// Certified enclosure of p over the closed interval: lo <= p(x) <= hi for
// every x in `domain`, by adaptive bisection with exact interval arithmetic.
// Soundness is unconditional; the tolerance only controls tightness.
RatInterval bound_on_interval(const UniPoly& p, const RatInterval& domain,
                              const BoundOptions& opts = {});

}  // namespace holonomy

#endif
