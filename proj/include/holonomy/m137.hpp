#ifndef HOLONOMY_M137_HPP
#define HOLONOMY_M137_HPP

#include <vector>

#include "holonomy/matrix2.hpp"
#include "holonomy/multipoly.hpp"
#include "holonomy/unipoly.hpp"

// Built-in data for the census manifold m137: the two-generator presentation
// of its fundamental group, the peripheral words, the trace curve of its
// irreducible character variety, and its A-polynomial. Everything downstream
// re-derives or cross-checks these values; they are the library's reference
// inputs.
namespace holonomy::m137 {

// generator ids in group words
inline constexpr int kLongitude = 0;  // lambda
inline constexpr int kBeta = 1;

struct Presentation {
  // relator written as an equation lhs = rhs
  GroupWord relator_lhs;
  GroupWord relator_rhs;
  GroupWord relator;  // lhs * rhs^-1
  GroupWord meridian;
  GroupWord longitude;
};

const Presentation& presentation();

// Working context {z, x, y, s, t, w}: matrix parameters and the three trace
// coordinates.
Ctx char_ctx();
// {s, t} and {s, t, w} restrictions.
Ctx curve_ctx();
Ctx trace_ctx();
// {z, m}: longitude and meridian eigenvalues.
Ctx eigen_ctx();

// Generator images rho(lambda) = [[z,1],[0,1/z]], rho(beta) = [[x,0],[y,1/x]]
// over `ctx` (which must contain z, x, y).
SymMatrix2 longitude_image(const Ctx& ctx);
SymMatrix2 beta_image(const Ctx& ctx);

// s = z + 1/z, t = x + 1/x, w = zx + 1/(zx) + y, cleared of denominators:
// z^2 - s z + 1, x^2 - t x + 1, z^2 x^2 + y z x - w z x + 1.
std::vector<MultiPoly> trace_relations(const Ctx& ctx);

// Defining polynomial of the trace curve:
// (s-2)(s+1)^2 t^4 - (s-2)(s+2)(s+1) t^2 - 1.
MultiPoly curve_polynomial(const Ctx& ctx);

// The four published generators of the character ideal in (s, t, w).
std::vector<MultiPoly> published_ideal_generators(const Ctx& ctx);

// s-discriminant factor s^3 + 2 s^2 - 4 s - 4 (the (s+1)^2 (s-2) factors are
// handled separately).
UniPoly discriminant_cubic();

// A-polynomial data: the full two-variable polynomial in (z, m), and the
// factors A(z) = (z-1)(z^2+z+1)^3, B(z) of its compact form
// -z^4 A - B m^2 + z^3 A m^4.
UniPoly apoly_factor_a();
UniPoly apoly_factor_b();
MultiPoly apoly_full(const Ctx& ctx);     // the printed expansion, as data
MultiPoly apoly_compact(const Ctx& ctx);  // built from the factors

// Alexander polynomial of the knot 8_20 (coefficient reference for the
// L-space obstruction) and of m137 itself.
std::vector<long> alexander_8_20();
std::vector<long> alexander_m137();

}  // namespace holonomy::m137

#endif
