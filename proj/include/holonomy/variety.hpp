#ifndef HOLONOMY_VARIETY_HPP
#define HOLONOMY_VARIETY_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "holonomy/domains.hpp"
#include "holonomy/ideal.hpp"
#include "holonomy/interval.hpp"
#include "holonomy/m137.hpp"
#include "holonomy/sturm.hpp"

namespace holonomy {

// One recorded step of a symbolic verification, re-checkable from the data.
struct ProofStep {
  std::string statement;
  std::string method;
  bool ok = false;
};

// ---------------------------------------------------------------------------
// character system and curve derivation
// ---------------------------------------------------------------------------

// The four entry differences of the relator equation under the parametrized
// images, cleared of monomial denominators. Variables: z, x, y.
std::vector<MultiPoly> relator_entry_equations();

// Entry equations + trace relations over the working context {z,x,y,s,t,w}.
std::vector<MultiPoly> character_system();

struct CharacterCurve {
  MultiPoly poly;  // over {s, t}
  std::array<Rational, 2> excluded_s{Rational(-1), Rational(2)};
};

enum class DerivationPath { Direct, MembershipFallback };

struct CurveDerivation {
  CharacterCurve curve;
  DerivationPath path = DerivationPath::Direct;
  // generators of the elimination ideal in (s,t,w) and (s,t); on the
  // fallback path these come from the published generators
  std::vector<MultiPoly> elimination_stw;
  std::vector<MultiPoly> elimination_st;
  bool curve_matches_elimination = false;  // elimination ideal in (s,t) = <curve>
  bool published_generators_contained = false;
  bool w_relation_recovered = false;  // gen1 - gen3 = (s+1)t*w - (s+1)t^2 + 1
  std::vector<ProofStep> steps;
};

// Direct route: lex Groebner elimination of {z,x,y,inverses} from the
// saturated system. Falls back to membership verification when a resource
// cap fires.
CurveDerivation derive_character_curve(const GroebnerOptions& opts = {});
// The membership-only route, runnable on its own (it must agree).
CurveDerivation derive_character_curve_fallback(const GroebnerOptions& opts = {});

// w = t - 1/(t(s+1)); domain error on t = 0 or s = -1.
Rational w_coordinate(const Rational& s, const Rational& t);
RatInterval w_coordinate_interval(const Rational& s, const RatInterval& t);

// ---------------------------------------------------------------------------
// irreducibility of the curve polynomial
// ---------------------------------------------------------------------------

struct IrreducibilityCertificate {
  std::vector<ProofStep> quadratic_split;  // (at^2+bt+c)(dt^2+et-1/c) case
  std::vector<ProofStep> linear_split;     // (at+c)(bt^3+dt^2+et-1/c) case
  MultiPoly contradiction_quadratic;       // 1 + (s-2)(s+2)(s+1) - (s-2)(s+1)^2
  MultiPoly contradiction_linear;          // (s+1)(s-2) - 1
  bool ok = false;
};
IrreducibilityCertificate irreducibility_certificate();

// ---------------------------------------------------------------------------
// unitarity
// ---------------------------------------------------------------------------

// Exact trace-triple test (2 t3 - t1 t2)^2 <= (4 - t1^2)(4 - t2^2);
// requires |t1| < 2 and |t2| < 2.
bool su2_triangle_criterion(const Rational& t1, const Rational& t2, const Rational& t3);
// The same inequality with no domain restriction (used for sampled points
// with |s| > 2, where it must fail).
bool trace_inequality(const Rational& t1, const Rational& t2, const Rational& t3);

struct UnitarityReduction {
  MultiPoly combination;  // t^2(s+1)^2 [(4-s^2)(4-t^2) - (2w-st)^2] + (s+1)^3 (s-2) t^2
  MultiPoly cofactor;     // combination / curve
  bool ok = false;
};
// On the curve, the triangle criterion at (s, t, w) is equivalent to
// (s+1)^3 (s-2) t^2 <= 0: the stated combination is divisible by the curve.
UnitarityReduction verify_unitarity_reduction();

// ---------------------------------------------------------------------------
// points, classification, reconstruction
// ---------------------------------------------------------------------------

struct CharacterPoint {
  Rational s;
  IsolatingInterval t;  // root of curve(s, .)
};

// All real points of the curve over a rational s (t isolated exactly);
// empty when s carries no real points.
std::vector<CharacterPoint> character_points_at(const Rational& s, const Rational& t_width = Rational(1, 1000000));

enum class PointClass { SU2, SL2R, Boundary };
std::string to_string(PointClass c);

// Position of s against p1, p2, p3, 2 decides the class; cross-checked
// against the trace inequality when |s| < 2 and |t| < 2.
PointClass classify_character_point(const CharacterPoint& pt);

// Tri-state interval decision of the trace inequality at (s, t, w(s,t)).
std::optional<bool> decide_trace_inequality(const CharacterPoint& pt, int max_refine = 40);

enum class ReconstructionMode { Real, Complex };

struct Reconstruction {
  std::complex<double> z, x, y, m;  // normal-form parameters, m = meridian eigenvalue
  std::array<std::array<std::complex<double>, 2>, 2> rho_longitude, rho_beta;
  bool real_gauge = false;  // matrices are real
  double relator_residual = 0.0;
  double w_residual = 0.0;  // |w(s,t) - (zx + 1/(zx) + y)|
};

// Numeric representation at an on-curve point. Real mode requires s^2 >= 4
// and produces real matrices (a lower-triangular gauge when |t| < 2 has no
// real form, so a generic real gauge is solved for instead).
Reconstruction reconstruct_representation(const CharacterPoint& pt, ReconstructionMode mode);

// Numeric word evaluation in a 2x2 complex representation.
using CMat2 = std::array<std::array<std::complex<double>, 2>, 2>;
CMat2 evaluate_word(const GroupWord& w, const CMat2& longitude, const CMat2& beta);

// ---------------------------------------------------------------------------
// A-polynomial validation
// ---------------------------------------------------------------------------

// Opt-in full symbolic re-derivation of the A-polynomial: eliminate
// {x, y, t, w, s} (plus unit inverses) from the trace-augmented character
// system extended by the meridian equations (lower-left entry of rho(mu)
// vanishes, m is its upper-left entry). This is far heavier than the curve
// elimination; on this engine it exceeds any practical pair cap, so expect
// a CapExceeded failure unless the caps are raised enormously. The printed
// polynomial is already pinned by the exact identities and the numeric
// boundary-character checks in validate_a_polynomial.
struct SymbolicAPolyDerivation {
  std::vector<MultiPoly> eigen_ideal;  // generators in (z, m)
  bool matches_apoly = false;
  std::vector<ProofStep> steps;
};
SymbolicAPolyDerivation derive_a_polynomial_symbolic(const GroebnerOptions& opts = {});

struct APolyValidation {
  bool compact_matches_full = false;   // -z^4 A - B m^2 + z^3 A m^4 = printed expansion
  bool factor_a_is_product = false;    // A = (z-1)(z^2+z+1)^3
  bool a_has_single_real_root = false; // Sturm count over R is 1, at z = 1
  int samples = 0;
  double max_residual = 0.0;           // |A(z, m)| over reconstructed points
  bool ok = false;
  std::vector<ProofStep> steps;
};
APolyValidation validate_a_polynomial(int samples_per_piece = 8, double tol = 1e-8);

}  // namespace holonomy

#endif
