#ifndef HOLONOMY_FILLING_HPP
#define HOLONOMY_FILLING_HPP

#include <vector>

#include "holonomy/domains.hpp"
#include "holonomy/interval.hpp"
#include "holonomy/sturm.hpp"
#include "holonomy/unipoly.hpp"
#include "holonomy/variety.hpp"

namespace holonomy {

// Filling equation for the (1, n) slope: substitute m = z^-n into the
// compact A-polynomial, clear the full power of z, and normalize the leading
// coefficient positive. For n <= -2 this reproduces the equation
// A z^{4n'-1} - B z^{2n'-4} - A (divided by one extra z when n = -2, whose
// constant term vanishes); for n >= 2 it reproduces A z^{4n+1} + B z^{2n-3} - A.
struct FillingPolynomial {
  int n = 0;
  UniPoly poly;           // poly(0) != 0
  int clearing_shift = 0; // total power of z cleared from the raw substitution
  bool negated = false;   // true for n > 0 (the G-form negates the substitution)
};
FillingPolynomial filling_polynomial(int n);

// The equation forms printed for |n| >= 2 (test oracles for the single rule
// above): F for n < 0, G for n > 0.
UniPoly displayed_filling_form(int n);

struct SymmetryRecord {
  int n;
  bool a_antipalindromic = false;  // z^7 A(1/z) = -A(z)
  bool b_palindromic = false;      // z^14 B(1/z) = B(z)
  bool f_reciprocal = false;       // z^{4n'+6} F(1/z) = F(z)
  std::vector<ProofStep> steps;
};
// Exact verification of the reciprocal symmetries; n must be negative.
SymmetryRecord verify_palindrome_symmetries(int n);

enum class SlopeVerdict { NoRealSolutions, RealSolutionFound };
std::string to_string(SlopeVerdict v);

struct SlopeCertificate {
  int n = 0;
  SlopeVerdict verdict = SlopeVerdict::NoRealSolutions;
  int cover_root_count = 0;  // Sturm count over the outward rational cover of V
  int roots_in_v = 0;        // roots certified inside V itself
  std::vector<IsolatingInterval> witnesses;
  Rational value_at_one;     // the filling polynomial at z = 1 (never a root)
  Rational cover_e1_hi;      // rational cover bounds actually used
  Rational cover_e2_lo;
  std::vector<ProofStep> facts;
};

// Exact root count of the filling polynomial over an outward rational cover
// of V; every counted root is then classified exactly as inside or outside V,
// so both verdicts are sound. Witnesses are isolated to width 1e-6.
SlopeCertificate certify_slope(int n);

// For n >= 1: verifies G(1) = -4 exactly, certifies the sign change of G on
// (r5, 1) with r5 just left of the fifth root of B, and isolates a witness
// root there; falls back to a full Sturm count on (0, 1) if the sign-change
// route fails.
SlopeCertificate positive_slope_witness(int n);

struct ThresholdCertificate {
  int n0 = 0;
  Rational q;   // sup |z| over the case-2 cover, certified < 1
  Rational c5;  // certified 0 < c5 <= |A| on the cover
  Rational c6;  // certified B <= c6 on the cover
  RatInterval case2_cover;
  Rational bound_tolerance;
  std::vector<ProofStep> case1_facts;
  std::vector<ProofStep> case2_facts;
  std::vector<ProofStep> inequality_trace;
  std::vector<int> cross_checked;  // slopes -n' re-certified NoRealSolutions
  bool ok = false;
};

// Derives the explicit threshold N0: for every n' >= N0 the (1, -n') filling
// polynomial has no real roots in V. Case 1 covers [r5, 1) for all n' at
// once; case 2 pins constants on a rational cover of [e2, r5] and finds the
// least n' with c5 (1 - q^{4n'-1}) > c6 q^{2n'-4}, an inequality monotone in
// n'. Slopes N0 .. N0+span are re-certified by Sturm count as a cross-check.
ThresholdCertificate derive_threshold(int cross_check_span = 25,
                                      const Rational& bound_tolerance = Rational(1, 1000));

// One certificate per n in [from, to], n = 0 skipped; deterministic and
// independent of the number of worker threads.
std::vector<SlopeCertificate> scan_slopes(int from, int to, int jobs = 1);

struct AlexanderPoly {
  std::vector<mpz_class> coefficients;  // ascending, leading nonzero
};
AlexanderPoly alexander_from_unipoly(const UniPoly& p);

// True iff every nonzero coefficient is +1 or -1 (the coefficient condition
// an L-space surgery imposes on the knot's Alexander polynomial).
bool alexander_coefficient_check(const AlexanderPoly& p);

}  // namespace holonomy

#endif
