#ifndef HOLONOMY_DOMAINS_HPP
#define HOLONOMY_DOMAINS_HPP

#include <string>
#include <vector>

#include "holonomy/sturm.hpp"
#include "holonomy/unipoly.hpp"

namespace holonomy {

// Interval endpoint that is either infinite, an exact rational, or an
// algebraic number carried as its defining polynomial plus isolating
// interval. Algebraic endpoints are never rounded inside certificates.
struct DomainEndpoint {
  enum class Kind { NegInf, PosInf, Rat, Root };
  Kind kind = Kind::Rat;
  Rational value;          // Kind::Rat
  IsolatingInterval root;  // Kind::Root

  static DomainEndpoint neg_inf() { return {Kind::NegInf, Rational(0), {}}; }
  static DomainEndpoint pos_inf() { return {Kind::PosInf, Rational(0), {}}; }
  static DomainEndpoint rational(Rational v) { return {Kind::Rat, std::move(v), {}}; }
  static DomainEndpoint algebraic(IsolatingInterval iv) {
    return {Kind::Root, Rational(0), std::move(iv)};
  }

  bool finite() const { return kind == Kind::Rat || kind == Kind::Root; }
  double approx() const;
  // Rational bounds enclosing the endpoint (equal for Kind::Rat).
  Rational lower() const;
  Rational upper() const;
};

struct DomainPiece {
  DomainEndpoint lo, hi;
  bool lo_closed = false, hi_closed = false;
  std::string label;
};

// Disjoint, sorted union of intervals.
struct DomainSet {
  std::vector<DomainPiece> pieces;
};

// Real trace-coordinate domain U for s: sign analysis of the discriminant
// (s+1)^2 (s-2) (s^3 + 2s^2 - 4s - 4) plus a realness check of t^2 on each
// piece at an exact sample point.
struct SDomainResult {
  DomainSet domain;
  std::vector<IsolatingInterval> cubic_roots;  // p1 < p2 < p3
  struct PieceCheck {
    std::string piece;
    Rational sample_s;
    int real_t_roots;  // roots of the curve in t at the sample
  };
  std::vector<PieceCheck> checks;
  // gap samples with negative discriminant (why the gaps are excluded)
  std::vector<std::pair<Rational, int>> gap_signs;
};
SDomainResult compute_s_domain();

// Eigenvalue domain V for z: image of {s <= p1} u {s > 2} under the real
// branches of z + 1/z = s. Finite endpoints are roots of the degree-6
// polynomial obtained by clearing z^3 * cubic(z + 1/z).
struct ZDomainResult {
  DomainSet domain;
  UniPoly endpoint_poly;                     // z^6 + 2z^5 - z^4 - z^2 + 2z + 1
  std::vector<IsolatingInterval> endpoints;  // e1 < e2, e1*e2 = 1
  bool endpoint_poly_palindromic;            // exact: reversal equals itself
  bool reciprocal_pairing_exact;             // palindromic, +-1 not roots, 2 real roots
};
ZDomainResult compute_z_domain();

}  // namespace holonomy

#endif
