#include "holonomy/domains.hpp"

#include "holonomy/errors.hpp"
#include "holonomy/m137.hpp"

namespace holonomy {

namespace {
const Rational kEndpointWidth(1, 1000000000);  // 1e-9
}

double DomainEndpoint::approx() const {
  switch (kind) {
    case Kind::NegInf:
      return -std::numeric_limits<double>::infinity();
    case Kind::PosInf:
      return std::numeric_limits<double>::infinity();
    case Kind::Rat:
      return value.to_double();
    default:
      return root.to_double();
  }
}

Rational DomainEndpoint::lower() const {
  if (kind == Kind::Rat) return value;
  if (kind == Kind::Root) return root.lo;
  throw DomainError("infinite endpoint has no rational bound");
}

Rational DomainEndpoint::upper() const {
  if (kind == Kind::Rat) return value;
  if (kind == Kind::Root) return root.hi;
  throw DomainError("infinite endpoint has no rational bound");
}

SDomainResult compute_s_domain() {
  SDomainResult out;
  UniPoly cubic = m137::discriminant_cubic();
  RootIsolator iso(cubic);
  out.cubic_roots = iso.isolate_all(kEndpointWidth);
  if (out.cubic_roots.size() != 3) throw ContradictionError("discriminant cubic must have 3 real roots");
  const auto& p1 = out.cubic_roots[0];
  const auto& p2 = out.cubic_roots[1];
  const auto& p3 = out.cubic_roots[2];

  // sign of (s-2) * cubic(s) at an exact sample of each maximal interval
  // between the discriminant zeros {p1, p2, p3, 2}
  auto disc_sign = [&](const Rational& s) {
    return (s - Rational(2)).sign() * cubic.sign_at(s);
  };
  Ctx cctx = m137::curve_ctx();
  MultiPoly curve = m137::curve_polynomial(cctx);
  int si = cctx->index_of("s");
  auto t_root_count = [&](const Rational& s) {
    auto [num, den] = std::pair<MultiPoly, MultiPoly>{MultiPoly::constant(cctx, s),
                                                      MultiPoly::constant(cctx, Rational(1))};
    MultiPoly q = curve.substitute_rational(si, num, den).first;
    return count_real_roots(UniPoly::from_multipoly(q), Ext::neg_inf(), Ext::pos_inf());
  };

  Rational in1 = p1.lo - Rational(1);          // inside (-inf, p1)
  Rational gap1 = -1;                          // inside (p1, p2)
  Rational in2 = 0;                            // inside (p2, p3)
  Rational gap2 = (p3.hi + Rational(2)) / Rational(2);  // inside (p3, 2)
  Rational in3 = 3;                            // inside (2, inf)
  if (!(disc_sign(in1) > 0 && disc_sign(in2) > 0 && disc_sign(in3) > 0))
    throw ContradictionError("discriminant must be positive inside the domain pieces");
  if (!(disc_sign(gap1) < 0 && disc_sign(gap2) < 0))
    throw ContradictionError("discriminant must be negative in the gaps");
  out.gap_signs = {{gap1, disc_sign(gap1)}, {gap2, disc_sign(gap2)}};

  // realness of t on each piece: the curve must have real t-roots at the
  // sample; the root count is constant between consecutive discriminant
  // zeros, so one exact sample certifies the piece
  out.checks = {{"(-inf,p1]", in1, t_root_count(in1)},
                {"[p2,p3]", in2, t_root_count(in2)},
                {"(2,inf)", in3, t_root_count(in3)}};
  for (const auto& c : out.checks)
    if (c.real_t_roots == 0)
      throw ContradictionError("piece " + c.piece + " lost its real t roots");

  // s = 2 is excluded: the curve polynomial is the nonzero constant -1 there
  MultiPoly at2 = curve.substitute_rational(si, MultiPoly::constant(cctx, Rational(2)),
                                            MultiPoly::constant(cctx, Rational(1)))
                      .first;
  if (!(at2 == MultiPoly::constant(cctx, Rational(-1))))
    throw ContradictionError("curve at s=2 must be the constant -1");

  out.domain.pieces = {
      {DomainEndpoint::neg_inf(), DomainEndpoint::algebraic(p1), false, true, "(-inf,p1]"},
      {DomainEndpoint::algebraic(p2), DomainEndpoint::algebraic(p3), true, true, "[p2,p3]"},
      {DomainEndpoint::rational(Rational(2)), DomainEndpoint::pos_inf(), false, false, "(2,inf)"}};
  return out;
}

ZDomainResult compute_z_domain() {
  ZDomainResult out;

  // clear z^3 * cubic(z + 1/z): the minimal polynomial of the finite endpoints
  Ctx zs = make_ctx({"z", "s"});
  MultiPoly cubic_s = m137::discriminant_cubic().to_multipoly(zs, "s");
  MultiPoly num = MultiPoly::parse("z^2 + 1", zs);
  MultiPoly den = MultiPoly::variable(zs, "z");
  MultiPoly cleared = cubic_s.substitute_rational(zs->index_of("s"), num, den).first;
  out.endpoint_poly = UniPoly::from_multipoly(cleared);

  // exact reciprocal pairing: palindromic coefficients, so roots come in
  // (z, 1/z) pairs; +-1 are not roots; exactly two real roots, hence they
  // are each other's reciprocals and multiply to 1
  const auto& c = out.endpoint_poly.coeffs();
  out.endpoint_poly_palindromic = true;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!(c[i] == c[c.size() - 1 - i])) out.endpoint_poly_palindromic = false;
  bool pm1 = out.endpoint_poly.sign_at(Rational(1)) != 0 &&
             out.endpoint_poly.sign_at(Rational(-1)) != 0;

  RootIsolator iso(out.endpoint_poly);
  out.endpoints = iso.isolate_all(kEndpointWidth);
  if (out.endpoints.size() != 2)
    throw ContradictionError("endpoint polynomial must have exactly 2 real roots");
  out.reciprocal_pairing_exact = out.endpoint_poly_palindromic && pm1;
  if (!out.reciprocal_pairing_exact)
    throw ContradictionError("endpoint reciprocal pairing failed");

  const auto& e1 = out.endpoints[0];
  const auto& e2 = out.endpoints[1];
  // both endpoints must be negative: e1 < e2 < 0
  if (!(e1.hi < Rational(0) && e2.hi < Rational(0)))
    throw ContradictionError("endpoints of V must be negative");

  // s <= p1 branch check at interior samples: cubic(z + 1/z) <= 0 means
  // s(z) <= p1 in the region s <= -2
  UniPoly cubic = m137::discriminant_cubic();
  auto s_of_z_in_tail = [&](const Rational& z) {
    Rational s = z + z.reciprocal();
    return cubic.sign_at(s) < 0 && s < Rational(-2);
  };
  if (!s_of_z_in_tail(e1.lo - Rational(1)) || !s_of_z_in_tail(e2.hi / Rational(2)))
    throw ContradictionError("V branch samples landed outside s <= p1");

  // s > 2 branch: s - 2 = (z-1)^2 / z, an exact identity making all of
  // z > 0, z != 1 map into (2, inf)
  Ctx zc = make_ctx({"z"});
  MultiPoly lhsP = MultiPoly::parse("z^2 + 1 - 2*z", zc);
  MultiPoly rhsP = MultiPoly::parse("(z-1)^2", zc);
  if (!(lhsP == rhsP)) throw ContradictionError("positive branch identity failed");

  out.domain.pieces = {
      {DomainEndpoint::neg_inf(), DomainEndpoint::algebraic(e1), false, true, "(-inf,e1]"},
      {DomainEndpoint::algebraic(e2), DomainEndpoint::rational(Rational(0)), true, false, "[e2,0)"},
      {DomainEndpoint::rational(Rational(0)), DomainEndpoint::rational(Rational(1)), false, false,
       "(0,1)"},
      {DomainEndpoint::rational(Rational(1)), DomainEndpoint::pos_inf(), false, false, "(1,inf)"}};
  return out;
}

}  // namespace holonomy
