#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "holonomy/errors.hpp"
#include "holonomy/variety.hpp"

using namespace holonomy;

TEST_CASE("the two printed forms of the curve polynomial agree") {
  Ctx ctx = m137::curve_ctx();
  CHECK(MultiPoly::parse("(-2-3*s+s^3)*t^4 + (4+4*s-s^2-s^3)*t^2 - 1", ctx) ==
        m137::curve_polynomial(ctx));
}

TEST_CASE("curve values at excluded and sample s") {
  Ctx ctx = m137::curve_ctx();
  MultiPoly curve = m137::curve_polynomial(ctx);
  int si = ctx->index_of("s");
  auto at_s = [&](long s) {
    return curve
        .substitute_rational(si, MultiPoly::constant(ctx, Rational(s)),
                             MultiPoly::constant(ctx, Rational(1)))
        .first;
  };
  CHECK(at_s(2) == MultiPoly::constant(ctx, Rational(-1)));
  CHECK(at_s(-1) == MultiPoly::constant(ctx, Rational(-1)));
  CHECK(at_s(0) == MultiPoly::parse("-2*t^4 + 4*t^2 - 1", ctx));
}

TEST_CASE("the curve polynomial is even in t") {
  Ctx ctx = m137::curve_ctx();
  MultiPoly curve = m137::curve_polynomial(ctx);
  MultiPoly minus_t = -MultiPoly::variable(ctx, "t");
  CHECK(curve.substitute(ctx->index_of("t"), minus_t) == curve);
}

TEST_CASE("direct derivation verifies everything") {
  CurveDerivation d = derive_character_curve();
  CHECK(d.path == DerivationPath::Direct);
  CHECK(d.curve_matches_elimination);
  CHECK(d.published_generators_contained);
  CHECK(d.w_relation_recovered);
  CHECK(d.curve.poly == m137::curve_polynomial(m137::curve_ctx()));
  CHECK(d.curve.excluded_s[0] == Rational(-1));
  CHECK(d.curve.excluded_s[1] == Rational(2));
  for (const auto& s : d.steps) CHECK(s.ok);
}

TEST_CASE("membership fallback path verifies everything") {
  CurveDerivation d = derive_character_curve_fallback();
  CHECK(d.path == DerivationPath::MembershipFallback);
  CHECK(d.curve_matches_elimination);
  CHECK(d.published_generators_contained);
  for (const auto& s : d.steps) CHECK(s.ok);
}

TEST_CASE("capped elimination falls back to membership") {
  GroebnerOptions opts;
  // the lex elimination needs coefficients beyond 256 bits, the grevlex
  // membership route does not
  opts.max_coeff_bits = 256;
  CurveDerivation d = derive_character_curve(opts);
  CHECK(d.path == DerivationPath::MembershipFallback);
  CHECK(d.curve_matches_elimination);
}

TEST_CASE("w coordinate") {
  CHECK(w_coordinate(Rational(0), Rational(1)) == Rational(0));
  CHECK(w_coordinate(Rational(2), Rational(1)) == Rational(2, 3));
  CHECK_THROWS_AS(w_coordinate(Rational(-1), Rational(1)), DomainError);
  CHECK_THROWS_AS(w_coordinate(Rational(3), Rational(0)), DomainError);
}

TEST_CASE("irreducibility certificate replays both factorization cases") {
  IrreducibilityCertificate c = irreducibility_certificate();
  CHECK(c.ok);
  Ctx sctx = c.contradiction_quadratic.ctx();
  CHECK(c.contradiction_quadratic == MultiPoly::parse("s^2 - s - 1", sctx));
  CHECK(c.contradiction_linear == MultiPoly::parse("s^2 - s - 3", sctx));
  CHECK_FALSE(c.contradiction_quadratic.is_zero());
  CHECK_FALSE(c.contradiction_linear.is_zero());
  for (const auto& s : c.quadratic_split) CHECK(s.ok);
  for (const auto& s : c.linear_split) CHECK(s.ok);
}

TEST_CASE("triangle criterion") {
  CHECK(su2_triangle_criterion(Rational(0), Rational(0), Rational(0)));
  CHECK(su2_triangle_criterion(Rational(0), Rational(0), Rational(2)));  // boundary 16 <= 16
  CHECK_FALSE(su2_triangle_criterion(Rational(0), Rational(0), Rational(21, 10)));
  CHECK_THROWS_AS(su2_triangle_criterion(Rational(2), Rational(0), Rational(0)), DomainError);
  CHECK_THROWS_AS(su2_triangle_criterion(Rational(0), Rational(-5, 2), Rational(0)), DomainError);
  // the unrestricted inequality is simply false for |t1| > 2, |t3| modest
  CHECK_FALSE(trace_inequality(Rational(3), Rational(1), Rational(1)));
}

TEST_CASE("unitarity reduction divides by the curve with cofactor 4") {
  UnitarityReduction u = verify_unitarity_reduction();
  CHECK(u.ok);
  CHECK(u.cofactor == MultiPoly::constant(m137::curve_ctx(), Rational(4)));
}

TEST_CASE("fibers of the curve over rational s") {
  CHECK(character_points_at(Rational(0)).size() == 4);
  CHECK(character_points_at(Rational(3)).size() == 2);
  CHECK(character_points_at(Rational(-3)).size() == 4);
  CHECK(character_points_at(Rational(19, 10)).empty());  // gap (p3, 2)
  CHECK(character_points_at(Rational(-2)).empty());      // gap (p1, p2)
  CHECK(character_points_at(Rational(2)).empty());       // excluded
  CHECK(character_points_at(Rational(-1)).empty());      // excluded
}

TEST_CASE("classification by the position of s") {
  auto cls_at = [](long num, long den = 1) {
    auto pts = character_points_at(Rational(num, den));
    REQUIRE(!pts.empty());
    return classify_character_point(pts.front());
  };
  CHECK(cls_at(0) == PointClass::SU2);
  CHECK(cls_at(1) == PointClass::SU2);
  CHECK(cls_at(3) == PointClass::SL2R);
  CHECK(cls_at(-3) == PointClass::SL2R);
  CHECK(cls_at(-7, 2) == PointClass::SL2R);
  CHECK(cls_at(21, 10) == PointClass::SL2R);
}

TEST_CASE("trace inequality decisions on and off the SU2 window") {
  auto pts0 = character_points_at(Rational(0));
  for (const auto& pt : pts0) {
    auto dec = decide_trace_inequality(pt);
    REQUIRE(dec.has_value());
    CHECK(*dec);
  }
  auto pts3 = character_points_at(Rational(3));
  for (const auto& pt : pts3) {
    auto dec = decide_trace_inequality(pt);
    REQUIRE(dec.has_value());
    CHECK_FALSE(*dec);
  }
}

TEST_CASE("numeric reconstruction") {
  SUBCASE("real mode on an SL2R point") {
    auto pts = character_points_at(Rational(3));
    REQUIRE(!pts.empty());
    Reconstruction rec = reconstruct_representation(pts.front(), ReconstructionMode::Real);
    CHECK(rec.real_gauge);
    CHECK(rec.relator_residual < 1e-9);
    CHECK(rec.w_residual < 1e-9);
    for (const auto& row : rec.rho_beta)
      for (const auto& e : row) CHECK(std::abs(e.imag()) == 0.0);
  }
  SUBCASE("complex mode on an SU2 point has unit-modulus z") {
    auto pts = character_points_at(Rational(0));
    REQUIRE(!pts.empty());
    Reconstruction rec = reconstruct_representation(pts.back(), ReconstructionMode::Complex);
    CHECK(std::abs(std::abs(rec.z) - 1.0) < 1e-12);
    CHECK(rec.relator_residual < 1e-9);
  }
  SUBCASE("real mode needs s^2 >= 4") {
    auto pts = character_points_at(Rational(0));
    REQUIRE(!pts.empty());
    CHECK_THROWS_AS(reconstruct_representation(pts.front(), ReconstructionMode::Real),
                    DomainError);
  }
  SUBCASE("entry equations vanish numerically at a reconstructed point") {
    auto pts = character_points_at(Rational(3));
    REQUIRE(!pts.empty());
    Reconstruction rec = reconstruct_representation(pts.front(), ReconstructionMode::Complex);
    Ctx ctx = m137::char_ctx();
    for (const auto& eq : relator_entry_equations()) {
      std::complex<double> acc = 0.0;
      for (const auto& [mono, c] : eq.terms()) {
        std::complex<double> term = c.to_double();
        for (int e = 0; e < mono.e[ctx->index_of("z")]; ++e) term *= rec.z;
        for (int e = 0; e < mono.e[ctx->index_of("x")]; ++e) term *= rec.x;
        for (int e = 0; e < mono.e[ctx->index_of("y")]; ++e) term *= rec.y;
        acc += term;
      }
      CHECK(std::abs(acc) < 1e-9);
    }
  }
  SUBCASE("the w invariant links the parameters to the trace formula") {
    for (long s : {3L, -3L, 4L}) {
      auto pts = character_points_at(Rational(s));
      REQUIRE(!pts.empty());
      Reconstruction rec = reconstruct_representation(pts.front(), ReconstructionMode::Complex);
      CHECK(rec.w_residual < 1e-9);
    }
  }
}

TEST_CASE("symbolic A-polynomial derivation is capped, typed, and opt-in") {
  // the full elimination is far beyond a small pair budget; the point here is
  // that the opt-in path fails with the typed cap error instead of hanging
  GroebnerOptions opts;
  opts.max_pairs = 2000;
  CHECK_THROWS_AS(derive_a_polynomial_symbolic(opts), CapExceeded);
}

TEST_CASE("A-polynomial validation") {
  APolyValidation v = validate_a_polynomial();
  CHECK(v.ok);
  CHECK(v.compact_matches_full);
  CHECK(v.factor_a_is_product);
  CHECK(v.a_has_single_real_root);
  CHECK(v.samples >= 20);
  CHECK(v.max_residual < 1e-8);
}
