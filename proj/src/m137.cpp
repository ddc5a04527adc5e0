#include "holonomy/m137.hpp"

#include "holonomy/errors.hpp"

namespace holonomy::m137 {

namespace {

GroupWord word(std::initializer_list<GroupWord::Letter> letters) {
  return GroupWord(std::vector<GroupWord::Letter>(letters));
}

}  // namespace

const Presentation& presentation() {
  static const Presentation p = [] {
    Presentation pr;
    // beta^-1 lambda^-1 beta^-1 lambda^-1 beta^2 lambda = lambda beta^-2 lambda^-1 beta^2
    pr.relator_lhs = word({{kBeta, -1}, {kLongitude, -1}, {kBeta, -1}, {kLongitude, -1}, {kBeta, 2}, {kLongitude, 1}});
    pr.relator_rhs = word({{kLongitude, 1}, {kBeta, -2}, {kLongitude, -1}, {kBeta, 2}});
    pr.relator = pr.relator_lhs * pr.relator_rhs.inverse();
    // mu = beta^2 lambda^-1 beta^-3 lambda^-1 beta^2
    pr.meridian = word({{kBeta, 2}, {kLongitude, -1}, {kBeta, -3}, {kLongitude, -1}, {kBeta, 2}});
    pr.longitude = GroupWord::generator(kLongitude);
    return pr;
  }();
  return p;
}

Ctx char_ctx() {
  static const Ctx ctx = make_ctx({"z", "x", "y", "s", "t", "w"});
  return ctx;
}

Ctx curve_ctx() {
  static const Ctx ctx = make_ctx({"s", "t"});
  return ctx;
}

Ctx trace_ctx() {
  static const Ctx ctx = make_ctx({"s", "t", "w"});
  return ctx;
}

Ctx eigen_ctx() {
  static const Ctx ctx = make_ctx({"z", "m"});
  return ctx;
}

SymMatrix2 longitude_image(const Ctx& ctx) {
  // [[z, 1], [0, 1/z]] = [[z^2, z], [0, 1]] / z
  int zi = ctx->index_of("z");
  if (zi < 0) throw DomainError("context lacks z");
  int n = ctx->size();
  SymMatrix2 m{MultiPoly::monomial(ctx, Monomial::var(n, zi, 2), Rational(1)),
               MultiPoly::monomial(ctx, Monomial::var(n, zi, 1), Rational(1)),
               MultiPoly::zero(ctx),
               MultiPoly::constant(ctx, Rational(1)),
               Monomial::var(n, zi, 1)};
  return m;
}

SymMatrix2 beta_image(const Ctx& ctx) {
  // [[x, 0], [y, 1/x]] = [[x^2, 0], [xy, 1]] / x
  int xi = ctx->index_of("x");
  int yi = ctx->index_of("y");
  if (xi < 0 || yi < 0) throw DomainError("context lacks x or y");
  int n = ctx->size();
  Monomial xy = Monomial::var(n, xi, 1) * Monomial::var(n, yi, 1);
  SymMatrix2 m{MultiPoly::monomial(ctx, Monomial::var(n, xi, 2), Rational(1)),
               MultiPoly::zero(ctx),
               MultiPoly::monomial(ctx, xy, Rational(1)),
               MultiPoly::constant(ctx, Rational(1)),
               Monomial::var(n, xi, 1)};
  return m;
}

std::vector<MultiPoly> trace_relations(const Ctx& ctx) {
  return {MultiPoly::parse("z^2 - s*z + 1", ctx), MultiPoly::parse("x^2 - t*x + 1", ctx),
          MultiPoly::parse("z^2*x^2 + y*z*x - w*z*x + 1", ctx)};
}

MultiPoly curve_polynomial(const Ctx& ctx) {
  return MultiPoly::parse("(s-2)*(s+1)^2*t^4 - (s-2)*(s+2)*(s+1)*t^2 - 1", ctx);
}

std::vector<MultiPoly> published_ideal_generators(const Ctx& ctx) {
  return {MultiPoly::parse("s*t*w - t^2 - w^2 - s + 2", ctx),
          MultiPoly::parse("t^3 - w^3 + s*t - s*w - 2*t + w", ctx),
          MultiPoly::parse("s*t^2 - t*w - w^2 - s + 1", ctx),
          MultiPoly::parse("s*w^3 - s^2*t + s^2*w - t^2*w - t*w^2 + s*t - s*w + t", ctx)};
}

UniPoly discriminant_cubic() {
  return UniPoly({Rational(-4), Rational(-4), Rational(2), Rational(1)});
}

UniPoly apoly_factor_a() {
  // (z-1)(z^2+z+1)^3 = z^7+2z^6+3z^5+z^4-z^3-3z^2-2z-1
  return UniPoly({Rational(-1), Rational(-2), Rational(-3), Rational(-1), Rational(1), Rational(3),
                  Rational(2), Rational(1)});
}

UniPoly apoly_factor_b() {
  return UniPoly({Rational(1), Rational(3), Rational(2), Rational(1), Rational(-2), Rational(-4),
                  Rational(-1), Rational(-4), Rational(-1), Rational(-4), Rational(-2), Rational(1),
                  Rational(2), Rational(3), Rational(1)});
}

MultiPoly apoly_full(const Ctx& ctx) {
  return MultiPoly::parse(
      "(z^4+2*z^5+3*z^6+z^7-z^8-3*z^9-2*z^10-z^11)"
      "+ m^2*(-1-3*z-2*z^2-z^3+2*z^4+4*z^5+z^6+4*z^7+z^8+4*z^9+2*z^10-z^11-2*z^12-3*z^13-z^14)"
      "+ m^4*(-z^3-2*z^4-3*z^5-z^6+z^7+3*z^8+2*z^9+z^10)",
      ctx);
}

MultiPoly apoly_compact(const Ctx& ctx) {
  MultiPoly a = apoly_factor_a().to_multipoly(ctx, "z");
  MultiPoly b = apoly_factor_b().to_multipoly(ctx, "z");
  MultiPoly z = MultiPoly::variable(ctx, "z");
  MultiPoly m = MultiPoly::variable(ctx, "m");
  return -(z.pow(4) * a) - b * m.pow(2) + z.pow(3) * a * m.pow(4);
}

std::vector<long> alexander_8_20() { return {1, -2, 3, -2, 1}; }

std::vector<long> alexander_m137() { return {1}; }

}  // namespace holonomy::m137
