#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holonomy/bounds.hpp"
#include "holonomy/domains.hpp"
#include "holonomy/m137.hpp"
#include "holonomy/sturm.hpp"

using namespace holonomy;

namespace {

bool within(const IsolatingInterval& iv, double target, double tol) {
  return std::abs(iv.to_double() - target) <= tol;
}

}  // namespace

TEST_CASE("sturm chain shapes") {
  UniPoly p({Rational(-1), Rational(0), Rational(1)});  // z^2 - 1
  SturmChain chain = sturm_chain(p);
  REQUIRE(chain.polys.size() == 3);
  CHECK(chain.polys[0] == p);
  CHECK(chain.polys[1] == UniPoly({Rational(0), Rational(1)}));  // primitive part of 2z
  CHECK(chain.polys[2] == UniPoly::constant(Rational(1)));
  CHECK(chain.variations_at(Rational(-2)) - chain.variations_at(Rational(2)) == 2);

  SturmChain constant = sturm_chain(UniPoly::constant(Rational(5)));
  CHECK(constant.polys.size() == 1);
}

TEST_CASE("counting with exact endpoint handling") {
  // p = (x-1)(x-2)
  UniPoly p = UniPoly({Rational(-1), Rational(1)}) * UniPoly({Rational(-2), Rational(1)});
  RootIsolator iso(p);
  CHECK(iso.count_open(Ext::finite(Rational(1)), Ext::finite(Rational(2))) == 0);
  CHECK(iso.count_halfopen(Ext::finite(Rational(1)), Ext::finite(Rational(2))) == 1);
  CHECK(iso.count_closed(Ext::finite(Rational(1)), Ext::finite(Rational(2))) == 2);
  CHECK(iso.count_open(Ext::finite(Rational(0)), Ext::finite(Rational(3))) == 2);
  CHECK(iso.count_open(Ext::neg_inf(), Ext::pos_inf()) == 2);
  // repeated roots are counted once
  CHECK(count_real_roots(p * p, Ext::neg_inf(), Ext::pos_inf()) == 2);
}

TEST_CASE("reference count examples") {
  UniPoly z2m1({Rational(-1), Rational(0), Rational(1)});
  CHECK(count_real_roots(z2m1, Ext::finite(Rational(0)), Ext::finite(Rational(2))) == 1);
  CHECK(count_real_roots(m137::apoly_factor_b(), Ext::neg_inf(), Ext::pos_inf()) == 6);
  CHECK(count_real_roots(m137::discriminant_cubic(), Ext::neg_inf(), Ext::pos_inf()) == 3);
  CHECK(count_real_roots(m137::apoly_factor_a(), Ext::neg_inf(), Ext::pos_inf()) == 1);
}

TEST_CASE("isolation matches the printed values") {
  const Rational width(1, 10000);
  SUBCASE("sqrt(2)") {
    UniPoly p({Rational(-2), Rational(0), Rational(1)});
    auto roots = isolate_real_roots(p, width);
    REQUIRE(roots.size() == 2);
    CHECK(within(roots[0], -1.41421356, 1e-4));
    CHECK(within(roots[1], 1.41421356, 1e-4));
  }
  SUBCASE("discriminant cubic") {
    auto roots = isolate_real_roots(m137::discriminant_cubic(), width);
    REQUIRE(roots.size() == 3);
    CHECK(within(roots[0], -2.9032, 1e-4));
    CHECK(within(roots[1], -0.8061, 1e-4));
    CHECK(within(roots[2], 1.7093, 1e-4));
  }
  SUBCASE("the six roots of B") {
    auto roots = isolate_real_roots(m137::apoly_factor_b(), width);
    REQUIRE(roots.size() == 6);
    const double printed[6] = {-2.3396, -1.4121, -0.7082, -0.4274, 0.8684, 1.1516};
    for (int i = 0; i < 6; ++i) CHECK(within(roots[static_cast<std::size_t>(i)], printed[i], 1e-4));
  }
  SUBCASE("rational roots are pinned exactly") {
    // roots at 0, 1/2, 3: the bisection midpoint lands on a root
    UniPoly p = UniPoly({Rational(0), Rational(1)}) *
                UniPoly({Rational(-1, 2), Rational(1)}) *
                UniPoly({Rational(-3), Rational(1)});
    auto roots = isolate_real_roots(p, width);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].contains(Rational(0)));
    CHECK(roots[1].contains(Rational(1, 2)));
    CHECK(roots[2].contains(Rational(3)));
  }
}

TEST_CASE("isolating intervals survive twenty refinements") {
  auto roots = isolate_real_roots(m137::apoly_factor_b(), Rational(1, 100));
  for (auto& r : roots) {
    RootIsolator iso(m137::apoly_factor_b());
    Rational w = r.width();
    for (int i = 0; i < 20; ++i) w /= Rational(2);
    r.refine_to(w);
    CHECK(r.width() <= w);
    CHECK(iso.count_open(Ext::finite(r.lo), Ext::finite(r.hi)) == 1);
    CHECK(r.sign_lo == r.poly.sign_at(r.lo));
    CHECK(r.poly.sign_at(r.lo) * r.poly.sign_at(r.hi) < 0);
  }
}

TEST_CASE("sturm counts agree with a dense-grid brute force on 500 random polynomials") {
  std::mt19937_64 rng(20260137);
  std::uniform_int_distribution<int> nlin(0, 5), nquad(0, 3), num(-48, 48), qb(-3, 3);
  int trials = 0;
  while (trials < 500) {
    // product of distinct linear factors with roots on the grid k/7 and
    // irreducible quadratics; degree <= 12, grid counting is then exact
    std::vector<Rational> roots;
    UniPoly p = UniPoly::constant(Rational(1));
    int L = nlin(rng), Q = nquad(rng);
    if (L + 2 * Q == 0) continue;
    for (int i = 0; i < L; ++i) {
      Rational r(num(rng), 7);
      bool dup = false;
      for (const auto& x : roots) dup = dup || x == r;
      if (dup) continue;
      roots.push_back(r);
      p = p * UniPoly({-r, Rational(1)});
    }
    for (int i = 0; i < Q; ++i) {
      Rational b(qb(rng)), c(qb(rng));
      if ((b * b - Rational(4) * c).sign() >= 0) c = b * b + Rational(1);  // force disc < 0
      p = p * UniPoly({c, b, Rational(1)});
    }
    ++trials;
    // brute force: signs on the grid of step 1/14 over [-8, 8]
    int grid_count = 0;
    int prev = 0;
    for (int k = -8 * 14; k <= 8 * 14; ++k) {
      int s = p.sign_at(Rational(k, 14));
      if (s == 0) {
        ++grid_count;
        prev = 0;
        continue;
      }
      if (prev != 0 && s != prev) ++grid_count;
      prev = s;
    }
    CHECK(count_real_roots(p, Ext::neg_inf(), Ext::pos_inf()) ==
          static_cast<int>(roots.size()));
    CHECK(grid_count == static_cast<int>(roots.size()));
  }
}

TEST_CASE("interval bounds") {
  SUBCASE("z^2 over [-1, 2] encloses [0, 4] tightly") {
    UniPoly p({Rational(0), Rational(0), Rational(1)});
    RatInterval r = bound_on_interval(p, RatInterval(Rational(-1), Rational(2)));
    CHECK(r.lo <= Rational(0));
    CHECK(r.hi >= Rational(4));
    CHECK(r.hi - Rational(4) <= Rational(1, 1000));
    CHECK(Rational(0) - r.lo <= Rational(1, 1000));
  }
  SUBCASE("A is negative on [-2/5, 4/5]") {
    RatInterval r =
        bound_on_interval(m137::apoly_factor_a(), RatInterval(Rational(-2, 5), Rational(4, 5)));
    CHECK(r.hi < Rational(0));
  }
  SUBCASE("B is positive on [-2/5, 4/5]") {
    RatInterval r =
        bound_on_interval(m137::apoly_factor_b(), RatInterval(Rational(-2, 5), Rational(4, 5)));
    CHECK(r.lo > Rational(0));
  }
  SUBCASE("soundness on 500 random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-9, 9), deg(1, 8), pt(-30, 30);
    for (int i = 0; i < 500; ++i) {
      std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& x : c) x = Rational(coef(rng));
      UniPoly p(std::move(c));
      Rational a(pt(rng), 10), b(pt(rng), 10);
      if (a > b) std::swap(a, b);
      if (a == b) b += Rational(1, 5);
      RatInterval dom(a, b);
      RatInterval encl = bound_on_interval(p, dom);
      Rational x = a + (b - a) * Rational(pt(rng) + 30, 60);
      Rational v = p.eval(x);
      CHECK(encl.lo <= v);
      CHECK(v <= encl.hi);
    }
  }
}

TEST_CASE("the s-domain U") {
  SDomainResult sd = compute_s_domain();
  REQUIRE(sd.domain.pieces.size() == 3);
  CHECK(within(sd.cubic_roots[0], -2.9032, 1e-4));
  CHECK(within(sd.cubic_roots[1], -0.8061, 1e-4));
  CHECK(within(sd.cubic_roots[2], 1.7093, 1e-4));
  // (-inf, p1] closed right, [p2, p3] closed, (2, inf) open left
  CHECK(sd.domain.pieces[0].hi_closed);
  CHECK(sd.domain.pieces[1].lo_closed);
  CHECK(sd.domain.pieces[1].hi_closed);
  CHECK_FALSE(sd.domain.pieces[2].lo_closed);
  CHECK(sd.domain.pieces[2].lo.value == Rational(2));
  // every piece carried real t-roots at its sample
  for (const auto& chk : sd.checks) CHECK(chk.real_t_roots > 0);
  // sample s = 0 in [p2, p3]: the fiber -2t^4 + 4t^2 - 1 has four real roots
  CHECK(sd.checks[1].sample_s == Rational(0));
  CHECK(sd.checks[1].real_t_roots == 4);
  // gaps have negative discriminant
  for (const auto& [s, sign] : sd.gap_signs) CHECK(sign < 0);
}

TEST_CASE("the z-domain V") {
  ZDomainResult zd = compute_z_domain();
  REQUIRE(zd.domain.pieces.size() == 4);
  REQUIRE(zd.endpoints.size() == 2);
  CHECK(within(zd.endpoints[0], -2.5038, 1e-4));
  CHECK(within(zd.endpoints[1], -0.3994, 1e-4));
  CHECK(zd.endpoint_poly_palindromic);
  CHECK(zd.reciprocal_pairing_exact);
  // enclosure of e1 * e2 contains 1
  RatInterval prod = RatInterval(zd.endpoints[0].lo, zd.endpoints[0].hi) *
                     RatInterval(zd.endpoints[1].lo, zd.endpoints[1].hi);
  CHECK(prod.contains(Rational(1)));
  // positive branch pieces
  CHECK(zd.domain.pieces[2].lo.value == Rational(0));
  CHECK(zd.domain.pieces[2].hi.value == Rational(1));
  CHECK(zd.domain.pieces[3].lo.value == Rational(1));

  SUBCASE("round trip: z in V maps into the real s-region") {
    std::mt19937_64 rng(3);
    UniPoly cubic = m137::discriminant_cubic();
    std::uniform_int_distribution<int> den(2, 40);
    auto s_ok = [&](const Rational& z) {
      Rational s = z + z.reciprocal();
      return s > Rational(2) || (cubic.sign_at(s) < 0 && s < Rational(-2));
    };
    for (int i = 0; i < 100; ++i) {
      // pieces (0,1) and (1,inf)
      Rational z1(1, den(rng));
      Rational z2 = Rational(1) + Rational(den(rng), 7);
      CHECK(s_ok(z1));
      CHECK(s_ok(z2));
      // tail piece (-inf, e1): anything <= -2.6 is safely inside
      Rational z3 = Rational(-26, 10) - Rational(den(rng), 11);
      CHECK(s_ok(z3));
      // piece [e2, 0): stay right of -0.3994 via -0.39
      Rational z4 = Rational(-39, 100) * Rational(den(rng), 41);
      if (z4 >= Rational(-3994, 10000) && z4 < Rational(0)) CHECK(s_ok(z4));
    }
  }
}

TEST_CASE("algebraic endpoint comparisons") {
  ZDomainResult zd = compute_z_domain();
  IsolatingInterval e2 = zd.endpoints[1];
  CHECK(e2.cmp(Rational(0)) < 0);        // e2 < 0
  CHECK(e2.cmp(Rational(-1)) > 0);       // e2 > -1
  CHECK(e2.cmp(Rational(-2, 5)) > 0);    // e2 > -0.4
  CHECK(e2.cmp(Rational(-39, 100)) < 0); // e2 < -0.39
}
