#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holonomy/errors.hpp"
#include "holonomy/m137.hpp"
#include "holonomy/matrix2.hpp"
#include "holonomy/multipoly.hpp"
#include "holonomy/rational.hpp"
#include "holonomy/unipoly.hpp"
#include "holonomy/variety.hpp"

using namespace holonomy;

TEST_CASE("rationals are always canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).den() == 2);
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(-6, 3).str() == "-2");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::from_string("3/4") == Rational(3, 4));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(Rational::from_string("-2.5038") == Rational(-25038, 10000));
  CHECK(Rational::from_string("  5/10 ") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("x"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("1.2.3"), ParseError);
}

TEST_CASE("rational powers and gcd") {
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK(rational_gcd(Rational(4, 6), Rational(2, 9)) == Rational(2, 9));
  CHECK(rational_gcd(Rational(0), Rational(-5)) == Rational(5));
}

TEST_CASE("polynomial arithmetic basics") {
  Ctx ctx = make_ctx({"s", "t"});
  MultiPoly a = MultiPoly::parse("(s+1)*(s-1)", ctx);
  CHECK(a == MultiPoly::parse("s^2-1", ctx));
  MultiPoly p = MultiPoly::parse("3*s^2*t - 5/2*t + 1", ctx);
  CHECK((p - p).is_zero());
  CHECK(p + p == p.scaled(Rational(2)));
}

TEST_CASE("the A-polynomial factor expands from its product form") {
  Ctx ctx = make_ctx({"z"});
  MultiPoly prod = MultiPoly::parse("(z-1)*(z^2+z+1)^3", ctx);
  CHECK(UniPoly::from_multipoly(prod) == m137::apoly_factor_a());
  CHECK(prod == m137::apoly_factor_a().to_multipoly(ctx, "z"));
}

TEST_CASE("ring axioms hold exactly on random triples") {
  std::mt19937_64 rng(20260137);
  Ctx ctx = make_ctx({"s", "t", "w"});
  std::uniform_int_distribution<int> coef(-9, 9), expo(0, 4), nterms(1, 6);
  auto rand_poly = [&] {
    MultiPoly p(ctx);
    for (int i = 0, n = nterms(rng); i < n; ++i) {
      Monomial m = Monomial::one(3);
      for (int v = 0; v < 3; ++v) m.e[v] = static_cast<std::int16_t>(expo(rng));
      p.add_term(m, Rational(coef(rng)));
    }
    return p;
  };
  for (int i = 0; i < 300; ++i) {
    MultiPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("parser round-trips and rejects junk") {
  std::mt19937_64 rng(7);
  Ctx ctx = make_ctx({"s", "t"});
  std::uniform_int_distribution<int> coef(-20, 20), expo(0, 5), nterms(1, 8);
  for (int i = 0; i < 100; ++i) {
    MultiPoly p(ctx);
    for (int k = 0, n = nterms(rng); k < n; ++k) {
      Monomial m = Monomial::one(2);
      m.e[0] = static_cast<std::int16_t>(expo(rng));
      m.e[1] = static_cast<std::int16_t>(expo(rng));
      p.add_term(m, Rational(coef(rng), 1 + (i % 3)));
    }
    CHECK(MultiPoly::parse(p.str(), ctx) == p);
  }
  CHECK_THROWS_AS(MultiPoly::parse("s + q", ctx), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("s + ", ctx), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("s)", ctx), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("(s", ctx), ParseError);
  CHECK(MultiPoly::parse("(s-2)*(s+1)^2*t^4 - (s-2)*(s+2)*(s+1)*t^2 - 1", ctx) ==
        m137::curve_polynomial(ctx));
}

TEST_CASE("rational-function substitution clears the right power") {
  Ctx ctx = m137::trace_ctx();
  auto gens = m137::published_ideal_generators(ctx);
  int wi = ctx->index_of("w");
  MultiPoly num = MultiPoly::parse("t^2*(s+1) - 1", ctx);
  MultiPoly den = MultiPoly::parse("t*(s+1)", ctx);

  // substituting w = t - 1/(t(s+1)) into the first generator clears
  // (t(s+1))^2 and lands in the curve ideal
  auto [cleared, power] = gens[0].substitute_rational(wi, num, den);
  CHECK(power == 2);
  MultiPoly curve = m137::curve_polynomial(ctx);
  IdealBasis pb{{curve}, MonomialOrder::lex(ctx), true};
  CHECK(normal_form(cleared, pb).is_zero());

  // a variable absent from the polynomial leaves it unchanged with power 0
  MultiPoly no_w = MultiPoly::parse("s^2 + t", ctx);
  auto [same, zero_power] = no_w.substitute_rational(wi, num, den);
  CHECK(zero_power == 0);
  CHECK(same == no_w);
}

TEST_CASE("substituting the meridian eigenvalue reproduces the filling equation") {
  Ctx ctx = m137::eigen_ctx();
  MultiPoly compact = m137::apoly_compact(ctx);
  // m = z^3 (slope n = -3), cleared by den = 1: degree in m is 4
  auto [subst, power] = compact.substitute_rational(
      ctx->index_of("m"), MultiPoly::parse("z^3", ctx), MultiPoly::constant(ctx, Rational(1)));
  CHECK(power == 4);
  UniPoly u = UniPoly::from_multipoly(subst);
  // dividing by z^4 gives A z^11 - B z^2 - A
  UniPoly expected = m137::apoly_factor_a().shifted_up(11) - m137::apoly_factor_b().shifted_up(2) -
                     m137::apoly_factor_a();
  CHECK(u.shifted_down(4) == expected);
}

TEST_CASE("laurent normalization") {
  Ctx ctx = make_ctx({"z"});
  SUBCASE("z + 1/z clears to z^2 + 1 with shift 1") {
    LaurentPoly lp{MultiPoly::parse("z^2 + 1", ctx), 0, -1};
    auto [p, shift] = laurent_normalize(lp);
    CHECK(shift == 1);
    CHECK(p == MultiPoly::parse("z^2 + 1", ctx));
  }
  SUBCASE("plain polynomials keep shift 0") {
    LaurentPoly lp{MultiPoly::parse("z^5", ctx), 0, 0};
    auto [p, shift] = laurent_normalize(lp);
    CHECK(shift == 0);
    CHECK(p == MultiPoly::parse("z^5", ctx));
  }
  SUBCASE("zero input gives (0, 0)") {
    auto [p, shift] = laurent_normalize({MultiPoly::zero(ctx), 0, -3});
    CHECK(shift == 0);
    CHECK(p.is_zero());
  }
  SUBCASE("round-trip on random Laurent expressions") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> off(-6, 6), coef(-9, 9), expo(0, 5);
    for (int i = 0; i < 200; ++i) {
      MultiPoly p(ctx);
      for (int k = 0; k < 4; ++k)
        p.add_term(Monomial::var(1, 0, expo(rng)), Rational(coef(rng)));
      LaurentPoly lp{p, 0, off(rng)};
      auto [q, shift] = laurent_normalize(lp);
      // q must equal z^(offset+shift) * p as a Laurent expression
      int total = lp.offset + shift;
      if (total >= 0)
        CHECK(q == p * MultiPoly::monomial(ctx, Monomial::var(1, 0, total), Rational(1)));
      else
        CHECK(q * MultiPoly::monomial(ctx, Monomial::var(1, 0, -total), Rational(1)) == p);
    }
  }
  SUBCASE("reciprocal of the displayed filling form has shift 4n'+6") {
    // n' = 3
    UniPoly f = m137::apoly_factor_a().shifted_up(11) - m137::apoly_factor_b().shifted_up(2) -
                m137::apoly_factor_a();
    MultiPoly fm = f.to_multipoly(ctx, "z");
    auto [rev, shift] = laurent_normalize(reciprocal_substitute(fm, 0));
    CHECK(shift == 4 * 3 + 6);
    CHECK(UniPoly::from_multipoly(rev) == f);  // palindromic
  }
}

TEST_CASE("word algebra normalizes letters") {
  GroupWord w({{0, 1}, {0, 2}, {1, -1}, {1, 1}, {0, 3}});
  CHECK(w.letters().size() == 1);  // all but lambda^6 cancels or merges
  CHECK(w == GroupWord::generator(0, 6));
  CHECK((w * w.inverse()).empty());
  CHECK(GroupWord::generator(1, 2).pow(-2) == GroupWord::generator(1, -4));
}

TEST_CASE("generator images are unimodular and words multiply") {
  Ctx ctx = m137::char_ctx();
  std::map<int, SymMatrix2> images = {{m137::kLongitude, m137::longitude_image(ctx)},
                                      {m137::kBeta, m137::beta_image(ctx)}};
  CHECK(images.at(0).is_unimodular());
  CHECK(images.at(1).is_unimodular());

  SUBCASE("empty word gives the identity") {
    CHECK(word_matrix(GroupWord::one(), images) == SymMatrix2::identity(ctx));
  }
  SUBCASE("a single letter gives its image") {
    CHECK(word_matrix(GroupWord::generator(m137::kLongitude), images) == images.at(0));
  }
  SUBCASE("adjugate inverts: M * adj(M) = denom^2 * I") {
    SymMatrix2 m = word_matrix(m137::presentation().meridian, images);
    SymMatrix2 prod = m * m.adjugate();
    MultiPoly d2 = MultiPoly::monomial(ctx, prod.denom, Rational(1));
    CHECK(prod.e11 == d2);
    CHECK(prod.e22 == d2);
    CHECK(prod.e12.is_zero());
    CHECK(prod.e21.is_zero());
  }
  SUBCASE("random words: determinant one and multiplicativity") {
    std::mt19937_64 rng(20260137);
    std::uniform_int_distribution<int> gen(0, 1), expo(-2, 2);
    for (int i = 0; i < 30; ++i) {
      std::vector<GroupWord::Letter> l1, l2;
      for (int k = 0; k < 3; ++k) {
        if (int e = expo(rng)) l1.push_back({gen(rng), e});
        if (int e = expo(rng)) l2.push_back({gen(rng), e});
      }
      GroupWord w1{l1}, w2{l2};
      SymMatrix2 m1 = word_matrix(w1, images);
      SymMatrix2 m2 = word_matrix(w2, images);
      CHECK(m1.is_unimodular());
      CHECK(word_matrix(w1 * w2, images) == m1 * m2);
    }
  }
}

TEST_CASE("the pinned gauge excludes the trivial representation") {
  // The parametrized images fix rho(lambda)_{12} = 1, which is only a valid
  // normal form for irreducible representations. At (z, x, y) = (1, 1, 0)
  // the pair is (parabolic, identity): with beta = I the relator collapses
  // to lambda^{-1} = 1, so this point is NOT a representation and the entry
  // equations must notice.
  Ctx ctx = m137::char_ctx();
  std::vector<Rational> vals(static_cast<std::size_t>(ctx->size()), Rational(0));
  vals[static_cast<std::size_t>(ctx->index_of("z"))] = Rational(1);
  vals[static_cast<std::size_t>(ctx->index_of("x"))] = Rational(1);
  bool all_vanish = true;
  for (const auto& eq : relator_entry_equations()) all_vanish = all_vanish && eq.eval(vals).is_zero();
  CHECK_FALSE(all_vanish);

  // the relator word evaluates to rho(lambda)^{-1}, not the identity
  CMat2 L = {{{1.0, 1.0}, {0.0, 1.0}}};
  CMat2 B = {{{1.0, 0.0}, {0.0, 1.0}}};
  CMat2 rel = evaluate_word(m137::presentation().relator, L, B);
  CHECK(rel[0][0] == std::complex<double>(1.0));
  CHECK(rel[0][1] == std::complex<double>(-1.0));
  CHECK(rel[1][0] == std::complex<double>(0.0));
  CHECK(rel[1][1] == std::complex<double>(1.0));

  // genuinely trivial images (both identity) do satisfy every relator
  CMat2 I2 = {{{1.0, 0.0}, {0.0, 1.0}}};
  CMat2 triv = evaluate_word(m137::presentation().relator, I2, I2);
  CHECK(triv[0][1] == std::complex<double>(0.0));
  CHECK(triv[0][0] == std::complex<double>(1.0));
}

TEST_CASE("unipoly division, gcd, squarefree part") {
  UniPoly p({Rational(-2), Rational(0), Rational(1)});   // x^2 - 2
  UniPoly q({Rational(1), Rational(1)});                 // x + 1
  UniPoly quot, rem;
  (p * q).divmod(q, &quot, &rem);
  CHECK(quot == p);
  CHECK(rem.is_zero());
  UniPoly g = UniPoly::gcd(p * q, p);
  CHECK(g == p.scaled(Rational(1)));  // monic already
  UniPoly sq = (p * p * q).squarefree_part();
  CHECK(sq == (p * q).scaled((p * q).leading().reciprocal()));
  CHECK_THROWS_AS(p.exact_div(q), DomainError);
}
