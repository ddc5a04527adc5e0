#ifndef HOLONOMY_IDEAL_HPP
#define HOLONOMY_IDEAL_HPP

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "holonomy/multipoly.hpp"

namespace holonomy {

// Total, multiplicative, well-founded order on monomials. `priority` is a
// permutation of the context's variable indices, most significant first.
struct MonomialOrder {
  enum class Kind { Lex, GrevLex };

  Kind kind = Kind::Lex;
  std::vector<int> priority;

  static MonomialOrder lex(const Ctx& ctx);
  static MonomialOrder grevlex(const Ctx& ctx);
  // Lex order whose priority lists `first` (in context order) before the rest;
  // this is an elimination order for `first`.
  static MonomialOrder elimination(const Ctx& ctx, const std::vector<int>& first);

  // <0, 0, >0 as a < b, a == b, a > b.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
  // True when every monomial containing a variable of `drop` is greater than
  // every monomial free of them (so a Groebner basis eliminates).
  bool is_elimination_order_for(const std::vector<int>& drop, int nvars) const;
};

std::pair<Monomial, Rational> leading_term(const MultiPoly& p, const MonomialOrder& order);

struct GroebnerOptions {
  // S-pairs processed before giving up.
  std::size_t max_pairs = 1000000;
  // Bit length (numerator plus denominator) any coefficient may reach.
  std::size_t max_coeff_bits = 1000000;
};

struct IdealBasis {
  std::vector<MultiPoly> generators;
  MonomialOrder order;
  bool is_groebner = false;
};

// Remainder of multivariate division: no term of the result is divisible by
// any generator's leading term, and p - result lies in the ideal.
MultiPoly normal_form(const MultiPoly& p, const IdealBasis& basis);

// S-polynomial of a and b under `order`.
MultiPoly s_polynomial(const MultiPoly& a, const MultiPoly& b, const MonomialOrder& order);

// Buchberger with the coprime and chain criteria and sugar pair selection.
// The result is reduced: monic generators, no leading term divides another,
// tails fully reduced, sorted by decreasing leading monomial.
IdealBasis groebner_basis(const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                          const GroebnerOptions& opts = {});

// Post-hoc exhaustive check that every S-polynomial reduces to zero.
bool groebner_property_holds(const IdealBasis& basis);

// Generators of the elimination ideal: compute a Groebner basis under `order`
// (which must be an elimination order for `drop`) and keep the generators
// free of the dropped variables.
std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens, const std::vector<int>& drop,
                                 const MonomialOrder& order, const GroebnerOptions& opts = {});

struct SaturationResult {
  std::vector<MultiPoly> generators;  // over the enlarged context
  Ctx ctx;
  // (unit variable index, fresh inverse variable index) in the new context
  std::vector<std::pair<int, int>> inverse_pairs;
};

// Extends the system with u * u_inv - 1 for each unit u, over a context
// enlarged by fresh single-letter variables.
SaturationResult saturate_units(const std::vector<MultiPoly>& gens, const Ctx& ctx,
                                const std::vector<int>& units);

bool ideal_member(const MultiPoly& p, const IdealBasis& groebner);
bool ideal_member(const MultiPoly& p, const std::vector<MultiPoly>& gens,
                  const GroebnerOptions& opts = {});

}  // namespace holonomy

#endif
