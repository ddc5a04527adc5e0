#include "holonomy/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "holonomy/errors.hpp"

namespace holonomy {

MonomialOrder MonomialOrder::lex(const Ctx& ctx) {
  MonomialOrder o;
  o.kind = Kind::Lex;
  o.priority.resize(static_cast<std::size_t>(ctx->size()));
  std::iota(o.priority.begin(), o.priority.end(), 0);
  return o;
}

MonomialOrder MonomialOrder::grevlex(const Ctx& ctx) {
  MonomialOrder o = lex(ctx);
  o.kind = Kind::GrevLex;
  return o;
}

MonomialOrder MonomialOrder::elimination(const Ctx& ctx, const std::vector<int>& first) {
  MonomialOrder o;
  o.kind = Kind::Lex;
  for (int v = 0; v < ctx->size(); ++v)
    if (std::find(first.begin(), first.end(), v) != first.end()) o.priority.push_back(v);
  for (int v = 0; v < ctx->size(); ++v)
    if (std::find(first.begin(), first.end(), v) == first.end()) o.priority.push_back(v);
  return o;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  if (kind == Kind::Lex) {
    for (int v : priority) {
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
    }
    return 0;
  }
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db ? 1 : -1;
  // graded reverse lex: last differing variable, smaller exponent wins
  for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
    if (a.e[*it] != b.e[*it]) return a.e[*it] < b.e[*it] ? 1 : -1;
  }
  return 0;
}

bool MonomialOrder::is_elimination_order_for(const std::vector<int>& drop, int nvars) const {
  if (kind != Kind::Lex) return false;
  // every dropped variable must appear in the priority before every kept one
  std::vector<int> pos(static_cast<std::size_t>(nvars), 0);
  for (std::size_t i = 0; i < priority.size(); ++i) pos[static_cast<std::size_t>(priority[i])] = static_cast<int>(i);
  int max_drop = -1, min_keep = nvars;
  for (int v = 0; v < nvars; ++v) {
    bool dropped = std::find(drop.begin(), drop.end(), v) != drop.end();
    if (dropped)
      max_drop = std::max(max_drop, pos[static_cast<std::size_t>(v)]);
    else
      min_keep = std::min(min_keep, pos[static_cast<std::size_t>(v)]);
  }
  return max_drop < min_keep;
}

std::pair<Monomial, Rational> leading_term(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw DomainError("leading term of zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (order.cmp(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

MultiPoly normal_form(const MultiPoly& p, const IdealBasis& basis) {
  if (basis.generators.empty()) throw DomainError("normal_form with empty basis");
  struct Lead {
    Monomial m;
    Rational c;
  };
  std::vector<Lead> leads;
  leads.reserve(basis.generators.size());
  for (const auto& g : basis.generators) {
    if (g.is_zero()) continue;
    auto [m, c] = leading_term(g, basis.order);
    leads.push_back({m, c});
  }

  MultiPoly work = p;
  MultiPoly remainder(p.ctx());
  while (!work.is_zero()) {
    auto [lm, lc] = leading_term(work, basis.order);
    bool reduced = false;
    std::size_t gi = 0;
    for (const auto& g : basis.generators) {
      if (!g.is_zero() && leads[gi].m.divides(lm)) {
        work.add_scaled_monomial_multiple(-(lc / leads[gi].c), lm / leads[gi].m, g);
        reduced = true;
        break;
      }
      ++gi;
    }
    if (!reduced) {
      remainder.add_term(lm, lc);
      work.add_term(lm, -lc);
    }
  }
  return remainder;
}

MultiPoly s_polynomial(const MultiPoly& a, const MultiPoly& b, const MonomialOrder& order) {
  auto [ma, ca] = leading_term(a, order);
  auto [mb, cb] = leading_term(b, order);
  Monomial l = Monomial::lcm(ma, mb);
  MultiPoly s(a.ctx());
  s.add_scaled_monomial_multiple(ca.reciprocal(), l / ma, a);
  s.add_scaled_monomial_multiple(-cb.reciprocal(), l / mb, b);
  return s;
}

namespace {

void check_coeff_bits(const MultiPoly& p, const GroebnerOptions& opts) {
  for (const auto& [m, c] : p.terms())
    if (c.bit_size() > opts.max_coeff_bits)
      throw CapExceeded("max_coeff_bits",
                        "coefficient reached " + std::to_string(c.bit_size()) + " bits");
}

// primitive integer form with order-positive leading coefficient
MultiPoly canonical_generator(const MultiPoly& p, const MonomialOrder& order) {
  MultiPoly q = p.primitive_part();
  if (leading_term(q, order).second.sign() < 0) q = -q;
  return q;
}

struct Pair {
  int sugar;
  int lcm_deg;
  Monomial lcm;
  int i, j;

  bool operator<(const Pair& o) const {
    if (sugar != o.sugar) return sugar < o.sugar;
    if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
    if (lcm != o.lcm) return lcm < o.lcm;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace

IdealBasis groebner_basis(const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                          const GroebnerOptions& opts) {
  if (gens.empty()) throw DomainError("groebner_basis of empty generator list");

  struct Entry {
    MultiPoly p;
    Monomial lm;
    int sugar;
  };
  std::vector<Entry> basis;
  IdealBasis view;  // shadow for normal_form calls
  view.order = order;

  auto append = [&](const MultiPoly& raw) {
    MultiPoly p = canonical_generator(raw, order);
    check_coeff_bits(p, opts);
    basis.push_back({p, leading_term(p, order).first, p.total_degree()});
    view.generators.push_back(p);
  };

  for (const auto& g : gens)
    if (!g.is_zero()) append(g);
  if (basis.empty()) throw DomainError("groebner_basis of the zero ideal");

  std::set<Pair> pending;
  std::set<std::pair<int, int>> treated;
  auto make_pair = [&](int i, int j) {
    Monomial l = Monomial::lcm(basis[static_cast<std::size_t>(i)].lm, basis[static_cast<std::size_t>(j)].lm);
    int si = basis[static_cast<std::size_t>(i)].sugar + (l / basis[static_cast<std::size_t>(i)].lm).total_degree();
    int sj = basis[static_cast<std::size_t>(j)].sugar + (l / basis[static_cast<std::size_t>(j)].lm).total_degree();
    pending.insert({std::max(si, sj), l.total_degree(), l, i, j});
  };
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(basis.size()); ++j) make_pair(i, j);

  std::size_t processed = 0;
  while (!pending.empty()) {
    if (++processed > opts.max_pairs)
      throw CapExceeded("max_pairs", "processed " + std::to_string(opts.max_pairs) + " S-pairs");
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    treated.insert({pr.i, pr.j});

    const auto& gi = basis[static_cast<std::size_t>(pr.i)];
    const auto& gj = basis[static_cast<std::size_t>(pr.j)];
    // Buchberger's first criterion: coprime leading terms
    if (gi.lm.coprime_with(gj.lm)) continue;
    // chain criterion: some k with lm_k | lcm and both pairs already treated
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[static_cast<std::size_t>(k)].lm.divides(pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (treated.count({key1.first, key1.second}) && treated.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    MultiPoly s = s_polynomial(gi.p, gj.p, order);
    MultiPoly r = normal_form(s, view);
    if (r.is_zero()) continue;
    int idx = static_cast<int>(basis.size());
    append(r);
    basis[static_cast<std::size_t>(idx)].sugar =
        std::max({pr.sugar, basis[static_cast<std::size_t>(idx)].p.total_degree()});
    for (int i = 0; i < idx; ++i) make_pair(i, idx);
  }

  // minimize: drop generators whose leading monomial another one divides
  // (ties on equal leading monomials keep the earliest)
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].lm.divides(basis[i].lm) && (basis[j].lm != basis[i].lm || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i].p);
  }

  // reduce tails against the other generators and make monic
  IdealBasis result;
  result.order = order;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    IdealBasis others;
    others.order = order;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.generators.push_back(minimal[j]);
    MultiPoly r = others.generators.empty() ? minimal[i] : normal_form(minimal[i], others);
    r = r.scaled(leading_term(r, order).second.reciprocal());
    result.generators.push_back(r);
  }
  std::sort(result.generators.begin(), result.generators.end(),
            [&](const MultiPoly& a, const MultiPoly& b) {
              return order.cmp(leading_term(a, order).first, leading_term(b, order).first) > 0;
            });
  result.is_groebner = true;
  return result;
}

bool groebner_property_holds(const IdealBasis& basis) {
  for (std::size_t i = 0; i < basis.generators.size(); ++i)
    for (std::size_t j = i + 1; j < basis.generators.size(); ++j) {
      MultiPoly s = s_polynomial(basis.generators[i], basis.generators[j], basis.order);
      if (!normal_form(s, basis).is_zero()) return false;
    }
  return true;
}

std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens, const std::vector<int>& drop,
                                 const MonomialOrder& order, const GroebnerOptions& opts) {
  if (gens.empty()) throw DomainError("eliminate with no generators");
  int nvars = gens.front().ctx()->size();
  if (!order.is_elimination_order_for(drop, nvars))
    throw DomainError("order does not eliminate the requested variables");
  IdealBasis gb = groebner_basis(gens, order, opts);
  std::vector<MultiPoly> kept;
  for (const auto& g : gb.generators) {
    bool uses_dropped = false;
    for (int v : drop)
      if (g.uses_var(v)) {
        uses_dropped = true;
        break;
      }
    if (!uses_dropped) kept.push_back(g);
  }
  return kept;
}

SaturationResult saturate_units(const std::vector<MultiPoly>& gens, const Ctx& ctx,
                                const std::vector<int>& units) {
  // fresh single-letter names for the inverses
  std::vector<std::string> names = ctx->names();
  std::vector<int> inverse_idx;
  const std::string pool = "abcdefghijklmnopqruv";
  std::size_t next = 0;
  for (std::size_t k = 0; k < units.size(); ++k) {
    while (next < pool.size() && ctx->index_of(std::string(1, pool[next])) >= 0) ++next;
    if (next >= pool.size()) throw DomainError("no fresh variable names left");
    inverse_idx.push_back(static_cast<int>(names.size()));
    names.push_back(std::string(1, pool[next++]));
  }
  SaturationResult out;
  out.ctx = make_ctx(names);
  for (const auto& g : gens) out.generators.push_back(g.embedded(out.ctx));
  for (std::size_t k = 0; k < units.size(); ++k) {
    MultiPoly u = MultiPoly::variable(out.ctx, ctx->name(units[k]));
    MultiPoly ubar = MultiPoly::variable(out.ctx, out.ctx->name(inverse_idx[k]));
    out.generators.push_back(u * ubar - MultiPoly::constant(out.ctx, Rational(1)));
    out.inverse_pairs.emplace_back(units[k], inverse_idx[k]);
  }
  return out;
}

bool ideal_member(const MultiPoly& p, const IdealBasis& groebner) {
  return normal_form(p, groebner).is_zero();
}

bool ideal_member(const MultiPoly& p, const std::vector<MultiPoly>& gens,
                  const GroebnerOptions& opts) {
  if (gens.empty()) return p.is_zero();
  MonomialOrder order = MonomialOrder::grevlex(gens.front().ctx());
  return ideal_member(p, groebner_basis(gens, order, opts));
}

}  // namespace holonomy
