#include "holonomy/filling.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "holonomy/bounds.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/m137.hpp"

namespace holonomy {

namespace {

const Rational kWitnessWidth(1, 1000000);  // 1e-6

const ZDomainResult& cached_z_domain() {
  static const ZDomainResult zd = [] {
    ZDomainResult r = compute_z_domain();
    for (auto& e : r.endpoints) e.refine_to(Rational(1, 1000000000));
    return r;
  }();
  return zd;
}

// fifth root of B (the smallest positive one), refined well inside (0, 1)
const IsolatingInterval& cached_b_root5() {
  static const IsolatingInterval r5 = [] {
    RootIsolator iso(m137::apoly_factor_b());
    auto roots = iso.isolate_all(Rational(1, 1000000000));
    if (roots.size() != 6) throw ContradictionError("B must have six real roots");
    IsolatingInterval r = roots[4];
    if (!(Rational(0) < r.lo && r.hi < Rational(1)))
      throw ContradictionError("fifth root of B must lie in (0,1)");
    return r;
  }();
  return r5;
}

bool is_palindromic(const UniPoly& p) {
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!(c[i] == c[c.size() - 1 - i])) return false;
  return true;
}

UniPoly reversed(const UniPoly& p) {
  std::vector<Rational> c(p.coeffs().rbegin(), p.coeffs().rend());
  return UniPoly(std::move(c));
}

}  // namespace

FillingPolynomial filling_polynomial(int n) {
  if (n == 0) throw DomainError("slope n must be nonzero");
  Ctx ectx = m137::eigen_ctx();
  MultiPoly compact = m137::apoly_compact(ectx);
  int mi = ectx->index_of("m"), zi = ectx->index_of("z");
  LaurentPoly lp = substitute_power(compact, mi, zi, -n);
  auto [cleared, lshift] = laurent_normalize(lp);
  UniPoly uni = UniPoly::from_multipoly(cleared);
  if (uni.is_zero()) throw ContradictionError("filling polynomial collapsed to zero");
  int val = uni.valuation();
  uni = uni.shifted_down(val);

  FillingPolynomial out;
  out.n = n;
  out.clearing_shift = lshift + val;
  // n < 0 keeps the sign of the cleared substitution (the F-form); n > 0 is
  // negated so the result is the G-form with G(1) = -4
  out.negated = n > 0;
  out.poly = out.negated ? -uni : uni;
  if (out.poly.coeff(0).is_zero())
    throw ContradictionError("filling polynomial must have nonzero constant term");
  return out;
}

UniPoly displayed_filling_form(int n) {
  if (n >= 2) {
    const UniPoly a = m137::apoly_factor_a();
    const UniPoly b = m137::apoly_factor_b();
    return a.shifted_up(4 * n + 1) + b.shifted_up(2 * n - 3) - a;
  }
  if (n <= -2) {
    int np = -n;
    const UniPoly a = m137::apoly_factor_a();
    const UniPoly b = m137::apoly_factor_b();
    return a.shifted_up(4 * np - 1) - b.shifted_up(2 * np - 4) - a;
  }
  throw DomainError("displayed form exists only for |n| >= 2");
}

SymmetryRecord verify_palindrome_symmetries(int n) {
  if (n >= 0) throw DomainError("palindrome symmetries apply to negative slopes");
  int np = -n;
  SymmetryRecord out;
  out.n = n;
  const UniPoly a = m137::apoly_factor_a();
  const UniPoly b = m137::apoly_factor_b();
  out.a_antipalindromic = reversed(a) == -a;
  out.steps.push_back({"z^7 A(1/z) = -A(z)", "coefficient reversal", out.a_antipalindromic});
  out.b_palindromic = reversed(b) == b;
  out.steps.push_back({"z^14 B(1/z) = B(z)", "coefficient reversal", out.b_palindromic});

  // F = z^(shift-4) * poly, so the Laurent identity z^{4n'+6} F(1/z) = F(z)
  // holds iff poly is palindromic and 4n'+6 = 2(shift-4) + deg(poly)
  FillingPolynomial fp = filling_polynomial(n);
  int offset = fp.clearing_shift - 4;
  bool shape = is_palindromic(fp.poly) && 4 * np + 6 == 2 * offset + fp.poly.degree();
  out.f_reciprocal = shape;
  out.steps.push_back({"z^{4n'+6} F(1/z) = F(z)",
                       "palindromic coefficients and exponent bookkeeping", shape});
  if (!(out.a_antipalindromic && out.b_palindromic && out.f_reciprocal))
    throw ContradictionError("reciprocal symmetry verification failed");
  return out;
}

std::string to_string(SlopeVerdict v) {
  return v == SlopeVerdict::NoRealSolutions ? "NO_REAL_SOLUTIONS" : "REAL_SOLUTION_FOUND";
}

namespace {

// side of V a certified root lies on: true when inside
bool witness_inside_v(IsolatingInterval root, const ZDomainResult& zd) {
  IsolatingInterval e1 = zd.endpoints[0];
  IsolatingInterval e2 = zd.endpoints[1];
  // exact coincidence with an algebraic endpoint (both are in V, closed ends)
  UniPoly common = UniPoly::gcd(root.poly, zd.endpoint_poly);
  if (common.degree() > 0) {
    for (const auto& e : {e1, e2}) {
      if (std::max(root.lo, e.lo) < std::min(root.hi, e.hi) &&
          count_real_roots(common, Ext::finite(std::max(root.lo, e.lo)),
                           Ext::finite(std::min(root.hi, e.hi))) == 1)
        return true;  // the root is exactly that endpoint
    }
  }
  // otherwise refinement separates the root from both endpoints
  for (int round = 0; round < 200; ++round) {
    bool overlap1 = std::max(root.lo, e1.lo) < std::min(root.hi, e1.hi);
    bool overlap2 = std::max(root.lo, e2.lo) < std::min(root.hi, e2.hi);
    bool zero_in = root.contains(Rational(0));
    bool one_in = root.contains(Rational(1));
    if (!overlap1 && !overlap2 && !zero_in && !one_in) {
      // piece tests with exact rational comparisons against the enclosures
      if (root.hi <= e1.lo) return true;                       // (-inf, e1)
      if (root.lo >= e2.hi && root.hi <= Rational(0)) return true;  // (e2, 0)
      if (root.lo >= Rational(0) && root.hi <= Rational(1)) return true;  // (0,1)
      if (root.lo >= Rational(1)) return true;                 // (1, inf)
      // between e1 and e2: outside V
      if (root.lo >= e1.hi && root.hi <= e2.lo) return false;
      // still ambiguous only if the interval straddles an enclosure; refine
    }
    root.refine_to(root.width() / Rational(4));
    e1.refine_to(e1.width() / Rational(4));
    e2.refine_to(e2.width() / Rational(4));
  }
  throw ContradictionError("could not separate a root from the endpoints of V");
}

}  // namespace

SlopeCertificate certify_slope(int n) {
  if (n == 0) throw DomainError("slope n must be nonzero");
  const ZDomainResult& zd = cached_z_domain();
  FillingPolynomial fp = filling_polynomial(n);

  SlopeCertificate out;
  out.n = n;
  out.value_at_one = fp.poly.eval(Rational(1));
  out.facts.push_back({"filling polynomial has nonzero constant term",
                       "exact evaluation", !fp.poly.coeff(0).is_zero()});
  out.facts.push_back({"z = 1 is not a root (value " + out.value_at_one.str() + ")",
                       "exact evaluation", !out.value_at_one.is_zero()});
  if (out.value_at_one.is_zero())
    throw ContradictionError("filling polynomial vanished at z = 1");

  out.cover_e1_hi = zd.endpoints[0].hi;
  out.cover_e2_lo = zd.endpoints[1].lo;

  RootIsolator iso(fp.poly);
  // outward cover: (-inf, e1_hi] u (e2_lo, 1) u (1, inf) contains V
  // (0 and 1 are never roots, so excluding them costs nothing)
  int c1 = iso.count_halfopen(Ext::neg_inf(), Ext::finite(out.cover_e1_hi));
  int c2 = iso.count_open(Ext::finite(out.cover_e2_lo), Ext::finite(Rational(1)));
  int c3 = iso.count_open(Ext::finite(Rational(1)), Ext::pos_inf());
  out.cover_root_count = c1 + c2 + c3;
  out.facts.push_back({"Sturm count over the outward cover of V: " +
                           std::to_string(out.cover_root_count),
                       "sign variations of the Sturm chain", true});

  if (out.cover_root_count == 0) {
    out.verdict = SlopeVerdict::NoRealSolutions;
    return out;
  }

  // classify every counted root exactly
  std::vector<IsolatingInterval> candidates;
  for (auto& iv : iso.isolate_open(Ext::neg_inf(), Ext::finite(out.cover_e1_hi), kWitnessWidth))
    candidates.push_back(std::move(iv));
  // the halfopen count includes a possible root exactly at the cover bound
  if (iso.squarefree().sign_at(out.cover_e1_hi) == 0)
    candidates.push_back(RootIsolator(fp.poly).pin_root_at(out.cover_e1_hi));
  for (auto& iv :
       iso.isolate_open(Ext::finite(out.cover_e2_lo), Ext::finite(Rational(1)), kWitnessWidth))
    candidates.push_back(std::move(iv));
  for (auto& iv : iso.isolate_open(Ext::finite(Rational(1)), Ext::pos_inf(), kWitnessWidth))
    candidates.push_back(std::move(iv));

  if (static_cast<int>(candidates.size()) != out.cover_root_count)
    throw ContradictionError("isolated root count disagrees with the Sturm count");
  for (auto& cand : candidates) {
    if (witness_inside_v(cand, zd)) {
      IsolatingInterval w = cand;
      w.refine_to(kWitnessWidth);
      out.witnesses.push_back(std::move(w));
    }
  }
  out.roots_in_v = static_cast<int>(out.witnesses.size());
  out.verdict = out.witnesses.empty() ? SlopeVerdict::NoRealSolutions
                                      : SlopeVerdict::RealSolutionFound;
  out.facts.push_back({"roots certified inside V: " + std::to_string(out.roots_in_v),
                       "interval refinement against the endpoint enclosures", true});
  return out;
}

SlopeCertificate positive_slope_witness(int n) {
  if (n < 1) throw DomainError("positive slope required");
  FillingPolynomial fp = filling_polynomial(n);
  SlopeCertificate out;
  out.n = n;
  out.value_at_one = fp.poly.eval(Rational(1));
  bool g1 = out.value_at_one == Rational(-4);
  out.facts.push_back({"G(1) = -4 exactly", "exact evaluation", g1});
  if (!g1) throw ContradictionError("G(1) must be -4");

  const IsolatingInterval& r5 = cached_b_root5();
  Rational left = r5.lo;
  Rational g_left = fp.poly.eval(left);
  bool sign_change = g_left.sign() > 0;
  out.facts.push_back({"G > 0 at the rational point " + left.str() + " left of B's fifth root",
                       "exact evaluation", sign_change});
  out.cover_e2_lo = left;
  out.cover_e1_hi = Rational(1);

  RootIsolator iso(fp.poly);
  if (sign_change) {
    // one sign change on (left, 1): bisect on signs, then certify count 1
    Rational lo = left, hi = Rational(1);
    int slo = iso.squarefree().sign_at(lo);
    if (slo == 0) {
      // left endpoint itself is a root (cannot happen for these G's); nudge
      lo = (lo + hi) / Rational(2);
      slo = iso.squarefree().sign_at(lo);
    }
    while (hi - lo > kWitnessWidth) {
      Rational mid = (lo + hi) / Rational(2);
      int sm = iso.squarefree().sign_at(mid);
      if (sm == 0) {
        lo = mid - kWitnessWidth / Rational(4);
        hi = mid + kWitnessWidth / Rational(4);
        break;
      }
      (sm == slo ? lo : hi) = mid;
    }
    int slo2 = iso.squarefree().sign_at(lo), shi2 = iso.squarefree().sign_at(hi);
    if (slo2 != 0 && shi2 != 0 && slo2 != shi2 &&
        iso.count_open(Ext::finite(lo), Ext::finite(hi)) == 1) {
      out.witnesses.push_back({lo, hi, iso.squarefree(), slo2});
      out.facts.push_back({"sign change certified a root in (" + lo.str() + ", " + hi.str() + ")",
                           "bisection plus Sturm count", true});
    }
  }
  if (out.witnesses.empty()) {
    // fallback: full Sturm count on (0, 1)
    auto roots = iso.isolate_open(Ext::finite(Rational(0)), Ext::finite(Rational(1)), kWitnessWidth);
    out.facts.push_back({"fallback Sturm count on (0,1): " + std::to_string(roots.size()),
                         "Sturm isolation", !roots.empty()});
    if (roots.empty())
      throw ContradictionError("no witness root in (0,1) for a positive slope");
    out.witnesses.push_back(roots.back());
  }
  out.roots_in_v = static_cast<int>(out.witnesses.size());
  out.verdict = SlopeVerdict::RealSolutionFound;
  return out;
}

ThresholdCertificate derive_threshold(int cross_check_span, const Rational& bound_tolerance) {
  ThresholdCertificate out;
  const ZDomainResult& zd = cached_z_domain();
  const IsolatingInterval& r5 = cached_b_root5();
  const UniPoly a = m137::apoly_factor_a();
  const UniPoly b = m137::apoly_factor_b();

  auto fact = [](std::vector<ProofStep>& v, std::string st, std::string me, bool ok) {
    v.push_back({std::move(st), std::move(me), ok});
    if (!v.back().ok) throw ContradictionError("threshold fact failed: " + v.back().statement);
  };

  // ---- case 1: z in [r5, 1): A < 0, B <= 0, z^{4n'-1} - 1 < 0, so F > 0
  // for every n' at once
  fact(out.case1_facts, "A has no roots in (" + r5.lo.str() + ", 1)", "Sturm count",
       count_real_roots(a, Ext::finite(r5.lo), Ext::finite(Rational(1))) == 0);
  fact(out.case1_facts, "A(9/10) < 0", "exact evaluation",
       a.sign_at(Rational(9, 10)) < 0);
  fact(out.case1_facts, "B has exactly one root in the r5 enclosure", "Sturm count",
       count_real_roots(b, Ext::finite(r5.lo), Ext::finite(r5.hi)) == 1);
  fact(out.case1_facts, "B has no roots in (" + r5.hi.str() + ", 1)", "Sturm count",
       count_real_roots(b, Ext::finite(r5.hi), Ext::finite(Rational(1))) == 0);
  fact(out.case1_facts, "B(9/10) < 0", "exact evaluation", b.sign_at(Rational(9, 10)) < 0);
  fact(out.case1_facts, "hence A < 0 and B <= 0 on [r5, 1), and z^{4n'-1} < 1 there,"
       " so F = A (z^{4n'-1} - 1) - B z^{2n'-4} > 0 for every n' >= 2",
       "sign bookkeeping from the facts above", true);

  // ---- case 2: rational cover [e2_lo, r5_hi] of [e2, r5]
  RatInterval cover(zd.endpoints[1].lo, r5.hi);
  out.case2_cover = cover;
  fact(out.case2_facts, "cover right end below 1", "rational comparison", cover.hi < Rational(1));
  // B stays positive up to r5: no roots strictly between the cover's left end
  // and r5's enclosure, and positive at 0
  fact(out.case2_facts, "B has no roots in (" + cover.lo.str() + ", " + r5.lo.str() + ")",
       "Sturm count",
       count_real_roots(b, Ext::finite(cover.lo), Ext::finite(r5.lo)) == 0);
  fact(out.case2_facts, "B(0) = 1 > 0", "exact evaluation", b.eval(Rational(0)) == Rational(1));

  out.bound_tolerance = bound_tolerance;
  BoundOptions bopts;
  bopts.tolerance = bound_tolerance;
  // round the certified bounds outward to dyadic rationals: c5 down, c6 up,
  // so both stay sound and the certificate stays compact
  const Rational dyadic(1 << 24);
  auto round_down = [&](const Rational& r) { return Rational((r * dyadic).floor(), dyadic.num()); };
  auto round_up = [&](const Rational& r) { return -Rational(((-r) * dyadic).floor(), dyadic.num()); };
  RatInterval a_range = bound_on_interval(a, cover, bopts);
  fact(out.case2_facts, "A is bounded away from zero on the cover", "interval bisection",
       a_range.hi < Rational(0));
  out.c5 = round_down(-a_range.hi);
  RatInterval b_range = bound_on_interval(b, cover, bopts);
  out.c6 = round_up(b_range.hi);
  fact(out.case2_facts, "c5 = " + out.c5.str() + " > 0", "interval bisection",
       out.c5 > Rational(0));
  fact(out.case2_facts, "c6 = " + out.c6.str() + " > 0", "interval bisection",
       out.c6 > Rational(0));
  out.q = std::max(cover.lo.abs(), cover.hi.abs());
  fact(out.case2_facts, "q = " + out.q.str() + " < 1", "rational comparison",
       out.q < Rational(1));
  fact(out.case2_facts,
       "exponent 2n'-4 is even and nonnegative for n' >= 2, so z^{2n'-4} is in [0, q^{2n'-4}]"
       " on the cover",
       "parity of the exponent", (2 * 2 - 4) % 2 == 0);

  // ---- N0: least n' >= 2 with c5 (1 - q^{4n'-1}) > c6 q^{2n'-4}
  auto psi = [&](int np) {
    return out.c5 * (Rational(1) - out.q.pow(4 * np - 1)) - out.c6 * out.q.pow(2 * np - 4);
  };
  int n0 = -1;
  for (int np = 2; np <= 500; ++np) {
    if (psi(np).sign() > 0) {
      n0 = np;
      break;
    }
  }
  if (n0 < 0) throw ContradictionError("no threshold below the search cap");
  out.n0 = n0;
  out.inequality_trace.push_back(
      {"c5 (1 - q^{4n'-1}) - c6 q^{2n'-4} = " + psi(n0).str() + " > 0 at n' = " +
           std::to_string(n0),
       "exact rational arithmetic", psi(n0).sign() > 0});
  if (n0 > 2)
    out.inequality_trace.push_back(
        {"the inequality fails at n' = " + std::to_string(n0 - 1) + " (value " +
             psi(n0 - 1).str() + "), so N0 is minimal for these constants",
         "exact rational arithmetic", psi(n0 - 1).sign() <= 0});
  // monotonicity: psi(n'+1) - psi(n') = c5 q^{4n'-1}(1 - q^4) + c6 q^{2n'-4}(1 - q^2),
  // positive since 0 < q < 1; verified exactly at n' = N0
  Rational delta = psi(n0 + 1) - psi(n0);
  Rational closed = out.c5 * out.q.pow(4 * n0 - 1) * (Rational(1) - out.q.pow(4)) +
                    out.c6 * out.q.pow(2 * n0 - 4) * (Rational(1) - out.q.pow(2));
  out.inequality_trace.push_back(
      {"psi(n'+1) - psi(n') = c5 q^{4n'-1}(1-q^4) + c6 q^{2n'-4}(1-q^2), instantiated at N0",
       "exact rational arithmetic", delta == closed && delta.sign() > 0});
  out.inequality_trace.push_back(
      {"both monotonicity summands are positive for every n' since 0 < q < 1 and c5, c6 > 0",
       "sign bookkeeping", out.q > Rational(0) && out.q < Rational(1)});
  for (const auto& step : out.inequality_trace)
    if (!step.ok) throw ContradictionError("inequality trace failed: " + step.statement);

  // ---- cross-check against the Sturm certificates
  for (int np = n0; np <= n0 + cross_check_span; ++np) {
    SlopeCertificate c = certify_slope(-np);
    if (c.verdict != SlopeVerdict::NoRealSolutions)
      throw ContradictionError("cross-check found a real solution at n' = " + std::to_string(np));
    out.cross_checked.push_back(np);
  }
  out.ok = true;
  return out;
}

std::vector<SlopeCertificate> scan_slopes(int from, int to, int jobs) {
  if (from > to) throw DomainError("empty scan range");
  cached_z_domain();  // initialize shared caches before spawning workers
  cached_b_root5();
  std::vector<int> slopes;
  for (int n = from; n <= to; ++n)
    if (n != 0) slopes.push_back(n);
  std::vector<SlopeCertificate> out(slopes.size());
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < slopes.size(); ++i) out[i] = certify_slope(slopes[i]);
    return out;
  }
  std::vector<std::thread> workers;
  std::atomic<std::size_t> next{0};
  for (int j = 0; j < jobs; ++j)
    workers.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= slopes.size()) return;
        out[i] = certify_slope(slopes[i]);
      }
    });
  for (auto& w : workers) w.join();
  return out;
}

AlexanderPoly alexander_from_unipoly(const UniPoly& p) {
  AlexanderPoly out;
  for (const auto& c : p.coeffs()) {
    if (!c.is_integer()) throw DomainError("Alexander polynomial needs integer coefficients");
    out.coefficients.push_back(c.num());
  }
  return out;
}

bool alexander_coefficient_check(const AlexanderPoly& p) {
  if (p.coefficients.empty()) throw DomainError("empty Alexander polynomial");
  if (p.coefficients.back() == 0) throw DomainError("leading coefficient must be nonzero");
  for (const auto& c : p.coefficients)
    if (c != 0 && c != 1 && c != -1) return false;
  return true;
}

}  // namespace holonomy
