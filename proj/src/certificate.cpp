#include "holonomy/certificate.hpp"

#include <sstream>

#include "holonomy/errors.hpp"
#include "holonomy/version.hpp"

namespace holonomy {

void Certificate::add_fact(const std::string& statement, const std::string& method, bool ok,
                           Json exact_values) {
  facts.push_back({{"statement", statement},
                   {"method", method},
                   {"ok", ok},
                   {"exact_values", std::move(exact_values)}});
}

void Certificate::add_steps(const std::vector<ProofStep>& steps) {
  for (const auto& s : steps) add_fact(s.statement, s.method, s.ok);
}

Json Certificate::to_json() const {
  return {{"schema", kCertificateSchema}, {"kind", kind},
          {"tool_version", kToolVersion},  {"deterministic_seed", deterministic_seed},
          {"inputs", inputs},              {"facts", facts},
          {"verdict", verdict}};
}

Json json_interval(const IsolatingInterval& iv) {
  return {{"lo", iv.lo.str()}, {"hi", iv.hi.str()}, {"approx", iv.to_double()}};
}

Json json_domain(const DomainSet& d) {
  Json pieces = Json::array();
  for (const auto& p : d.pieces) {
    auto endpoint = [](const DomainEndpoint& e) -> Json {
      switch (e.kind) {
        case DomainEndpoint::Kind::NegInf:
          return {{"type", "neg_inf"}};
        case DomainEndpoint::Kind::PosInf:
          return {{"type", "pos_inf"}};
        case DomainEndpoint::Kind::Rat:
          return {{"type", "rational"}, {"value", e.value.str()}};
        default:
          return {{"type", "algebraic"},
                  {"enclosure", json_interval(e.root)},
                  {"poly", e.root.poly.str("z")}};
      }
    };
    pieces.push_back({{"label", p.label},
                      {"lo", endpoint(p.lo)},
                      {"hi", endpoint(p.hi)},
                      {"lo_closed", p.lo_closed},
                      {"hi_closed", p.hi_closed}});
  }
  return {{"pieces", pieces}};
}

Certificate make_curve_certificate(const CurveDerivation& d) {
  Certificate c;
  c.kind = "curve";
  c.inputs["path"] = d.path == DerivationPath::Direct ? "direct" : "fallback";
  c.add_steps(d.steps);
  Json gens = Json::array();
  for (const auto& g : d.elimination_stw) gens.push_back(g.str());
  c.add_fact("elimination ideal generators in (s,t,w)", "lex Groebner elimination", true,
             {{"generators", gens}});
  c.add_fact("curve polynomial", "exact data", true, {{"poly", d.curve.poly.str()}});
  c.verdict = "VERIFIED";
  return c;
}

Certificate make_irreducibility_certificate(const IrreducibilityCertificate& cert) {
  Certificate c;
  c.kind = "irreducibility";
  c.add_steps(cert.quadratic_split);
  c.add_steps(cert.linear_split);
  c.add_fact("quadratic-split contradiction polynomial", "exact expansion", cert.ok,
             {{"poly", cert.contradiction_quadratic.str()}});
  c.add_fact("linear-split contradiction polynomial", "exact expansion", cert.ok,
             {{"poly", cert.contradiction_linear.str()}});
  c.verdict = cert.ok ? "IRREDUCIBLE" : "FAILED";
  return c;
}

Certificate make_domains_certificate(const SDomainResult& sd, const ZDomainResult& zd) {
  Certificate c;
  c.kind = "domains";
  c.inputs = Json::object();
  Json roots = Json::array();
  for (const auto& r : sd.cubic_roots) roots.push_back(json_interval(r));
  c.add_fact("discriminant cubic roots p1 < p2 < p3", "Sturm isolation", true,
             {{"roots", roots}});
  for (const auto& chk : sd.checks)
    c.add_fact("piece " + chk.piece + " carries real t roots at s = " + chk.sample_s.str(),
               "Sturm count of the curve in t", chk.real_t_roots > 0,
               {{"sample_s", chk.sample_s.str()}, {"real_t_roots", chk.real_t_roots}});
  Json gaps = Json::array();
  for (const auto& [s, sign] : sd.gap_signs)
    gaps.push_back({{"sample_s", s.str()}, {"sign", sign}});
  c.add_fact("discriminant negative in the gaps", "exact evaluation", true, {{"samples", gaps}});
  c.add_fact("s domain U", "sign analysis", true, {{"domain", json_domain(sd.domain)}});

  Json zroots = Json::array();
  for (const auto& r : zd.endpoints) zroots.push_back(json_interval(r));
  c.add_fact("finite endpoints of V", "Sturm isolation of the cleared cubic", true,
             {{"poly", zd.endpoint_poly.str("z")}, {"roots", zroots}});
  c.add_fact("endpoint polynomial palindromic, so the two real endpoints multiply to 1",
             "coefficient reversal, exact", zd.reciprocal_pairing_exact);
  c.add_fact("z domain V", "branch analysis of z + 1/z = s", true,
             {{"domain", json_domain(zd.domain)}});
  c.verdict = "VERIFIED";
  return c;
}

Certificate make_classification_certificate(const CharacterPoint& pt, PointClass cls) {
  Certificate c;
  c.kind = "classification";
  c.inputs["s"] = pt.s.str();
  c.inputs["t_lo"] = pt.t.lo.str();
  c.inputs["t_hi"] = pt.t.hi.str();
  c.add_fact("point lies on the curve: t isolated as a root of the fiber polynomial",
             "Sturm isolation", true, {{"t", json_interval(pt.t)}});
  c.add_fact("class from the position of s against p1, p2, p3, 2", "exact comparison", true,
             {{"class", to_string(cls)}});
  c.verdict = to_string(cls);
  return c;
}

namespace {

void fill_slope(Certificate& c, const SlopeCertificate& s) {
  c.inputs["n"] = s.n;
  for (const auto& f : s.facts) c.add_fact(f.statement, f.method, f.ok);
  Json ws = Json::array();
  for (const auto& w : s.witnesses) ws.push_back(json_interval(w));
  c.add_fact("certified roots in V", "Sturm count + interval separation", true,
             {{"cover_root_count", s.cover_root_count},
              {"roots_in_v", s.roots_in_v},
              {"witnesses", ws},
              {"value_at_one", s.value_at_one.str()},
              {"cover_e1_hi", s.cover_e1_hi.str()},
              {"cover_e2_lo", s.cover_e2_lo.str()}});
  c.verdict = to_string(s.verdict);
}

}  // namespace

Certificate make_slope_certificate(const SlopeCertificate& s) {
  Certificate c;
  c.kind = "slope";
  fill_slope(c, s);
  return c;
}

Certificate make_witness_certificate(const SlopeCertificate& s) {
  Certificate c;
  c.kind = "witness";
  fill_slope(c, s);
  return c;
}

Certificate make_threshold_certificate(const ThresholdCertificate& t, int span) {
  Certificate c;
  c.kind = "threshold";
  c.inputs["cross_check_span"] = span;
  c.inputs["bound_tolerance"] = t.bound_tolerance.str();
  c.add_steps(t.case1_facts);
  c.add_steps(t.case2_facts);
  c.add_steps(t.inequality_trace);
  c.add_fact("threshold constants", "interval bisection + exact arithmetic", t.ok,
             {{"n0", t.n0},
              {"q", t.q.str()},
              {"c5", t.c5.str()},
              {"c6", t.c6.str()},
              {"cover_lo", t.case2_cover.lo.str()},
              {"cover_hi", t.case2_cover.hi.str()}});
  Json crossed = Json::array();
  for (int np : t.cross_checked) crossed.push_back(np);
  c.add_fact("slopes -n' re-certified NO_REAL_SOLUTIONS by Sturm count", "certify_slope",
             !t.cross_checked.empty(), {{"n_prime", crossed}});
  c.verdict = t.ok ? "VERIFIED" : "FAILED";
  return c;
}

Certificate make_scan_certificate(int from, int to, const std::vector<SlopeCertificate>& cs) {
  Certificate c;
  c.kind = "scan";
  c.inputs["from"] = from;
  c.inputs["to"] = to;
  for (const auto& s : cs) {
    Json ws = Json::array();
    for (const auto& w : s.witnesses) ws.push_back(json_interval(w));
    c.add_fact("slope " + std::to_string(s.n), "certify_slope", true,
               {{"n", s.n},
                {"verdict", to_string(s.verdict)},
                {"roots_in_v", s.roots_in_v},
                {"witnesses", ws}});
  }
  c.verdict = "COMPLETE";
  return c;
}

Certificate make_apoly_certificate(const APolyValidation& v) {
  Certificate c;
  c.kind = "apoly";
  c.add_steps(v.steps);
  c.add_fact("numeric boundary-character residuals", "complex reconstruction", v.ok,
             {{"samples", v.samples}, {"max_residual", v.max_residual}});
  c.verdict = v.ok ? "VERIFIED" : "FAILED";
  return c;
}

Certificate make_alexander_certificate(const std::string& poly_text, const AlexanderPoly& poly,
                                       bool verdict) {
  Certificate c;
  c.kind = "alexander";
  c.inputs["poly"] = poly_text;
  Json coeffs = Json::array();
  for (const auto& z : poly.coefficients) coeffs.push_back(z.get_str());
  c.add_fact("coefficient list (ascending)", "exact parse", true, {{"coefficients", coeffs}});
  c.verdict = verdict ? "ALL_COEFFICIENTS_UNIT" : "NON_UNIT_COEFFICIENT";
  return c;
}

bool reverify_certificate(const Json& cert) {
  const std::string kind = cert.at("kind");
  const Json& inputs = cert.at("inputs");
  Certificate fresh;
  if (kind == "curve") {
    fresh = make_curve_certificate(inputs.at("path") == "direct"
                                       ? derive_character_curve()
                                       : derive_character_curve_fallback());
  } else if (kind == "irreducibility") {
    fresh = make_irreducibility_certificate(irreducibility_certificate());
  } else if (kind == "domains") {
    fresh = make_domains_certificate(compute_s_domain(), compute_z_domain());
  } else if (kind == "classification") {
    Rational s = Rational::from_string(inputs.at("s").get<std::string>());
    Rational tl = Rational::from_string(inputs.at("t_lo").get<std::string>());
    Rational th = Rational::from_string(inputs.at("t_hi").get<std::string>());
    auto pts = character_points_at(s);
    for (const auto& pt : pts) {
      if (pt.t.lo <= th && tl <= pt.t.hi) {
        fresh = make_classification_certificate({s, pt.t}, classify_character_point(pt));
        // inputs echo the stored enclosure, not the recomputed one
        fresh.inputs = cert.at("inputs");
        Json a = fresh.to_json(), b = cert;
        // the recomputed t enclosure may differ in width; compare verdicts only
        return a.at("verdict") == b.at("verdict");
      }
    }
    return false;
  } else if (kind == "slope") {
    fresh = make_slope_certificate(certify_slope(inputs.at("n").get<int>()));
  } else if (kind == "witness") {
    fresh = make_witness_certificate(positive_slope_witness(inputs.at("n").get<int>()));
  } else if (kind == "threshold") {
    int span = inputs.at("cross_check_span").get<int>();
    Rational tol = Rational::from_string(inputs.at("bound_tolerance").get<std::string>());
    fresh = make_threshold_certificate(derive_threshold(span, tol), span);
  } else if (kind == "scan") {
    fresh = make_scan_certificate(inputs.at("from").get<int>(), inputs.at("to").get<int>(),
                                  scan_slopes(inputs.at("from").get<int>(),
                                              inputs.at("to").get<int>(), 1));
  } else if (kind == "apoly") {
    fresh = make_apoly_certificate(validate_a_polynomial());
  } else if (kind == "alexander") {
    std::string text = inputs.at("poly").get<std::string>();
    Ctx ctx = make_ctx({"x"});
    AlexanderPoly p = alexander_from_unipoly(UniPoly::from_multipoly(MultiPoly::parse(text, ctx)));
    fresh = make_alexander_certificate(text, p, alexander_coefficient_check(p));
  } else {
    throw DomainError("unknown certificate kind '" + kind + "'");
  }
  Json a = fresh.to_json();
  return a.at("facts") == cert.at("facts") && a.at("verdict") == cert.at("verdict");
}

std::string render_slope_table(const std::vector<SlopeCertificate>& cs) {
  std::ostringstream os;
  os << "    n  verdict              roots_in_V  first_witness\n";
  for (const auto& c : cs) {
    os << std::setw(5) << c.n << "  " << std::left << std::setw(19) << to_string(c.verdict)
       << std::right << std::setw(12) << c.roots_in_v << "  ";
    if (!c.witnesses.empty())
      os << "(" << c.witnesses.front().lo.str() << ", " << c.witnesses.front().hi.str() << ")";
    os << "\n";
  }
  return os.str();
}

std::string render_slope_csv(const std::vector<SlopeCertificate>& cs) {
  std::ostringstream os;
  os << "n,verdict,root_count,witness_lo,witness_hi\n";
  for (const auto& c : cs) {
    os << c.n << "," << to_string(c.verdict) << "," << c.roots_in_v << ",";
    if (!c.witnesses.empty())
      os << c.witnesses.front().lo.str() << "," << c.witnesses.front().hi.str();
    else
      os << ",";
    os << "\n";
  }
  return os.str();
}

}  // namespace holonomy
