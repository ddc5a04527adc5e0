#ifndef HOLONOMY_CERTIFICATE_HPP
#define HOLONOMY_CERTIFICATE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "holonomy/domains.hpp"
#include "holonomy/filling.hpp"
#include "holonomy/variety.hpp"

namespace holonomy {

using Json = nlohmann::json;

// Machine-checkable record of one verification run. Every rational value is
// serialized as an exact "num/den" string; re-running the named operation
// with the stored inputs reproduces the facts bit-exactly.
struct Certificate {
  std::string kind;
  Json inputs = Json::object();
  Json facts = Json::array();
  std::string verdict;
  int deterministic_seed = 0;

  void add_fact(const std::string& statement, const std::string& method, bool ok,
                Json exact_values = Json::object());
  void add_steps(const std::vector<ProofStep>& steps);
  Json to_json() const;
};

Json json_interval(const IsolatingInterval& iv);
Json json_domain(const DomainSet& d);

Certificate make_curve_certificate(const CurveDerivation& d);
Certificate make_irreducibility_certificate(const IrreducibilityCertificate& c);
Certificate make_domains_certificate(const SDomainResult& sd, const ZDomainResult& zd);
Certificate make_classification_certificate(const CharacterPoint& pt, PointClass cls);
Certificate make_slope_certificate(const SlopeCertificate& c);
Certificate make_witness_certificate(const SlopeCertificate& c);
Certificate make_threshold_certificate(const ThresholdCertificate& c, int span);
Certificate make_scan_certificate(int from, int to, const std::vector<SlopeCertificate>& cs);
Certificate make_apoly_certificate(const APolyValidation& v);
Certificate make_alexander_certificate(const std::string& poly_text, const AlexanderPoly& poly,
                                       bool verdict);

// Recomputes the certificate from its stored inputs and compares the facts
// and verdict bit-exactly.
bool reverify_certificate(const Json& cert);

// Stable tabular summary of slope certificates.
std::string render_slope_table(const std::vector<SlopeCertificate>& cs);
// CSV summary: n, verdict, root_count, witness_lo, witness_hi.
std::string render_slope_csv(const std::vector<SlopeCertificate>& cs);

}  // namespace holonomy

#endif
