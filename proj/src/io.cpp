#include "oek/io.hpp"

#include <cmath>

#include "oek/errors.hpp"

namespace oek {

namespace {

double number_at(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + ": number is not finite");
  return v;
}

Json vector_to_json(const Eigen::Matrix<double, 8, 1>& v) {
  Json a = Json::array();
  for (int k = 0; k < 8; ++k) a.push_back(v[k]);
  return a;
}

}  // namespace

Json octonion_to_json(const OctonionD& o) { return vector_to_json(o.coeffs()); }

OctonionD octonion_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 8)
    throw ParseError(where + ": expected an array of 8 numbers");
  Eigen::Matrix<double, 8, 1> x;
  for (int k = 0; k < 8; ++k) x[k] = number_at(j[k], where + "[" + std::to_string(k) + "]");
  return OctonionD(x);
}

OctPolynomial polynomial_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  const bool has_coeffs = doc.contains("coeffs");
  const bool has_real = doc.contains("real_coeffs");
  if (has_coeffs == has_real)
    throw ParseError("document: expected exactly one of \"coeffs\" or \"real_coeffs\"");
  std::vector<OctonionD> c;
  if (has_coeffs) {
    const Json& arr = doc["coeffs"];
    if (!arr.is_array() || arr.empty()) throw ParseError("coeffs: expected a nonempty array");
    for (std::size_t k = 0; k < arr.size(); ++k)
      c.push_back(octonion_from_json(arr[k], "coeffs[" + std::to_string(k) + "]"));
  } else {
    const Json& arr = doc["real_coeffs"];
    if (!arr.is_array() || arr.empty())
      throw ParseError("real_coeffs: expected a nonempty array");
    for (std::size_t k = 0; k < arr.size(); ++k)
      c.emplace_back(number_at(arr[k], "real_coeffs[" + std::to_string(k) + "]"));
  }
  return OctPolynomial(std::move(c));
}

OctPolynomial parse_polynomial(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  return polynomial_from_json(doc);
}

Json polynomial_to_json(const OctPolynomial& p) {
  Json arr = Json::array();
  for (const auto& a : p.coeffs()) arr.push_back(octonion_to_json(a));
  return Json{{"coeffs", arr}};
}

Json table_to_json(const StructureTable& table) {
  Json triples = Json::array();
  for (const auto& t : table.triples()) triples.push_back({t.i, t.j, t.k});
  return Json{{"flavor", to_string(table.flavor())}, {"triples", triples}};
}

StructureTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("triples") || !j["triples"].is_array())
    throw ParseError("table: expected {\"triples\": [[i, j, k], ...]}");
  std::vector<SignedTriple> triples;
  for (std::size_t n = 0; n < j["triples"].size(); ++n) {
    const Json& t = j["triples"][n];
    const std::string where = "triples[" + std::to_string(n) + "]";
    if (!t.is_array() || t.size() != 3) throw ParseError(where + ": expected 3 integers");
    for (const Json& v : t)
      if (!v.is_number_integer()) throw ParseError(where + ": expected 3 integers");
    triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  TableFlavor flavor = TableFlavor::custom;
  if (j.contains("flavor") && j["flavor"].is_string()) {
    const std::string f = j["flavor"].get<std::string>();
    if (f == "paper") flavor = TableFlavor::paper_printed;
    if (f == "corrected") flavor = TableFlavor::corrected;
  }
  return StructureTable(std::move(triples), flavor);
}

Json parameters_to_json(const BoundParameters& params) {
  Json j{{"a", params.scale},
         {"alpha", params.alpha},
         {"beta_sign", params.beta_sign},
         {"gap_indices", params.gap_indices}};
  if (params.unscaled_radius) j["unscaled_radius"] = *params.unscaled_radius;
  if (params.trinomial_root) j["K1"] = *params.trinomial_root;
  return j;
}

Json to_json(const BoundResult& result) {
  return Json{{"theorem", to_string(result.theorem)},
              {"kind", to_string(result.kind)},
              {"radius", result.radius},
              {"parameters", parameters_to_json(result.parameters)}};
}

BoundResult bound_result_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("bound: expected an object");
  BoundResult r{TheoremId::moduli, BoundKind::inclusion, 0.0, {}};
  if (j.contains("theorem")) {
    if (!j["theorem"].is_string()) throw ParseError("bound.theorem: expected a string");
    auto id = theorem_from_string(j["theorem"].get<std::string>());
    if (!id) throw ParseError("bound.theorem: unknown theorem id");
    r.theorem = *id;
  }
  if (j.contains("kind")) {
    const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    if (kind == "inclusion")
      r.kind = BoundKind::inclusion;
    else if (kind == "exclusion")
      r.kind = BoundKind::exclusion;
    else
      throw ParseError("bound.kind: expected \"inclusion\" or \"exclusion\"");
  }
  if (!j.contains("radius")) throw ParseError("bound.radius: missing");
  r.radius = number_at(j["radius"], "bound.radius");
  if (!(r.radius > 0)) throw ParseError("bound.radius: must be positive");
  return r;
}

Json to_json(const HypothesisReport& report) {
  Json arr = Json::array();
  for (const auto& e : report.entries) {
    Json j{{"theorem", to_string(e.theorem)},
           {"applies", e.applies},
           {"parameters", parameters_to_json(e.parameters)}};
    j["failure_reason"] = e.failure_reason;
    arr.push_back(j);
  }
  return arr;
}

Json to_json(const ZeroCertificate& cert) {
  return Json{{"point", octonion_to_json(cert.point)},
              {"residual", cert.residual},
              {"modulus", cert.modulus},
              {"origin", to_string(cert.origin)},
              {"certified", cert.certified},
              {"start", octonion_to_json(cert.start)},
              {"start_index", cert.start_index},
              {"iterations", cert.iterations}};
}

Json to_json(const VerificationVerdict& verdict) {
  Json certs = Json::array();
  for (const auto& c : verdict.certificates) certs.push_back(to_json(c));
  Json j{{"status", to_string(verdict.status)},
         {"bound", to_json(verdict.bound)},
         {"starts", verdict.starts_run},
         {"accepted", verdict.accepted},
         {"rejected", verdict.rejected},
         {"distinct_certificates", certs}};
  j["offending"] = verdict.offending ? to_json(*verdict.offending) : Json(nullptr);
  j["min_modulus"] = verdict.min_modulus ? Json(*verdict.min_modulus) : Json(nullptr);
  j["max_modulus"] = verdict.max_modulus ? Json(*verdict.max_modulus) : Json(nullptr);
  return j;
}

Json to_json(const ValidationReport& report) {
  Json j{{"passed", report.passed},
         {"structural_ok", report.structural_ok},
         {"structural_issue", report.structural_issue},
         {"trials", report.trials},
         {"max_composition_error", report.max_composition_error},
         {"max_alternative_error", report.max_alternative_error},
         {"max_associativity_error", report.max_associativity_error},
         {"nonassociative_witness_found", report.nonassociative_witness_found},
         {"failures", report.failures}};
  if (report.witness) {
    const auto& w = *report.witness;
    j["witness"] = Json{{"a", vector_to_json(w.a)},
                        {"b", vector_to_json(w.b)},
                        {"product", vector_to_json(w.product)},
                        {"product_norm", w.product_norm},
                        {"norm_product", w.norm_product},
                        {"description", w.description}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace oek
