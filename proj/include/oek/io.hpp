#ifndef OEK_IO_HPP
#define OEK_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "oek/bounds.hpp"
#include "oek/structure_table.hpp"
#include "oek/zerosearch.hpp"

namespace oek {

using Json = nlohmann::json;

// Octonions serialize as [x0, ..., x7].
Json octonion_to_json(const OctonionD& o);
OctonionD octonion_from_json(const Json& j, const std::string& where = "octonion");

// Polynomial documents: {"coeffs": [[8 reals], ...]} in ascending degree, or
// the shorthand {"real_coeffs": [r0, ..., rn]}. Errors name the line/column
// (syntax) or the field (schema).
OctPolynomial polynomial_from_json(const Json& doc);
OctPolynomial parse_polynomial(std::string_view text);
Json polynomial_to_json(const OctPolynomial& p);

// {"flavor": "...", "triples": [[i, j, k], ...]}
Json table_to_json(const StructureTable& table);
StructureTable table_from_json(const Json& j);

Json parameters_to_json(const BoundParameters& params);
Json to_json(const BoundResult& result);
Json to_json(const HypothesisReport& report);
Json to_json(const ZeroCertificate& cert);
Json to_json(const VerificationVerdict& verdict);
Json to_json(const ValidationReport& report);

BoundResult bound_result_from_json(const Json& j);

}  // namespace oek

#endif  // OEK_IO_HPP
