#pragma once

#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ditkin/approx_identity.hpp"
#include "ditkin/classifier.hpp"
#include "ditkin/element.hpp"
#include "ditkin/weights.hpp"

// JSON interchange. Rationals are strings "p/q" or integer strings; parse
// errors throw Error(kParseError) naming the offending JSON path.
namespace ditkin::json {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Rational rational_from_json(const Json& j, const std::string& path = "$");

/// {"family": "constant"|"linear"|"interleave"|"prefix", ...}
Json to_json(const WeightFamily& w);
WeightFamily weights_from_json(const Json& j, const std::string& path = "$");

/// {"kind": "eventually_constant", "prefix": [...], "tail": "0"} | {"kind": "dyadic_decay"}
Json to_json(const Element& f);
Element element_from_json(const Json& j, const std::string& path = "$");

/// {"exact": "p/q"} | {"lo": "p/q", "hi": "p/q", "horizon": H}
Json to_json(const NormResult& r);

/// "inf" or a positive integer.
Json to_json(const Point& p);
Point point_from_json(const Json& j, const std::string& path = "$");

/// {"points": [...], "infinity": bool}
Json to_json(const ClosedSet& set);
ClosedSet closed_set_from_json(const Json& j, const std::string& path = "$");

Json to_json(const TailInf& t);
Json to_json(const WeightClassification& c);
Json to_json(const AiSelection& s);
Json to_json(const DiagnosticRow& row);
Json to_json(const RelativeUnitWitness& w);
/// Includes a "citations" map from field name to the result the value rests on.
Json to_json(const PropertyReport& report);

/// Columns: n_k, residual_lo, residual_hi, alpha_next, alpha_self.
std::string diagnostics_csv(std::span<const DiagnosticRow> rows);

Json parse(std::string_view text);

}  // namespace ditkin::json
