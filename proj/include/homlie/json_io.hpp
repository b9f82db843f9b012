#pragma once

// JSON forms of the library objects. Scalars are canonical strings, matrices
// nested arrays of them; nlohmann::json keeps keys sorted, so output for equal
// values is byte-identical.

#include <json.hpp>

#include "homlie/algebra.hpp"
#include "homlie/report.hpp"
#include "homlie/sl2.hpp"
#include "homlie/weights.hpp"

namespace homlie {

using Json = nlohmann::json;

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);
Json to_json(const Check& c);
Json to_json(const VerificationReport& r);
Json to_json(const StructureConstants& c);
Json to_json(const WeightSpace& w);
Json to_json(const WindowedModule& m);
Json to_json(const GeneralAnsatz& a);

/// Throws ParseError on malformed input.
Scalar scalar_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);

}  // namespace homlie
