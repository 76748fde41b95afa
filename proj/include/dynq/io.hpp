#pragma once

// Canonical JSON renderings of the domain objects.  All output is
// deterministic: ordered keys, canonical term order, decimal-string
// coefficients.

#include <json.hpp>

#include "dynq/cluster.hpp"
#include "dynq/grassmann.hpp"
#include "dynq/oracle.hpp"

namespace dynq {

using Json = nlohmann::ordered_json;

Json vector_json(const DimVector& v);
Json matrix_json(const IntMatrix& m);  // row-major array of arrays
Json poly_json(const MultiPoly& p);    // [{"exp":[...],"coef":"..."}]
Json qpoly_json(const QPoly& p);       // [{"exp":2,"coef":"..."}]
MultiPoly poly_from_json(const Json& j, int nvars);

Json quiver_json(const Quiver& q);
Json ar_json(const ARQuiver& ar);
Json homext_json(const HomTable& t);
std::string homext_csv(const HomTable& t);
Json module_expr_json(const ARQuiver& ar, const ModuleExpr& m);
Json exchange_report_json(const ExchangeReport& r);

}  // namespace dynq
