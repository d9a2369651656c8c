#pragma once

#include "hyp321/expr.hpp"

#include <json.hpp>

namespace hyp321 {

using Json = nlohmann::json;

// {"a": "1", "const": "1/2"}, the leaf form inside expression arrays
Json lin_to_flat_json(const LinExpr& l);
LinExpr lin_from_flat_json(const Json& j);

// {"coeffs": {"a": "1"}, "const": "1/2"}, the form used for parameters
Json lin_to_json(const LinExpr& l);
LinExpr lin_from_json(const Json& j);

Json expr_to_json(const Expr& e);
Expr expr_from_json(const Json& j);

}  // namespace hyp321
