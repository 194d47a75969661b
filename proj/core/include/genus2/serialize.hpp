#pragma once

#include "genus2/rfmatrix.hpp"

#include <nlohmann/json.hpp>

namespace genus2 {

using Json = nlohmann::json;

// {"vars": [...], "weights": [...]?, "terms": [{"exp": [...], "num": "..", "den": ".."}]}
Json to_json(const MPoly& p);
Json to_json(const RatFunc& f);
Json to_json(const RFMatrix& m);
Json to_json(const VarTable& t);

MPoly mpoly_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
RFMatrix rfmatrix_from_json(const Json& j);
VarTablePtr table_from_json(const Json& j);

// Stable text form: serialize(parse(text)) reproduces text byte for byte.
std::string canonical_dump(const Json& j);

}  // namespace genus2
