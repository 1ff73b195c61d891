#pragma once

#include "fpsl/alpha.hpp"
#include "fpsl/report.hpp"
#include "fpsl/series.hpp"

#include <json.hpp>

namespace fpsl::io {

// Keys keep insertion order so emitted documents match the documented layout.
using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const SPoly& p);      // {"s_poly": [...]}
Json to_json(const AlphaPoly& p);  // {"alpha_poly": [...]}
Json to_json(const RSeries& f);
Json to_json(const SSeries& f);
Json to_json(const AlphaExpr& a);
Json to_json(const Report& r);

Rat rat_from_json(const Json& j);
SPoly spoly_from_json(const Json& j);
AlphaPoly alpha_poly_from_json(const Json& j);
RSeries series_from_json(const Json& j);
SSeries sseries_from_json(const Json& j);
AlphaExpr alpha_expr_from_json(const Json& j);

// Parses one document and re-emits it in canonical form.
std::string canonical(const std::string& text);

std::string dump(const Json& j);

} // namespace fpsl::io
