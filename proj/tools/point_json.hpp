#pragma once

#include "json.hpp"

#include <string>

namespace opcalc::cli {

using Json = nlohmann::ordered_json;

/// A W point is `{"label": "<base text>", "t": "p/q", "children": [...]}`, a leaf `{"leaf": k}`.
/// A B point carries `"h"` instead of `"t"` and its label is itself a W point object.
Json point_text_to_json(const std::string& text, bool b_point);
std::string point_json_to_text(const Json& j, bool b_point);

/// True if the argument looks like JSON rather than the tree grammar.
bool looks_like_json(const std::string& s);

}  // namespace opcalc::cli
