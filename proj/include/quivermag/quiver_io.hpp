#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "quivermag/quiver.hpp"

namespace quivermag {

// Text format:
//
//   quiver {
//     vertices: 1 2 3;
//     arrows: a: 1 -> 2; b: 2 -> 3;
//     relations: b*a;
//   }
//
// Whitespace is insignificant and '#' starts a line comment. Relations are
// written in composition order: b*a traverses a first. Sections may repeat;
// their contents accumulate. Throws QuiverError with a 1-based line/column.
BoundQuiver parse_quiver(std::string_view text);

enum class QuiverFormat { text, json };

std::string serialize_quiver(const BoundQuiver& bq, QuiverFormat format);

// {"vertices": [id], "arrows": [{"label", "source", "target"}],
//  "relations": [[label, ...]]} with each relation in traversal order.
nlohmann::ordered_json quiver_to_json(const BoundQuiver& bq);
BoundQuiver quiver_from_json(const nlohmann::json& doc);

// Dispatches on the first non-blank character: '{' means JSON.
BoundQuiver load_quiver(std::string_view content);

}  // namespace quivermag
