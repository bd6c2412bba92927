#pragma once

#include <json.hpp>

#include "quivermag/euler_magnitude.hpp"
#include "quivermag/path_algebra.hpp"
#include "quivermag/resolutions.hpp"

namespace quivermag {

// Rationals serialize as "p" / "p/q" strings so no precision is lost.
nlohmann::ordered_json to_json(const Rational& q);
nlohmann::ordered_json to_json(const Matrix& m);
nlohmann::ordered_json to_json(const MagnitudeResult& result);
// ext[n][i][j] as nested integer arrays, plus global dimension (null when
// unresolved) and the degree bound.
nlohmann::ordered_json to_json(const ExtTable& ext);
nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace quivermag
