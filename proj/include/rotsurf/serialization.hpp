#pragma once

#include <string>

#include "json.hpp"
#include "rotsurf/classifier.hpp"
#include "rotsurf/profile_curves.hpp"
#include "rotsurf/rotational_surfaces.hpp"
#include "rotsurf/theorem_checks.hpp"

namespace rotsurf {

// JSON family tokens <-> enum.
std::string family_token(CurveFamily family);
CurveFamily family_from_token(const std::string& token);

std::string kind_token(SurfaceKind kind);
SurfaceKind kind_from_token(const std::string& token);

// Parsing throws InvalidInputError with a path-qualified message. Curve
// objects: {"family": ..., "params": {...}, "s_domain": [lo, hi]} plus
// "kind" and "samples" ([[s, x1, x2, x3, x4], ...]) for custom curves.
// Surface objects: {"kind": ..., "curve": {...}, "t_domain": [lo, hi]}.
// Both run validate() before returning.
CurveSpec curve_spec_from_json(const nlohmann::json& j);
SurfaceSpec surface_spec_from_json(const nlohmann::json& j);
CurveSpec curve_spec_from_string(const std::string& text);
SurfaceSpec surface_spec_from_string(const std::string& text);

nlohmann::ordered_json to_json(const CurveSpec& spec);
nlohmann::ordered_json to_json(const SurfaceSpec& spec);
nlohmann::ordered_json to_json(const ClassificationResult& r,
                               const ClassifyOptions& opts);
nlohmann::ordered_json to_json(const TheoremReport& r);

// Shortest-width deterministic double formatting used by every emitter:
// %.17g, with nonfinite values mapped to null when emitted as JSON.
std::string format_double(double x);

// Deterministic serialization: object keys in insertion order, doubles via
// format_double, two-space indent.
std::string dump_deterministic(const nlohmann::ordered_json& j);

}  // namespace rotsurf
