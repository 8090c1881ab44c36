#pragma once

#include <string>

#include "projdes/point_set.hpp"

namespace projdes {

/// Design file schema (JSON, UTF-8):
///   {
///     "field":  "R" | "C" | "H",
///     "n":      <int >= 1>,
///     "backend": "exact" | "float",
///     "points": [ [ <scalar>, ... (n+1 of them) ], ... ]
///   }
/// A scalar is one of
///   "p", "p/q", "-1.25"                exact rational / float literal
///   {"re": v, "im": v}                 complex (exact: i is the order-4 root)
///   {"cyclo": {"order": m, "coeffs": ["p/q", ...]}}
///   {"quat": [w, x, y, z]}
/// Exact backends require string (or integer) components; float backends
/// accept numbers or strings. All points must share one representation kind.
/// Errors carry the point/coordinate index or the JSON parse position.

PointSet design_from_json(const std::string& text);
std::string design_to_json(const PointSet& ps);

PointSet load_design(const std::string& path);
void save_design(const PointSet& ps, const std::string& path);

}  // namespace projdes
