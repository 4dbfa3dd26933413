#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "scarf/complex.hpp"
#include "scarf/point_set.hpp"
#include "scarf/subdivision.hpp"
#include "scarf/topology.hpp"

namespace scarf {

using Json = nlohmann::json;

/// Coordinates serialize as plain integers when they fit, otherwise as
/// "p/q" strings; sentinels as "+inf"/"-inf".
Json coordinate_to_json(const ExtendedCoordinate& c);
ExtendedCoordinate coordinate_from_json(const Json& j, const std::string& context);

Json point_to_json(const ExtendedPoint& p);
ExtendedPoint point_from_json(const Json& j, const std::string& context);

/// {"dim": n, "points": [[...], ...], "labels": [...]}
Json point_set_to_json(const PointSet& A);
PointSet point_set_from_json(const Json& j);

/// {"ground": <point set>, "facets": [[indices], ...]}
Json complex_to_json(const PointSet& A, const SimplicialComplex& K);
std::pair<PointSet, SimplicialComplex> complex_from_json(const Json& j);

/// {"vertices": [[...]], "simplices": {"0": [...], "1": [...], ...}}
Json mesh_to_json(const GeometricMesh& mesh);

Json betti_to_json(const BettiVector& b);

/// Parses a comma-separated list of rationals/sentinels, e.g. "1,5/2,-inf".
ExtendedPoint point_from_csv(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
Json load_json_file(const std::string& path);

}  // namespace scarf
