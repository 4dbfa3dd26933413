#include "scarf/json_io.hpp"

#include <fstream>
#include <sstream>

#include "scarf/errors.hpp"

namespace scarf {

Json coordinate_to_json(const ExtendedCoordinate& c) {
  if (c.kind() == CoordKind::NegInf) return "-inf";
  if (c.kind() == CoordKind::PosInf) return "+inf";
  const Rat& v = c.value();
  if (denominator(v) == 1 && numerator(v) >= std::numeric_limits<long long>::min() &&
      numerator(v) <= std::numeric_limits<long long>::max())
    return static_cast<long long>(numerator(v));
  return rational_string(v);
}

ExtendedCoordinate coordinate_from_json(const Json& j, const std::string& context) {
  if (j.is_number_integer()) return ExtendedCoordinate(Rat(j.get<long long>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "+inf" || s == "inf") return ExtendedCoordinate::pos_inf();
    if (s == "-inf") return ExtendedCoordinate::neg_inf();
    return ExtendedCoordinate(parse_rational(s));
  }
  if (j.is_number_float())
    throw InputError(context + ": floating-point coordinates are not accepted; use \"p/q\"");
  throw InputError(context + ": expected an integer, \"p/q\", \"+inf\" or \"-inf\"");
}

Json point_to_json(const ExtendedPoint& p) {
  Json out = Json::array();
  for (int i = 0; i < p.dim(); ++i) out.push_back(coordinate_to_json(p[i]));
  return out;
}

ExtendedPoint point_from_json(const Json& j, const std::string& context) {
  if (!j.is_array() || j.empty()) throw InputError(context + ": expected a coordinate array");
  std::vector<ExtendedCoordinate> coords;
  coords.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    coords.push_back(coordinate_from_json(j[i], context + "[" + std::to_string(i) + "]"));
  return ExtendedPoint(std::move(coords));
}

Json point_set_to_json(const PointSet& A) {
  Json out;
  out["dim"] = A.dim();
  Json pts = Json::array();
  for (const auto& p : A.points()) pts.push_back(point_to_json(p));
  out["points"] = std::move(pts);
  if (A.has_labels()) out["labels"] = A.labels();
  return out;
}

PointSet point_set_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("point set: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InputError("point set: missing integer field 'dim'");
  if (!j.contains("points") || !j["points"].is_array())
    throw InputError("point set: missing array field 'points'");
  int dim = j["dim"].get<int>();
  std::vector<ExtendedPoint> pts;
  for (std::size_t i = 0; i < j["points"].size(); ++i)
    pts.push_back(point_from_json(j["points"][i], "points[" + std::to_string(i) + "]"));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw InputError("point set: 'labels' must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw InputError("point set: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return PointSet(dim, std::move(pts), std::move(labels));
}

Json complex_to_json(const PointSet& A, const SimplicialComplex& K) {
  Json out;
  out["ground"] = point_set_to_json(A);
  Json facets = Json::array();
  auto fs = K.facets();
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const auto& f : fs) facets.push_back(f);
  out["facets"] = std::move(facets);
  return out;
}

std::pair<PointSet, SimplicialComplex> complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("facets"))
    throw InputError("complex: expected an object with 'ground' and 'facets'");
  PointSet A = point_set_from_json(j["ground"]);
  SimplicialComplex K(A.size());
  if (!j["facets"].is_array()) throw InputError("complex: 'facets' must be an array");
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) throw InputError("complex: each facet must be an index array");
    std::vector<int> face;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw InputError("complex: facet entries must be integers");
      face.push_back(v.get<int>());
    }
    K.insert_closed(face);
  }
  return {std::move(A), std::move(K)};
}

Json mesh_to_json(const GeometricMesh& mesh) {
  Json out;
  Json verts = Json::array();
  for (const auto& v : mesh.vertices) verts.push_back(point_to_json(v));
  out["vertices"] = std::move(verts);
  Json simplices = Json::object();
  for (std::size_t d = 0; d < mesh.cells.size(); ++d) {
    Json layer = Json::array();
    for (const auto& cell : mesh.cells[d]) layer.push_back(cell);
    simplices[std::to_string(d)] = std::move(layer);
  }
  out["simplices"] = std::move(simplices);
  return out;
}

Json betti_to_json(const BettiVector& b) {
  Json out = Json::object();
  for (std::size_t k = 0; k < b.reduced.size(); ++k)
    out[std::to_string(static_cast<int>(k) - 1)] = b.reduced[k];
  return out;
}

ExtendedPoint point_from_csv(const std::string& text) {
  std::vector<ExtendedCoordinate> coords;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    auto begin = token.find_first_not_of(" \t");
    auto end = token.find_last_not_of(" \t");
    if (begin == std::string::npos) throw InputError("empty coordinate in '" + text + "'");
    token = token.substr(begin, end - begin + 1);
    if (token == "+inf" || token == "inf") coords.push_back(ExtendedCoordinate::pos_inf());
    else if (token == "-inf") coords.push_back(ExtendedCoordinate::neg_inf());
    else coords.push_back(ExtendedCoordinate(parse_rational(token)));
  }
  if (coords.empty()) throw InputError("no coordinates in '" + text + "'");
  return ExtendedPoint(std::move(coords));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

Json load_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON in " + path);
  return j;
}

}  // namespace scarf
