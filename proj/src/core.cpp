#include "scarf/core.hpp"

#include <algorithm>
#include <sstream>

#include "scarf/errors.hpp"

namespace scarf {

ExtendedCoordinate ExtendedCoordinate::neg_inf() {
  ExtendedCoordinate c;
  c.kind_ = CoordKind::NegInf;
  return c;
}

ExtendedCoordinate ExtendedCoordinate::pos_inf() {
  ExtendedCoordinate c;
  c.kind_ = CoordKind::PosInf;
  return c;
}

const Rat& ExtendedCoordinate::value() const {
  if (!finite()) throw InputError("arithmetic access to an infinite coordinate");
  return value_;
}

std::string ExtendedCoordinate::str() const {
  switch (kind_) {
    case CoordKind::NegInf: return "-inf";
    case CoordKind::PosInf: return "+inf";
    default: return rational_string(value_);
  }
}

int cmp(const ExtendedCoordinate& a, const ExtendedCoordinate& b) {
  if (a.kind() == b.kind()) {
    if (a.kind() != CoordKind::Finite) return 0;
    if (a.value() < b.value()) return -1;
    if (b.value() < a.value()) return 1;
    return 0;
  }
  if (a.kind() == CoordKind::NegInf || b.kind() == CoordKind::PosInf) return -1;
  return 1;
}

bool operator==(const ExtendedCoordinate& a, const ExtendedCoordinate& b) { return cmp(a, b) == 0; }
bool operator<(const ExtendedCoordinate& a, const ExtendedCoordinate& b) { return cmp(a, b) < 0; }
bool operator<=(const ExtendedCoordinate& a, const ExtendedCoordinate& b) { return cmp(a, b) <= 0; }

ExtendedCoordinate coord_max(const ExtendedCoordinate& a, const ExtendedCoordinate& b) {
  return cmp(a, b) >= 0 ? a : b;
}

ExtendedCoordinate coord_min(const ExtendedCoordinate& a, const ExtendedCoordinate& b) {
  return cmp(a, b) <= 0 ? a : b;
}

ExtendedCoordinate coord_add(const ExtendedCoordinate& a, const ExtendedCoordinate& b) {
  return ExtendedCoordinate(a.value() + b.value());
}

ExtendedCoordinate coord_sub(const ExtendedCoordinate& a, const ExtendedCoordinate& b) {
  return ExtendedCoordinate(a.value() - b.value());
}

ExtendedPoint::ExtendedPoint(std::vector<ExtendedCoordinate> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("points must have dimension >= 1");
}

ExtendedPoint ExtendedPoint::from_ints(const std::vector<long long>& coords) {
  std::vector<ExtendedCoordinate> cs;
  cs.reserve(coords.size());
  for (long long c : coords) cs.emplace_back(c);
  return ExtendedPoint(std::move(cs));
}

ExtendedPoint ExtendedPoint::from_rats(std::vector<Rat> coords) {
  std::vector<ExtendedCoordinate> cs;
  cs.reserve(coords.size());
  for (auto& c : coords) cs.emplace_back(std::move(c));
  return ExtendedPoint(std::move(cs));
}

const ExtendedCoordinate& ExtendedPoint::pi(int i) const {
  if (i < 1 || i > dim()) throw InputError("coordinate index out of range: " + std::to_string(i));
  return coords_[i - 1];
}

bool ExtendedPoint::all_finite() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const ExtendedCoordinate& c) { return c.finite(); });
}

std::string ExtendedPoint::str() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < dim(); ++i) {
    if (i) out << ", ";
    out << coords_[i].str();
  }
  out << ")";
  return out.str();
}

bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (cmp(a[i], b[i]) != 0) return false;
  return true;
}

bool operator!=(const ExtendedPoint& a, const ExtendedPoint& b) { return !(a == b); }

bool lex_less(const ExtendedPoint& a, const ExtendedPoint& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (int i = 0; i < a.dim(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

void require_same_dim(const ExtendedPoint& a, const ExtendedPoint& b, const char* where) {
  if (a.dim() != b.dim())
    throw InputError(std::string(where) + ": dimension mismatch (" + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()) + ")");
}

OrderRelation compare(const ExtendedPoint& x, const ExtendedPoint& y) {
  require_same_dim(x, y, "compare");
  bool leq = true, geq = true, all_lt = true, all_gt = true, some_lt = false, some_gt = false;
  for (int i = 0; i < x.dim(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c < 0) { geq = false; all_gt = false; some_lt = true; }
    else if (c > 0) { leq = false; all_lt = false; some_gt = true; }
    else { all_lt = false; all_gt = false; }
  }
  if (leq && geq) return {Order::EQ, false, false};
  if (leq) return {Order::LEQ, all_lt, some_lt};
  if (geq) return {Order::GEQ, all_gt, some_gt};
  return {Order::INCOMPARABLE, false, false};
}

bool point_leq(const ExtendedPoint& x, const ExtendedPoint& y) {
  require_same_dim(x, y, "order");
  for (int i = 0; i < x.dim(); ++i)
    if (cmp(x[i], y[i]) > 0) return false;
  return true;
}

bool point_less(const ExtendedPoint& x, const ExtendedPoint& y) {
  return point_leq(x, y) && x != y;
}

bool point_below_all(const ExtendedPoint& x, const ExtendedPoint& y) {
  require_same_dim(x, y, "order");
  for (int i = 0; i < x.dim(); ++i)
    if (cmp(x[i], y[i]) >= 0) return false;
  return true;
}

ExtendedPoint join(const std::vector<ExtendedPoint>& points) {
  if (points.empty()) throw InputError("join of an empty family");
  std::vector<ExtendedCoordinate> out = points[0].coords();
  for (std::size_t k = 1; k < points.size(); ++k) {
    require_same_dim(points[0], points[k], "join");
    for (int i = 0; i < points[k].dim(); ++i) out[i] = coord_max(out[i], points[k][i]);
  }
  return ExtendedPoint(std::move(out));
}

ExtendedPoint join(const ExtendedPoint& a, const ExtendedPoint& b) {
  require_same_dim(a, b, "join");
  std::vector<ExtendedCoordinate> out = a.coords();
  for (int i = 0; i < b.dim(); ++i) out[i] = coord_max(out[i], b[i]);
  return ExtendedPoint(std::move(out));
}

bool bonnet_interior_contains(const ExtendedPoint& b, const ExtendedPoint& z) {
  return point_below_all(z, b);
}

std::optional<FaceIndexSet> face_membership(const ExtendedPoint& b, const ExtendedPoint& a) {
  require_same_dim(b, a, "face_membership");
  if (!point_leq(a, b)) return std::nullopt;
  FaceIndexSet J;
  for (int i = 0; i < a.dim(); ++i)
    if (cmp(a[i], b[i]) == 0) J.indices.push_back(i + 1);
  return J;
}

bool rectangle_contains(const ExtendedPoint& x, const ExtendedPoint& y, const ExtendedPoint& z) {
  require_same_dim(x, y, "rectangle_contains");
  require_same_dim(x, z, "rectangle_contains");
  if (!x.all_finite() || !y.all_finite() || !z.all_finite())
    throw InputError("rectangle_contains: rectangles are defined for finite coordinates only");
  for (int i = 0; i < x.dim(); ++i) {
    const ExtendedCoordinate lo = coord_min(x[i], y[i]);
    const ExtendedCoordinate hi = coord_max(x[i], y[i]);
    if (cmp(z[i], lo) < 0 || cmp(z[i], hi) > 0) return false;
  }
  return true;
}

namespace {

ExtendedPoint pointwise(const ExtendedPoint& a, const ExtendedPoint& b,
                        ExtendedCoordinate (*op)(const ExtendedCoordinate&, const ExtendedCoordinate&),
                        const char* where) {
  require_same_dim(a, b, where);
  std::vector<ExtendedCoordinate> out;
  out.reserve(a.dim());
  for (int i = 0; i < a.dim(); ++i) out.push_back(op(a[i], b[i]));
  return ExtendedPoint(std::move(out));
}

}  // namespace

ExtendedPoint point_add(const ExtendedPoint& a, const ExtendedPoint& b) {
  return pointwise(a, b, coord_add, "point_add");
}

ExtendedPoint point_sub(const ExtendedPoint& a, const ExtendedPoint& b) {
  return pointwise(a, b, coord_sub, "point_sub");
}

ExtendedPoint positive_part(const ExtendedPoint& a) {
  std::vector<ExtendedCoordinate> out;
  out.reserve(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    out.emplace_back(a[i].value() > 0 ? a[i].value() : Rat(0));
  return ExtendedPoint(std::move(out));
}

ExtendedPoint negative_part(const ExtendedPoint& a) {
  std::vector<ExtendedCoordinate> out;
  out.reserve(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    out.emplace_back(a[i].value() < 0 ? Rat(-a[i].value()) : Rat(0));
  return ExtendedPoint(std::move(out));
}

}  // namespace scarf
