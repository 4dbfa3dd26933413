#include "scarf/point_set.hpp"

#include <map>

#include "scarf/errors.hpp"

namespace scarf {

PointSet::PointSet(int dim, std::vector<ExtendedPoint> points, std::vector<std::string> labels)
    : dim_(dim), points_(std::move(points)), labels_(std::move(labels)) {
  if (dim_ < 1) throw InputError("point set dimension must be >= 1");
  if (!labels_.empty() && labels_.size() != points_.size())
    throw InputError("label list length does not match point count");
  std::map<ExtendedPoint, int, ExtendedPointLexLess> seen;
  for (int i = 0; i < size(); ++i) {
    if (points_[i].dim() != dim_)
      throw InputError("point " + std::to_string(i) + " has dimension " +
                       std::to_string(points_[i].dim()) + ", expected " + std::to_string(dim_));
    auto [it, inserted] = seen.emplace(points_[i], i);
    if (!inserted)
      throw InputError("duplicate point at indices " + std::to_string(it->second) + " and " +
                       std::to_string(i));
  }
  for (int i = 0; i < size() && antichain_; ++i) {
    for (int j = 0; j < size(); ++j) {
      if (i == j) continue;
      if (point_leq(points_[i], points_[j])) {
        antichain_ = false;
        witness_ = std::make_pair(i, j);
        break;
      }
    }
  }
}

PointSet PointSet::from_ints(const std::vector<std::vector<long long>>& coords) {
  if (coords.empty()) throw InputError("from_ints: empty point list has no dimension");
  std::vector<ExtendedPoint> pts;
  pts.reserve(coords.size());
  for (const auto& c : coords) pts.push_back(ExtendedPoint::from_ints(c));
  return PointSet(static_cast<int>(coords[0].size()), std::move(pts));
}

const ExtendedPoint& PointSet::point(int i) const {
  if (i < 0 || i >= size()) throw InputError("point index out of range: " + std::to_string(i));
  return points_[i];
}

const std::string& PointSet::label(int i) const {
  static const std::string empty;
  if (labels_.empty()) return empty;
  if (i < 0 || i >= size()) throw InputError("label index out of range: " + std::to_string(i));
  return labels_[i];
}

bool PointSet::all_finite() const {
  for (const auto& p : points_)
    if (!p.all_finite()) return false;
  return true;
}

bool PointSet::all_integer() const {
  for (const auto& p : points_)
    for (int i = 0; i < p.dim(); ++i)
      if (!p[i].finite() || !is_integer(p[i].value())) return false;
  return true;
}

std::optional<int> PointSet::index_of(const ExtendedPoint& p) const {
  for (int i = 0; i < size(); ++i)
    if (points_[i] == p) return i;
  return std::nullopt;
}

PointSet translate(const PointSet& A, const ExtendedPoint& x) {
  if (!x.all_finite()) throw InputError("translate: shift vector must be finite");
  if (!A.all_finite()) throw InputError("translate: point set must be finite");
  if (x.dim() != A.dim()) throw InputError("translate: dimension mismatch");
  std::vector<ExtendedPoint> pts;
  pts.reserve(A.size());
  for (const auto& p : A.points()) pts.push_back(point_add(p, x));
  return PointSet(A.dim(), std::move(pts), A.labels());
}

}  // namespace scarf
