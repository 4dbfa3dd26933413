#include "scarf/hypersurface.hpp"

#include <algorithm>
#include <set>

#include "scarf/errors.hpp"
#include "scarf/neighborly.hpp"

namespace scarf {

StaircaseRegion::StaircaseRegion(int dim, std::vector<ExtendedPoint> corners) : dim_(dim) {
  if (dim_ < 1) throw InputError("region dimension must be >= 1");
  std::set<ExtendedPoint, ExtendedPointLexLess> dedup;
  for (auto& c : corners) {
    if (c.dim() != dim_) throw InputError("corner dimension mismatch");
    dedup.insert(std::move(c));
  }
  corners_.assign(dedup.begin(), dedup.end());
}

StaircaseRegion staircase_region(const PointSet& A) {
  return StaircaseRegion(A.dim(), corner_points(A));
}

bool region_contains(const StaircaseRegion& R, const ExtendedPoint& b) {
  if (b.dim() != R.dim()) throw InputError("region_contains: dimension mismatch");
  for (const auto& x : R.corners())
    if (point_leq(b, x)) return true;
  return false;
}

bool on_boundary(const StaircaseRegion& R, const ExtendedPoint& b) {
  if (b.dim() != R.dim()) throw InputError("on_boundary: dimension mismatch");
  bool inside = false;
  for (const auto& x : R.corners()) {
    if (point_below_all(b, x)) return false;  // strictly dominated: interior
    inside = inside || point_leq(b, x);
  }
  return inside;
}

ExtendedPoint project_to_hyperplane(const ExtendedPoint& p) {
  if (!p.all_finite()) throw InputError("project_to_hyperplane: finite coordinates required");
  Rat sum(0);
  for (int i = 0; i < p.dim(); ++i) sum += p[i].value();
  Rat mean = sum / p.dim();
  std::vector<Rat> out;
  out.reserve(p.dim());
  for (int i = 0; i < p.dim(); ++i) out.push_back(p[i].value() - mean);
  return ExtendedPoint::from_rats(std::move(out));
}

ExtendedPoint raise_to_surface(const StaircaseRegion& R, const ExtendedPoint& h) {
  if (R.empty()) throw InputError("raise_to_surface: region has no corners");
  if (h.dim() != R.dim()) throw InputError("raise_to_surface: dimension mismatch");
  if (!h.all_finite()) throw InputError("raise_to_surface: finite base point required");
  bool found = false;
  Rat best(0);
  for (const auto& x : R.corners()) {
    bool has_finite = false, reachable = true;
    Rat t;
    for (int j = 0; j < x.dim() && reachable; ++j) {
      if (!x[j].finite()) {
        // A -inf coordinate keeps the line out of this bonnet; +inf never binds.
        reachable = x[j].kind() != CoordKind::NegInf;
        continue;
      }
      Rat slack = x[j].value() - h[j].value();
      if (!has_finite || slack < t) t = slack;
      has_finite = true;
    }
    if (!reachable) continue;
    if (!has_finite)
      throw InputError("raise_to_surface: a corner imposes no finite bound on the line");
    if (!found || t > best) { best = t; found = true; }
  }
  if (!found) throw InputError("raise_to_surface: the line misses every corner bonnet");
  std::vector<Rat> out;
  out.reserve(h.dim());
  for (int i = 0; i < h.dim(); ++i) out.push_back(h[i].value() + best);
  return ExtendedPoint::from_rats(std::move(out));
}

Rat surface_epsilon(const StaircaseRegion& R, const ExtendedPoint& b) {
  std::set<Rat> values;
  for (const auto& x : R.corners())
    for (int j = 0; j < x.dim(); ++j)
      if (x[j].finite()) values.insert(x[j].value());
  for (int j = 0; j < b.dim(); ++j)
    if (b[j].finite()) values.insert(b[j].value());
  Rat gap(0);
  bool found = false;
  for (auto it = values.begin(); it != values.end(); ++it) {
    auto next = std::next(it);
    if (next == values.end()) break;
    Rat d = *next - *it;
    if (d > 0 && (!found || d < gap)) { gap = d; found = true; }
  }
  return found ? Rat(gap / 2) : Rat(1, 2);
}

}  // namespace scarf
