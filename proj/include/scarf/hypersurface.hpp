#pragma once

#include <vector>

#include "scarf/point_set.hpp"

namespace scarf {

/// Union of corner bonnets: the down-set below a finite list of corners.
/// Corners may carry +inf coordinates (regions of augmented sets); queries
/// are finite points.
class StaircaseRegion {
public:
  StaircaseRegion(int dim, std::vector<ExtendedPoint> corners);

  int dim() const { return dim_; }
  const std::vector<ExtendedPoint>& corners() const { return corners_; }
  bool empty() const { return corners_.empty(); }

private:
  int dim_;
  std::vector<ExtendedPoint> corners_;  // deduplicated, lex sorted
};

/// Region spanned by the joins of the maximal neighborly subsets of A.
StaircaseRegion staircase_region(const PointSet& A);

/// b lies in the region: b <= x for some corner x.
bool region_contains(const StaircaseRegion& R, const ExtendedPoint& b);

/// Topological boundary test: inside the region, but no corner strictly
/// dominates b in every coordinate.
bool on_boundary(const StaircaseRegion& R, const ExtendedPoint& b);

/// Orthogonal projection onto the hyperplane x_1 + ... + x_n = 0 along the
/// all-ones direction.
ExtendedPoint project_to_hyperplane(const ExtendedPoint& p);

/// The unique boundary point on the line h + t*(1,...,1):
/// t* = max over corners x of min over finite coordinates of x_j - h_j.
ExtendedPoint raise_to_surface(const StaircaseRegion& R, const ExtendedPoint& h);

/// Data-driven probe step: half the smallest positive difference between
/// finite coordinate values occurring in the corners and the query.
Rat surface_epsilon(const StaircaseRegion& R, const ExtendedPoint& b);

}  // namespace scarf
