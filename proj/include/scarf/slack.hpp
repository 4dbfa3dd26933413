#pragma once

#include <optional>
#include <vector>

#include "scarf/hypersurface.hpp"
#include "scarf/neighborly.hpp"
#include "scarf/point_set.hpp"

namespace scarf {

/// The i-th ideal point (1-based): +inf at coordinate i, -inf elsewhere.
ExtendedPoint slack_vector(int n, int i);

/// A with the n slack vectors appended, labeled w1..wn. Finite input only.
PointSet augment(const PointSet& A);

/// Number of finite (non-slack) points in an augmented set.
int finite_point_count(const PointSet& Astar);

/// Genericity of an augmented set. Coordinate ties at -inf between slack
/// vectors are degenerate directions of the completion and need no witness,
/// so this agrees with is_generic on the finite part.
GenericityReport is_generic_star(const PointSet& Astar);

/// Witness that a query point lies strictly below the join of a maximal
/// neighborly subset, produced by a coordinate sweep.
struct BonnetCertificate {
  std::vector<int> members;        // sorted indices into Astar
  std::vector<int> member_by_coordinate;  // member collected for direction k (1-based k-1)
  ExtendedPoint join_point;
  ExtendedPoint query;
  std::vector<int> coordinate_order;  // 1-based permutation used
};

/// Raise the query one coordinate at a time, each time just far enough for
/// the moving codimension-1 face to pick up a new point of Astar (the slack
/// vector of that direction when no finite point qualifies). Preconditions:
/// Astar generic, finite query, no point of Astar at or below the query.
BonnetCertificate locate_bonnet(const PointSet& Astar, const ExtendedPoint& b,
                                const std::vector<int>& coordinate_order);

/// Re-derives every certificate property; throws InternalError on failure.
void verify_certificate(const PointSet& Astar, const BonnetCertificate& cert);

/// Order-isomorphism of [-inf,+inf] onto [-1,1]: x -> x/(1+|x|) on finite
/// values, sentinels to the endpoints. Exact on rationals.
Rat box_coordinate(const ExtendedCoordinate& c);
ExtendedPoint box_point(const ExtendedPoint& p);

/// Exact barycentric membership of q in the closed simplex spanned by the
/// given (affinely independent) vertices.
bool simplex_contains(const std::vector<ExtendedPoint>& vertices, const ExtendedPoint& q);

struct CoverageSample {
  ExtendedPoint h;            // sample on the hyperplane
  bool hit = false;
  bool via_located_face = false;  // hit inside the face the sweep returned
};

struct CoverageReport {
  long long samples = 0;
  long long hits = 0;
  long long misses = 0;
  long long fallback_hits = 0;  // hits found only by scanning all maximal faces
  std::vector<CoverageSample> detail;
  bool all_hit() const { return misses == 0; }
};

/// For each hyperplane sample, raises to the boundary of the augmented
/// region, locates a bonnet from just below the boundary point, and tests
/// the point against the located face's realized chains (all maximal faces
/// as a fallback). Realization uses the box model, where every chain is a
/// straight simplex. Samples are independent and run on `threads` workers;
/// the report is aggregated in sample order regardless of thread count.
CoverageReport coverage_check(const PointSet& Astar, const std::vector<ExtendedPoint>& samples,
                              bool keep_detail = false, int threads = 1);

}  // namespace scarf
