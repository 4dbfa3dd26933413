#pragma once

#include <optional>
#include <vector>

#include "scarf/complex.hpp"
#include "scarf/point_set.hpp"

namespace scarf {

/// A neighborly subset, carrying its member indices and cached join.
struct Face {
  std::vector<int> members;  // sorted indices into the owning set
  ExtendedPoint join;
};

struct NeighborlyCheck {
  bool neighborly;
  std::optional<int> blocker;  // first index a with a << join, when not neighborly
};

/// Join of the given members of A; at least one member required.
ExtendedPoint face_join(const PointSet& A, const std::vector<int>& members);

/// Is B (as indices into A) neighborly: no a in A strictly below the join
/// of B in every coordinate. The empty set is neighborly by convention.
NeighborlyCheck is_neighborly(const PointSet& A, const std::vector<int>& members);

/// Same test for an explicit join point (B need not be a subset of A).
NeighborlyCheck join_is_neighborly(const PointSet& A, const ExtendedPoint& join_point);

struct GenericityReport {
  bool generic;
  std::vector<std::pair<int, int>> violations;  // all pairs lacking a witness
};

/// Shared-coordinate witness criterion: for every distinct pair x, y of A
/// sharing a coordinate value, some z in A must lie strictly inside the
/// bonnet below x v y. Ties at -inf are degenerate directions of the order
/// completion and need no witness, which keeps augmented sets decidable.
GenericityReport is_generic(const PointSet& A);

/// Witness membership in the relative interior of the bonnet below b:
/// strictly below in every coordinate where b exceeds -inf, pinned at the
/// -inf coordinates.
bool relative_interior_contains(const ExtendedPoint& b, const ExtendedPoint& z);

inline constexpr int kAllDims = 1 << 30;

/// All neighborly subsets of A with at most max_dim+1 members
/// (every subset, when max_dim = kAllDims). Faces are grown one vertex at a
/// time; a candidate is tested only when all its codimension-1 subsets are
/// already present, which is valid by downward closure.
SimplicialComplex enumerate_complex(const PointSet& A, int max_dim = kAllDims);

/// Indices of points a in A such that {a, y} is neighborly, a != y.
std::vector<int> neighbors_of(const PointSet& A, const ExtendedPoint& y);

/// Indices of points x != y with no third point of A in the closed
/// rectangle from x to y. Works for any finite rational coordinates.
std::vector<int> weak_neighbors(const PointSet& A, const ExtendedPoint& y);

/// Same set computed per orthant via minimal elements; integer data only.
std::vector<int> weak_neighbors_orthant(const PointSet& A, const ExtendedPoint& y);

/// <=-minimal elements of a finite list of points in N^n. Duplicates are
/// collapsed. Rejects negative or non-integer coordinates.
std::vector<ExtendedPoint> minimal_elements(const std::vector<ExtendedPoint>& S);

/// Facets of Nb(A), each with its join.
std::vector<Face> maximal_faces(const PointSet& A);
std::vector<Face> maximal_faces(const PointSet& A, const SimplicialComplex& K);

/// Deduplicated joins of the maximal faces (the corner list mA).
std::vector<ExtendedPoint> corner_points(const PointSet& A);

}  // namespace scarf
