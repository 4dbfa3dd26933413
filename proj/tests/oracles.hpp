#pragma once

// Brute-force reference implementations for the test suites. These scan
// every subset and apply the definitions directly, independently of the
// incremental enumeration and the fast genericity test they check.

#include <optional>
#include <vector>

#include "scarf/complex.hpp"
#include "scarf/core.hpp"
#include "scarf/point_set.hpp"

namespace scarf::testing {

inline ExtendedPoint pt(const std::vector<long long>& coords) {
  return ExtendedPoint::from_ints(coords);
}

inline PointSet ps(const std::vector<std::vector<long long>>& coords) {
  return PointSet::from_ints(coords);
}

/// Join of the subset, computed by a raw coordinate scan.
inline ExtendedPoint subset_join(const PointSet& A, const std::vector<int>& members) {
  std::vector<ExtendedCoordinate> acc = A.point(members[0]).coords();
  for (std::size_t m = 1; m < members.size(); ++m)
    for (int i = 0; i < A.dim(); ++i)
      if (cmp(acc[i], A.point(members[m])[i]) < 0) acc[i] = A.point(members[m])[i];
  return ExtendedPoint(acc);
}

/// Direct definition: some point of A strictly below b in every coordinate.
inline bool has_strictly_dominated_point(const PointSet& A, const ExtendedPoint& b) {
  for (int z = 0; z < A.size(); ++z) {
    bool below_all = true;
    for (int i = 0; i < A.dim() && below_all; ++i)
      below_all = cmp(A.point(z)[i], b[i]) < 0;
    if (below_all) return true;
  }
  return false;
}

/// Every subset tested against the definition, no incremental pruning.
inline SimplicialComplex brute_complex(const PointSet& A) {
  SimplicialComplex K(A.size());
  const int n = A.size();
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (mask & (1UL << i)) members.push_back(i);
    if (!has_strictly_dominated_point(A, subset_join(A, members)))
      K.insert_unchecked(members);
  }
  return K;
}

/// Literal form of the genericity definition: across all neighborly
/// subsets, each face of the bonnet holds at most one point of A, i.e. no
/// two points inside a bonnet share an equality coordinate against its
/// corner. Ties pinned at -inf are skipped as degenerate directions.
inline bool brute_generic(const PointSet& A) {
  const int n = A.size();
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (mask & (1UL << i)) members.push_back(i);
    ExtendedPoint corner = subset_join(A, members);
    if (has_strictly_dominated_point(A, corner)) continue;
    std::vector<int> inside;
    for (int i = 0; i < n; ++i) {
      bool leq = true;
      for (int c = 0; c < A.dim() && leq; ++c) leq = cmp(A.point(i)[c], corner[c]) <= 0;
      if (leq) inside.push_back(i);
    }
    for (std::size_t p = 0; p < inside.size(); ++p)
      for (std::size_t q = p + 1; q < inside.size(); ++q)
        for (int c = 0; c < A.dim(); ++c) {
          bool p_on = cmp(A.point(inside[p])[c], corner[c]) == 0;
          bool q_on = cmp(A.point(inside[q])[c], corner[c]) == 0;
          if (p_on && q_on && corner[c].kind() != CoordKind::NegInf) return false;
        }
  }
  return true;
}

inline std::vector<std::vector<int>> brute_maximal_faces(const PointSet& A) {
  SimplicialComplex K = brute_complex(A);
  std::vector<std::vector<int>> out;
  for (const auto& f : K.facets())
    if (!f.empty()) out.push_back(f);
  return out;
}

}  // namespace scarf::testing
