#include "scarf/neighborly.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "scarf/errors.hpp"

namespace scarf {

ExtendedPoint face_join(const PointSet& A, const std::vector<int>& members) {
  if (members.empty()) throw InputError("face_join: empty face has no join point");
  std::vector<ExtendedPoint> pts;
  pts.reserve(members.size());
  for (int i : members) pts.push_back(A.point(i));
  return join(pts);
}

NeighborlyCheck join_is_neighborly(const PointSet& A, const ExtendedPoint& join_point) {
  for (int i = 0; i < A.size(); ++i)
    if (point_below_all(A.point(i), join_point)) return {false, i};
  return {true, std::nullopt};
}

NeighborlyCheck is_neighborly(const PointSet& A, const std::vector<int>& members) {
  for (int i : members)
    if (i < 0 || i >= A.size())
      throw InputError("is_neighborly: member index out of range: " + std::to_string(i));
  if (members.empty()) return {true, std::nullopt};
  return join_is_neighborly(A, face_join(A, members));
}

bool relative_interior_contains(const ExtendedPoint& b, const ExtendedPoint& z) {
  require_same_dim(b, z, "relative_interior_contains");
  for (int i = 0; i < b.dim(); ++i) {
    if (b[i].kind() == CoordKind::NegInf) {
      if (z[i].kind() != CoordKind::NegInf) return false;
    } else if (cmp(z[i], b[i]) >= 0) {
      return false;
    }
  }
  return true;
}

GenericityReport is_generic(const PointSet& A) {
  GenericityReport report{true, {}};
  for (int i = 0; i < A.size(); ++i) {
    for (int j = i + 1; j < A.size(); ++j) {
      const ExtendedPoint& x = A.point(i);
      const ExtendedPoint& y = A.point(j);
      bool shares = false;
      for (int k = 0; k < A.dim(); ++k) {
        // A tie at -inf pins a degenerate direction; no witness is required.
        if (cmp(x[k], y[k]) == 0 && x[k].kind() != CoordKind::NegInf) {
          shares = true;
          break;
        }
      }
      if (!shares) continue;
      ExtendedPoint j_xy = join(x, y);
      bool witnessed = false;
      for (int z = 0; z < A.size() && !witnessed; ++z)
        witnessed = relative_interior_contains(j_xy, A.point(z));
      if (!witnessed) {
        report.generic = false;
        report.violations.emplace_back(i, j);
      }
    }
  }
  return report;
}

SimplicialComplex enumerate_complex(const PointSet& A, int max_dim) {
  SimplicialComplex K(A.size());
  std::size_t size_cap = static_cast<std::size_t>(A.size());
  if (max_dim != kAllDims) {
    if (max_dim < -1) throw InputError("enumerate_complex: max_dim must be >= -1");
    size_cap = std::min(size_cap, static_cast<std::size_t>(max_dim + 1));
  }
  // Vertices.
  for (int i = 0; i < A.size(); ++i)
    if (size_cap >= 1 && is_neighborly(A, {i}).neighborly) K.insert_unchecked({i});
  // Extend layer by layer; candidates restricted to indices above max(B)
  // so each face is generated once.
  for (std::size_t k = 1; k < size_cap; ++k) {
    const auto& layer = K.faces_with_size(static_cast<int>(k));
    if (layer.empty()) break;
    std::vector<std::vector<int>> grown;
    for (const auto& face : layer) {
      for (int a = face.back() + 1; a < A.size(); ++a) {
        std::vector<int> candidate = face;
        candidate.push_back(a);
        bool subsets_present = true;
        for (std::size_t drop = 0; drop + 1 < candidate.size() && subsets_present; ++drop) {
          std::vector<int> sub;
          sub.reserve(candidate.size() - 1);
          for (std::size_t j = 0; j < candidate.size(); ++j)
            if (j != drop) sub.push_back(candidate[j]);
          subsets_present = K.contains(sub);
        }
        if (!subsets_present) continue;
        if (is_neighborly(A, candidate).neighborly) grown.push_back(std::move(candidate));
      }
    }
    for (auto& f : grown) K.insert_unchecked(std::move(f));
  }
  return K;
}

std::vector<int> neighbors_of(const PointSet& A, const ExtendedPoint& y) {
  if (y.dim() != A.dim()) throw InputError("neighbors_of: dimension mismatch");
  std::vector<int> out;
  for (int i = 0; i < A.size(); ++i) {
    if (A.point(i) == y) continue;
    if (join_is_neighborly(A, join(A.point(i), y)).neighborly) out.push_back(i);
  }
  return out;
}

std::vector<int> weak_neighbors(const PointSet& A, const ExtendedPoint& y) {
  if (y.dim() != A.dim()) throw InputError("weak_neighbors: dimension mismatch");
  if (!A.all_finite() || !y.all_finite())
    throw InputError("weak_neighbors: finite coordinates required");
  std::vector<int> out;
  for (int i = 0; i < A.size(); ++i) {
    const ExtendedPoint& x = A.point(i);
    if (x == y) continue;
    bool blocked = false;
    for (int z = 0; z < A.size() && !blocked; ++z) {
      const ExtendedPoint& p = A.point(z);
      if (p == x || p == y) continue;
      blocked = rectangle_contains(x, y, p);
    }
    if (!blocked) out.push_back(i);
  }
  return out;
}

std::vector<int> weak_neighbors_orthant(const PointSet& A, const ExtendedPoint& y) {
  if (y.dim() != A.dim()) throw InputError("weak_neighbors_orthant: dimension mismatch");
  if (!A.all_integer())
    throw InputError("weak_neighbors_orthant: integer coordinates required");
  for (int i = 0; i < y.dim(); ++i)
    if (!y[i].finite() || !is_integer(y[i].value()))
      throw InputError("weak_neighbors_orthant: integer query point required");

  const int n = A.dim();
  // Work translated to y = 0. Each shifted candidate is judged in its sign
  // orthant: it survives iff it is minimal under the orthant order, i.e. no
  // other shifted point has smaller positive and negative parts.
  std::vector<ExtendedPoint> shifted;
  std::vector<int> candidate_index;
  for (int i = 0; i < A.size(); ++i) {
    ExtendedPoint d = point_sub(A.point(i), y);
    shifted.push_back(d);
  }
  // Group by sign pattern of the candidate, fold by Delta, and take minimal
  // elements of each folded group.
  std::vector<int> out;
  for (int i = 0; i < A.size(); ++i) {
    if (A.point(i) == y) continue;
    // Sign orthant of shifted[i]: +1 where >= 0, -1 where < 0.
    std::vector<int> sign(n);
    for (int k = 0; k < n; ++k) sign[k] = (shifted[i][k].value() < 0) ? -1 : 1;
    auto fold = [&](const ExtendedPoint& p) {
      std::vector<Rat> f(n);
      for (int k = 0; k < n; ++k) f[k] = sign[k] < 0 ? Rat(-p[k].value()) : p[k].value();
      return ExtendedPoint::from_rats(std::move(f));
    };
    ExtendedPoint folded_i = fold(shifted[i]);
    bool minimal = true;
    for (int z = 0; z < A.size() && minimal; ++z) {
      if (z == i || A.point(z) == y) continue;
      // z must lie in the same orthant (all folded coordinates >= 0).
      ExtendedPoint folded_z = fold(shifted[z]);
      bool in_orthant = true;
      for (int k = 0; k < n && in_orthant; ++k)
        in_orthant = folded_z[k].value() >= 0;
      if (!in_orthant) continue;
      if (point_leq(folded_z, folded_i)) minimal = false;
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<ExtendedPoint> minimal_elements(const std::vector<ExtendedPoint>& S) {
  std::vector<ExtendedPoint> unique;
  for (const auto& p : S) {
    for (int i = 0; i < p.dim(); ++i) {
      if (!p[i].finite() || !is_integer(p[i].value()) || p[i].value() < 0)
        throw InputError("minimal_elements: nonnegative integer coordinates required");
    }
    bool seen = false;
    for (const auto& q : unique)
      if (q == p) { seen = true; break; }
    if (!seen) unique.push_back(p);
  }
  std::vector<ExtendedPoint> out;
  for (const auto& p : unique) {
    bool minimal = true;
    for (const auto& q : unique) {
      if (q == p) continue;
      if (point_leq(q, p)) { minimal = false; break; }
    }
    if (minimal) out.push_back(p);
  }
  return out;
}

std::vector<Face> maximal_faces(const PointSet& A, const SimplicialComplex& K) {
  std::vector<Face> out;
  for (const auto& f : K.facets()) {
    if (f.empty()) continue;  // only when A itself is empty
    out.push_back({f, face_join(A, f)});
  }
  return out;
}

std::vector<Face> maximal_faces(const PointSet& A) {
  SimplicialComplex K = enumerate_complex(A);
  return maximal_faces(A, K);
}

std::vector<ExtendedPoint> corner_points(const PointSet& A) {
  std::set<ExtendedPoint, ExtendedPointLexLess> seen;
  for (const auto& f : maximal_faces(A)) seen.insert(f.join);
  return {seen.begin(), seen.end()};
}

}  // namespace scarf
