#pragma once

#include <string>
#include <vector>

#include "scarf/complex.hpp"
#include "scarf/point_set.hpp"

namespace scarf {

/// Abstract barycentric subdivision: one vertex per nonempty face of K,
/// one simplex per chain of faces under inclusion.
struct BarycentricSubdivision {
  SimplicialComplex complex;           // over the face-vertex indices
  std::vector<std::vector<int>> vertex_faces;  // vertex i <-> face of K
};

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& K);

/// Partial joins c_1, ..., c_m of the members taken in the given order.
std::vector<ExtendedPoint> chain_points(const PointSet& A,
                                        const std::vector<int>& members_in_order);

/// True when the points span an affine subspace of dimension size-1,
/// decided by the exact rank of the difference vectors.
bool affinely_independent(const std::vector<ExtendedPoint>& pts);

struct GeometricMesh {
  int dim = 0;
  std::vector<ExtendedPoint> vertices;               // finite, deduplicated
  std::vector<std::vector<std::vector<int>>> cells;  // cells[d]: d-simplices
  long long cell_count() const;
};

struct SubdivisionCertificate {
  bool join_injective = false;       // distinct faces have distinct joins
  bool top_counts_match = false;     // m! top cells per m-member face
  bool poset_isomorphic = false;     // mesh cells == subdivision faces
  bool affinely_independent = false; // holds for every top cell
  long long vertex_count = 0;
  long long face_count = 0;
  bool ok() const {
    return join_injective && top_counts_match && poset_isomorphic && affinely_independent;
  }
};

struct GeometricSubdivision {
  GeometricMesh mesh;
  BarycentricSubdivision subdivision;
  SubdivisionCertificate certificate;
};

/// Mesh whose vertices are the joins of nonempty faces of K and whose cells
/// realize the chains, together with the bijection certificate. Requires a
/// finite generic antichain; K must be its neighborly complex.
GeometricSubdivision geometric_subdivision(const PointSet& A, const SimplicialComplex& K);

/// OFF export for dim = 3: triangle cells only; vertices as truncated
/// decimals, exact coordinates recorded in header comments.
std::string mesh_to_off(const GeometricMesh& mesh, int precision = 12);

}  // namespace scarf
