#include "scarf/subdivision.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "scarf/errors.hpp"
#include "scarf/linalg.hpp"
#include "scarf/neighborly.hpp"

namespace scarf {

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& K) {
  BarycentricSubdivision out{SimplicialComplex(0), {}};
  out.vertex_faces = K.all_faces_sorted();
  const int n = static_cast<int>(out.vertex_faces.size());
  out.complex = SimplicialComplex(n);
  std::map<std::vector<int>, int> vertex_of;
  for (int i = 0; i < n; ++i) vertex_of[out.vertex_faces[i]] = i;

  // Strict inclusions; vertex numbering is by (size, lex), so inclusion
  // implies an increasing vertex index and chains come out sorted.
  std::vector<std::vector<int>> above(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& small = out.vertex_faces[i];
      const auto& big = out.vertex_faces[j];
      if (small.size() < big.size() &&
          std::includes(big.begin(), big.end(), small.begin(), small.end()))
        above[i].push_back(j);
    }

  std::vector<int> chain;
  auto grow = [&](auto&& self, int top) -> void {
    chain.push_back(top);
    out.complex.insert_unchecked(chain);
    for (int j : above[top]) self(self, j);
    chain.pop_back();
  };
  for (int i = 0; i < n; ++i) grow(grow, i);
  return out;
}

std::vector<ExtendedPoint> chain_points(const PointSet& A,
                                        const std::vector<int>& members_in_order) {
  if (members_in_order.empty()) throw InputError("chain_points: empty face");
  std::vector<ExtendedPoint> out;
  out.reserve(members_in_order.size());
  ExtendedPoint running = A.point(members_in_order[0]);
  out.push_back(running);
  for (std::size_t j = 1; j < members_in_order.size(); ++j) {
    running = join(running, A.point(members_in_order[j]));
    out.push_back(running);
  }
  return out;
}

bool affinely_independent(const std::vector<ExtendedPoint>& pts) {
  if (pts.empty()) return true;
  const int m = static_cast<int>(pts.size());
  for (const auto& p : pts)
    if (!p.all_finite()) throw InputError("affinely_independent: finite coordinates required");
  if (m == 1) return true;
  DenseMatrix diffs;
  for (int j = 0; j + 1 < m; ++j) {
    std::vector<Rat> row;
    row.reserve(pts[j].dim());
    for (int i = 0; i < pts[j].dim(); ++i)
      row.push_back(pts[j][i].value() - pts[m - 1][i].value());
    diffs.push_back(std::move(row));
  }
  return dense_rank(std::move(diffs)) == m - 1;
}

long long GeometricMesh::cell_count() const {
  long long n = 0;
  for (const auto& layer : cells) n += static_cast<long long>(layer.size());
  return n;
}

GeometricSubdivision geometric_subdivision(const PointSet& A, const SimplicialComplex& K) {
  if (!A.all_finite()) throw InputError("geometric_subdivision: finite coordinates required");
  if (!A.is_antichain()) throw InputError("geometric_subdivision: input is not an antichain");
  if (!is_generic(A).generic) throw InputError("geometric_subdivision: input is not generic");

  GeometricSubdivision out{GeometricMesh{}, barycentric_subdivision(K), {}};
  const auto& faces = out.subdivision.vertex_faces;
  out.certificate.face_count = static_cast<long long>(faces.size());

  // Vertex positions: the join of each face. Injectivity is the dedup key.
  std::map<ExtendedPoint, int, ExtendedPointLexLess> seen;
  out.mesh.dim = A.dim();
  out.mesh.vertices.reserve(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    ExtendedPoint v = face_join(A, faces[i]);
    auto [it, inserted] = seen.emplace(v, static_cast<int>(i));
    if (!inserted)
      throw InternalError("geometric_subdivision: faces " + std::to_string(it->second) + " and " +
                          std::to_string(i) + " share the join " + v.str());
    out.mesh.vertices.push_back(std::move(v));
  }
  out.certificate.join_injective = true;
  out.certificate.vertex_count = static_cast<long long>(out.mesh.vertices.size());

  // Cells mirror the subdivision faces one-to-one through the vertex map.
  const auto& sd = out.subdivision.complex;
  out.mesh.cells.resize(sd.max_dim() + 1);
  for (int k = 1; k <= sd.max_dim() + 1; ++k)
    for (const auto& f : sd.faces_with_size(k)) out.mesh.cells[k - 1].push_back(f);
  out.certificate.poset_isomorphic = sd.face_count() == out.mesh.cell_count();

  // Independent regeneration of the top cells from (face, ordering) pairs:
  // each m-member face must contribute m! distinct cells already present.
  std::map<std::vector<int>, int> vertex_of;
  for (std::size_t i = 0; i < faces.size(); ++i) vertex_of[faces[i]] = static_cast<int>(i);
  bool counts_ok = true;
  bool independent_ok = true;
  for (int k = 1; k <= K.max_dim() + 1 && counts_ok; ++k) {
    for (const auto& base : K.faces_with_size(k)) {
      std::set<std::vector<int>> generated;
      std::vector<int> order = base;
      long long expected = 1;
      for (int t = 2; t <= k; ++t) expected *= t;
      do {
        std::vector<int> cell;
        std::vector<int> prefix;
        for (int member : order) {
          prefix.push_back(member);
          std::vector<int> sorted_prefix = prefix;
          std::sort(sorted_prefix.begin(), sorted_prefix.end());
          cell.push_back(vertex_of.at(sorted_prefix));
        }
        std::sort(cell.begin(), cell.end());
        if (!sd.contains(cell)) {
          counts_ok = false;
          break;
        }
        if (generated.insert(cell).second) {
          std::vector<ExtendedPoint> pts;
          for (int v : cell) pts.push_back(out.mesh.vertices[v]);
          if (!affinely_independent(pts)) independent_ok = false;
        }
      } while (std::next_permutation(order.begin(), order.end()));
      if (static_cast<long long>(generated.size()) != expected) counts_ok = false;
    }
  }
  out.certificate.top_counts_match = counts_ok;
  out.certificate.affinely_independent = independent_ok;
  if (!out.certificate.ok())
    throw InternalError("geometric_subdivision: certificate failed");
  return out;
}

std::string mesh_to_off(const GeometricMesh& mesh, int precision) {
  if (mesh.dim != 3) throw InputError("OFF export requires dimension 3");
  std::ostringstream off;
  off << "OFF\n";
  off << "# exact vertex coordinates:\n";
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    off << "# v" << i;
    for (int c = 0; c < 3; ++c) off << " " << mesh.vertices[i][c].str();
    off << "\n";
  }
  const auto& triangles = mesh.cells.size() > 2 ? mesh.cells[2] : std::vector<std::vector<int>>{};
  off << mesh.vertices.size() << " " << triangles.size() << " 0\n";
  for (const auto& v : mesh.vertices) {
    for (int c = 0; c < 3; ++c) {
      if (c) off << " ";
      off << decimal_string(v[c].value(), precision);
    }
    off << "\n";
  }
  for (const auto& t : triangles)
    off << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
  return off.str();
}

}  // namespace scarf
