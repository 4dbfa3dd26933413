#pragma once

#include <set>
#include <vector>

namespace scarf {

/// Downward-closed family of faces over ground indices 0..ground_size-1.
/// Faces are sorted index vectors, organized by member count; the empty
/// face is always present as the (-1)-dimensional face.
class SimplicialComplex {
public:
  using FaceSet = std::set<std::vector<int>>;

  explicit SimplicialComplex(int ground_size);

  int ground_size() const { return ground_size_; }

  /// Largest face dimension; -1 when only the empty face exists.
  int max_dim() const { return static_cast<int>(layers_.size()) - 2; }

  bool contains(const std::vector<int>& face) const;

  /// Insert a face and all of its subsets.
  void insert_closed(const std::vector<int>& face);

  /// Insert a single face whose subsets are inserted elsewhere.
  void insert_unchecked(std::vector<int> face);

  /// Faces with exactly k members (k = 0 yields { {} }).
  const FaceSet& faces_with_size(int k) const;

  long long face_count_with_size(int k) const;
  /// Number of nonempty faces.
  long long face_count() const;

  /// Faces not properly contained in any other face.
  std::vector<std::vector<int>> facets() const;

  /// Nonempty faces ordered by (size, lex).
  std::vector<std::vector<int>> all_faces_sorted() const;

  /// Sum over nonempty faces of (-1)^dim.
  long long euler_characteristic() const;

  bool verify_downward_closed() const;

  bool operator==(const SimplicialComplex& other) const;

private:
  int ground_size_;
  std::vector<FaceSet> layers_;  // layers_[k] = faces with k members
};

}  // namespace scarf
