#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scarf/core.hpp"

namespace scarf {

/// A finite indexed family of distinct points with uniform dimension.
/// Immutable after construction; the antichain certificate is computed once.
class PointSet {
public:
  PointSet(int dim, std::vector<ExtendedPoint> points, std::vector<std::string> labels = {});

  static PointSet from_ints(const std::vector<std::vector<long long>>& coords);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }

  const ExtendedPoint& point(int i) const;
  const std::vector<ExtendedPoint>& points() const { return points_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int i) const;
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_antichain() const { return antichain_; }
  /// One comparable pair (i, j) with point(i) <= point(j), when not an antichain.
  const std::optional<std::pair<int, int>>& antichain_witness() const { return witness_; }

  bool all_finite() const;
  bool all_integer() const;

  /// Index of a point with exactly these coordinates, if present.
  std::optional<int> index_of(const ExtendedPoint& p) const;

private:
  int dim_;
  std::vector<ExtendedPoint> points_;
  std::vector<std::string> labels_;
  bool antichain_ = true;
  std::optional<std::pair<int, int>> witness_;
};

/// Shift every point by a finite vector; order relations are preserved.
PointSet translate(const PointSet& A, const ExtendedPoint& x);

}  // namespace scarf
