#pragma once

#include <optional>
#include <vector>

#include "scarf/complex.hpp"
#include "scarf/core.hpp"

namespace scarf {

/// Finite poset stored as the full <= relation. Elements optionally carry
/// coordinate labels (used when the poset comes from a point family).
class FinitePoset {
public:
  /// From an explicit relation matrix; validated as a partial order.
  explicit FinitePoset(std::vector<std::vector<bool>> leq);

  /// From points under the coordinate-wise order, sorted lexicographically
  /// for deterministic element numbering.
  static FinitePoset from_points(std::vector<ExtendedPoint> elements);

  int size() const { return static_cast<int>(leq_.size()); }
  bool leq(int i, int j) const { return leq_[i][j]; }
  bool less(int i, int j) const { return i != j && leq_[i][j]; }

  bool has_labels() const { return !labels_.empty(); }
  const ExtendedPoint& label(int i) const;
  const std::vector<ExtendedPoint>& labels() const { return labels_; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::optional<int> least_element() const;
  std::optional<int> greatest_element() const;

  /// Elements strictly below i.
  std::vector<int> strictly_below(int i) const;

  /// Subposet on the given elements; index i of the result corresponds to
  /// subset[i] of this poset.
  FinitePoset induced(const std::vector<int>& subset) const;

  /// All maximal chains, each as an ascending element list.
  std::vector<std::vector<int>> maximal_chains() const;

private:
  FinitePoset() = default;
  std::vector<std::vector<bool>> leq_;
  std::vector<ExtendedPoint> labels_;
};

/// Order complex: vertices are the poset elements, faces are the chains.
SimplicialComplex order_complex(const FinitePoset& P);

}  // namespace scarf
