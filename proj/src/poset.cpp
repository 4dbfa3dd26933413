#include "scarf/poset.hpp"

#include <algorithm>

#include "scarf/errors.hpp"

namespace scarf {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  const int n = size();
  for (const auto& row : leq_)
    if (static_cast<int>(row.size()) != n) throw InputError("relation matrix must be square");
  for (int i = 0; i < n; ++i) {
    if (!leq_[i][i]) throw InputError("relation is not reflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i]) throw InputError("relation is not antisymmetric");
      for (int k = 0; k < n; ++k)
        if (leq_[i][j] && leq_[j][k] && !leq_[i][k])
          throw InputError("relation is not transitive");
    }
  }
}

FinitePoset FinitePoset::from_points(std::vector<ExtendedPoint> elements) {
  std::sort(elements.begin(), elements.end(), ExtendedPointLexLess{});
  for (std::size_t i = 1; i < elements.size(); ++i)
    if (elements[i] == elements[i - 1]) throw InputError("poset elements must be distinct");
  const int n = static_cast<int>(elements.size());
  FinitePoset P;
  P.leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) P.leq_[i][j] = point_leq(elements[i], elements[j]);
  P.labels_ = std::move(elements);
  return P;
}

const ExtendedPoint& FinitePoset::label(int i) const {
  if (labels_.empty()) throw InputError("poset has no coordinate labels");
  return labels_.at(i);
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool minimal = true;
    for (int j = 0; j < size() && minimal; ++j) minimal = !less(j, i);
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool maximal = true;
    for (int j = 0; j < size() && maximal; ++j) maximal = !less(i, j);
    if (maximal) out.push_back(i);
  }
  return out;
}

std::optional<int> FinitePoset::least_element() const {
  auto mins = minimal_elements();
  if (mins.size() == 1 && size() > 0) return mins[0];
  return std::nullopt;
}

std::optional<int> FinitePoset::greatest_element() const {
  auto maxs = maximal_elements();
  if (maxs.size() == 1 && size() > 0) return maxs[0];
  return std::nullopt;
}

std::vector<int> FinitePoset::strictly_below(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (less(j, i)) out.push_back(j);
  return out;
}

FinitePoset FinitePoset::induced(const std::vector<int>& subset) const {
  const int m = static_cast<int>(subset.size());
  FinitePoset Q;
  Q.leq_.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) Q.leq_[i][j] = leq_[subset[i]][subset[j]];
  if (!labels_.empty()) {
    Q.labels_.reserve(m);
    for (int i : subset) Q.labels_.push_back(labels_.at(i));
  }
  return Q;
}

std::vector<std::vector<int>> FinitePoset::maximal_chains() const {
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  auto extend = [&](auto&& self, int top) -> void {
    chain.push_back(top);
    bool extended = false;
    for (int j = 0; j < size(); ++j) {
      if (less(top, j)) {
        // j must cover nothing between: any strictly-greater j works, but a
        // maximal chain steps through covers only.
        bool covers = true;
        for (int k = 0; k < size() && covers; ++k)
          covers = !(less(top, k) && less(k, j));
        if (covers) {
          extended = true;
          self(self, j);
        }
      }
    }
    if (!extended) out.push_back(chain);
    chain.pop_back();
  };
  for (int i : minimal_elements()) extend(extend, i);
  return out;
}

SimplicialComplex order_complex(const FinitePoset& P) {
  SimplicialComplex K(P.size());
  std::vector<int> chain;
  auto grow = [&](auto&& self, int top) -> void {
    chain.push_back(top);
    K.insert_unchecked(chain);
    for (int j = 0; j < P.size(); ++j)
      if (P.less(top, j)) self(self, j);
    chain.pop_back();
  };
  for (int i = 0; i < P.size(); ++i) grow(grow, i);
  return K;
}

}  // namespace scarf
