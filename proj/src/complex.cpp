#include "scarf/complex.hpp"

#include <algorithm>

#include "scarf/errors.hpp"

namespace scarf {

SimplicialComplex::SimplicialComplex(int ground_size) : ground_size_(ground_size) {
  if (ground_size_ < 0) throw InputError("ground size must be >= 0");
  layers_.resize(1);
  layers_[0].insert(std::vector<int>{});
}

bool SimplicialComplex::contains(const std::vector<int>& face) const {
  int k = static_cast<int>(face.size());
  if (k >= static_cast<int>(layers_.size())) return false;
  return layers_[k].count(face) > 0;
}

void SimplicialComplex::insert_unchecked(std::vector<int> face) {
  for (int v : face)
    if (v < 0 || v >= ground_size_)
      throw InputError("face vertex out of range: " + std::to_string(v));
  if (!std::is_sorted(face.begin(), face.end()))
    std::sort(face.begin(), face.end());
  for (std::size_t i = 1; i < face.size(); ++i)
    if (face[i] == face[i - 1]) throw InputError("face with repeated vertex");
  std::size_t k = face.size();
  if (k >= layers_.size()) layers_.resize(k + 1);
  layers_[k].insert(std::move(face));
}

void SimplicialComplex::insert_closed(const std::vector<int>& face) {
  insert_unchecked(face);
  // All subsets, generated by deleting one member at a time.
  std::vector<std::vector<int>> frontier{face};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& f : frontier) {
      if (f.empty()) continue;
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<int> sub;
        sub.reserve(f.size() - 1);
        for (std::size_t j = 0; j < f.size(); ++j)
          if (j != i) sub.push_back(f[j]);
        if (!contains(sub)) {
          layers_[sub.size()].insert(sub);
          next.push_back(std::move(sub));
        }
      }
    }
    frontier = std::move(next);
  }
}

const SimplicialComplex::FaceSet& SimplicialComplex::faces_with_size(int k) const {
  static const FaceSet empty;
  if (k < 0 || k >= static_cast<int>(layers_.size())) return empty;
  return layers_[k];
}

long long SimplicialComplex::face_count_with_size(int k) const {
  return static_cast<long long>(faces_with_size(k).size());
}

long long SimplicialComplex::face_count() const {
  long long n = 0;
  for (std::size_t k = 1; k < layers_.size(); ++k) n += layers_[k].size();
  return n;
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
  std::set<std::vector<int>> covered;
  for (std::size_t k = 1; k < layers_.size(); ++k) {
    for (const auto& f : layers_[k]) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<int> sub;
        sub.reserve(f.size() - 1);
        for (std::size_t j = 0; j < f.size(); ++j)
          if (j != i) sub.push_back(f[j]);
        covered.insert(std::move(sub));
      }
    }
  }
  std::vector<std::vector<int>> out;
  for (std::size_t k = 0; k < layers_.size(); ++k)
    for (const auto& f : layers_[k])
      if (!covered.count(f)) out.push_back(f);
  return out;
}

std::vector<std::vector<int>> SimplicialComplex::all_faces_sorted() const {
  std::vector<std::vector<int>> out;
  for (std::size_t k = 1; k < layers_.size(); ++k)
    for (const auto& f : layers_[k]) out.push_back(f);
  return out;  // layer order is (size, lex) already
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 1; k < layers_.size(); ++k) {
    long long c = static_cast<long long>(layers_[k].size());
    chi += (k % 2 == 1) ? c : -c;
  }
  return chi;
}

bool SimplicialComplex::verify_downward_closed() const {
  for (std::size_t k = 1; k < layers_.size(); ++k) {
    for (const auto& f : layers_[k]) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<int> sub;
        for (std::size_t j = 0; j < f.size(); ++j)
          if (j != i) sub.push_back(f[j]);
        if (!contains(sub)) return false;
      }
    }
  }
  return true;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  if (ground_size_ != other.ground_size_) return false;
  std::size_t k_max = std::max(layers_.size(), other.layers_.size());
  for (std::size_t k = 0; k < k_max; ++k)
    if (faces_with_size(static_cast<int>(k)) != other.faces_with_size(static_cast<int>(k)))
      return false;
  return true;
}

}  // namespace scarf
