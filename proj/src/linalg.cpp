#include "scarf/linalg.hpp"

#include <algorithm>
#include <map>

#include "scarf/errors.hpp"

namespace scarf {

int dense_rank(DenseMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::optional<std::vector<Rat>> solve_exact(DenseMatrix m, std::vector<Rat> rhs) {
  const std::size_t rows = m.size();
  if (rows != rhs.size()) throw InputError("solve_exact: shape mismatch");
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<int> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    std::swap(rhs[rank], rhs[pivot]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
      rhs[r] -= factor * rhs[rank];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (rhs[r] != 0) return std::nullopt;
  std::vector<Rat> solution(cols, Rat(0));
  for (std::size_t r = 0; r < rank; ++r)
    solution[pivot_col_of_row[r]] = rhs[r] / m[r][pivot_col_of_row[r]];
  return solution;
}

long long sparse_rank(std::vector<SparseColumn> columns) {
  // Persist reduced columns keyed by their largest occupied row.
  std::map<int, SparseColumn> pivot_columns;
  long long rank = 0;
  auto add_scaled = [](const SparseColumn& a, const SparseColumn& b, const Rat& factor) {
    // a + factor * b, both sorted by row.
    SparseColumn out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, factor * b[j].second);
        ++j;
      } else {
        Rat v = a[i].second + factor * b[j].second;
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  };
  for (auto& col : columns) {
    SparseColumn current = std::move(col);
    while (!current.empty()) {
      int low = current.back().first;
      auto it = pivot_columns.find(low);
      if (it == pivot_columns.end()) break;
      Rat factor = -current.back().second / it->second.back().second;
      current = add_scaled(current, it->second, factor);
    }
    if (!current.empty()) {
      pivot_columns.emplace(current.back().first, std::move(current));
      ++rank;
    }
  }
  return rank;
}

namespace {

Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> m) {
  std::vector<Int> factors;
  if (m.empty() || m[0].empty()) return factors;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Find a nonzero entry of smallest magnitude in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m[r][c] != 0 && (pr == rows || int_abs(m[r][c]) < int_abs(m[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);
    bool reduced = false;
    while (!reduced) {
      reduced = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        Int q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) {
          std::swap(m[t], m[r]);
          reduced = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        Int q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) {
          for (std::size_t r = t; r < rows; ++r) std::swap(m[r][t], m[r][c]);
          reduced = false;
        }
      }
    }
    ++t;
  }
  // Diagonal now; enforce the divisibility chain.
  std::vector<Int> diag;
  for (std::size_t i = 0; i < t; ++i)
    if (m[i][i] != 0) diag.push_back(int_abs(m[i][i]));
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] != 0) {
        Int g = gcd(diag[i], diag[j]);
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

}  // namespace scarf
