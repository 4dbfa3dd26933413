#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scarf/rational.hpp"

namespace scarf {

using DenseMatrix = std::vector<std::vector<Rat>>;

/// Rank by Gaussian elimination over the rationals.
int dense_rank(DenseMatrix m);

/// Solves M r = rhs exactly. Returns nullopt when inconsistent; when the
/// system is underdetermined, free variables are set to zero.
std::optional<std::vector<Rat>> solve_exact(DenseMatrix m, std::vector<Rat> rhs);

/// Sparse column: (row index, coefficient) sorted by row.
using SparseColumn = std::vector<std::pair<int, Rat>>;

/// Rank of a sparse matrix given columnwise, via left-to-right reduction
/// on largest-row pivots. Entries stay exact rationals throughout.
long long sparse_rank(std::vector<SparseColumn> columns);

/// Invariant factors d_1 | d_2 | ... (positive, > 0) of an integer matrix.
std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> m);

}  // namespace scarf
