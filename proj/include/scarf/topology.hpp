#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scarf/complex.hpp"
#include "scarf/linalg.hpp"
#include "scarf/point_set.hpp"
#include "scarf/poset.hpp"

namespace scarf {

/// Reduced Betti numbers over Q, starting at dimension -1.
struct BettiVector {
  std::vector<long long> reduced;  // reduced[k] = b~_{k-1}; trailing zeros trimmed

  long long at_dim(int d) const {
    int idx = d + 1;
    if (idx < 0 || idx >= static_cast<int>(reduced.size())) return 0;
    return reduced[idx];
  }
  bool all_zero() const {
    for (long long b : reduced)
      if (b != 0) return false;
    return true;
  }
};

/// Joins of all nonempty subsets of A, as a poset under the coordinate-wise
/// order. Throws ScaleError when the closure exceeds max_size.
FinitePoset lcm_lattice(const PointSet& A, std::size_t max_size = SIZE_MAX);

/// Down-set of the lattice consisting of joins with no point of A strictly
/// below them; contains A itself when A is an antichain.
FinitePoset neighborly_poset(const PointSet& A, std::size_t max_size = SIZE_MAX);

struct CrosscutCheck {
  bool is_antichain = false;
  bool chains_meet = false;    // every maximal chain meets C
  bool bounds_complete = false;  // bounded subsets of C have a sup or inf
  std::string failure;
  bool ok() const { return is_antichain && chains_meet && bounds_complete; }
};

CrosscutCheck check_crosscut(const FinitePoset& P, const std::vector<int>& C);

/// Complex of bounded subsets of the crosscut C. Rejects C when the
/// crosscut conditions fail, naming the failing condition.
SimplicialComplex crosscut_complex(const FinitePoset& P, const std::vector<int>& C);

/// Reduced rational homology via exact ranks of the boundary matrices.
BettiVector reduced_homology(const SimplicialComplex& K);

/// Integer homology: ranks plus torsion invariant factors per dimension.
struct IntegralHomology {
  BettiVector betti;
  std::vector<std::vector<Int>> torsion;  // torsion[k] for dimension k-1
};
IntegralHomology reduced_homology_integral(const SimplicialComplex& K);

/// Points of A at or strictly below b.
PointSet restrict_below(const PointSet& A, const ExtendedPoint& b, bool strict);

/// Subcomplex of faces whose join is <= b (or < b when strict); the empty
/// face always stays.
SimplicialComplex restrict_complex(const PointSet& A, const SimplicialComplex& K,
                                   const ExtendedPoint& b, bool strict);

}  // namespace scarf
