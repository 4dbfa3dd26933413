#pragma once

#include <map>
#include <string>
#include <vector>

#include "scarf/complex.hpp"
#include "scarf/neighborly.hpp"
#include "scarf/point_set.hpp"
#include "scarf/subdivision.hpp"

namespace scarf {

/// A monomial ideal given by exponent vectors over named variables.
struct MonomialIdeal {
  std::vector<std::string> variables;
  std::vector<std::vector<long long>> generators;  // exponent vectors

  int nvars() const { return static_cast<int>(variables.size()); }
  /// Generators as a point set; requires at least one generator.
  PointSet generator_points() const;
  std::string monomial_string(int g) const;
};

/// Parses "x^2*y, x*z^3; y^2" over the given variables. Errors carry the
/// offending position in the input text.
MonomialIdeal parse_ideal(const std::string& text, const std::vector<std::string>& variables);

/// Divisibility-minimal generators; the result is an antichain.
MonomialIdeal minimize(const MonomialIdeal& I);

bool is_minimized(const MonomialIdeal& I);

/// Complex of generator subsets B such that every generator keeps at least
/// one exponent at or above the exponent of lcm(B); the membership test is
/// evaluated literally and cross-checked against the join-based test.
SimplicialComplex buchberger_complex(const MonomialIdeal& I, int max_dim = kAllDims);

/// One-skeleton of the realized subdivision for three variables: each edge
/// of the complex contributes the two segments through the pair's lcm.
GeometricMesh buchberger_graph(const MonomialIdeal& I);

/// Per homological degree d >= 0: the size-d faces with their lcm labels,
/// and the signed incidence matrix into degree d-1. Degree 0 is the empty
/// face with the unit label.
struct GradedChainComplex {
  std::vector<std::vector<std::vector<int>>> faces;     // faces[d]
  std::vector<std::vector<ExtendedPoint>> multidegrees; // multidegrees[d]
  // boundaries[d]: rows = degree d-1 generators, cols = degree d generators.
  std::vector<std::vector<std::vector<int>>> boundaries;
  bool minimality_claimed = false;  // true only for generic minimized input

  std::vector<long long> ranks() const;  // ranks per degree >= 1
};

/// Chain complex supported on the neighborly complex of the generators,
/// with the alternating-sign incidence on index-sorted members.
/// d(d) = 0 is verified at construction.
GradedChainComplex scarf_chain_complex(const MonomialIdeal& I);

struct BettiEntry {
  int index = 0;  // resolution index: 0 = generators
  ExtendedPoint degree;
  long long rank = 0;
};

struct BettiTable {
  std::vector<BettiEntry> entries;  // nonzero entries, sorted
  long long rank(int index, const ExtendedPoint& degree) const;
};

/// Multigraded Betti numbers computed independently of the neighborly
/// enumeration: for each lattice element, the reduced homology of the order
/// complex of the open interval below it. Guarded to desk scale.
BettiTable betti_oracle(const MonomialIdeal& I, int max_generators = 10, int max_vars = 4);

}  // namespace scarf
