#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scarf/rational.hpp"

namespace scarf {

// ---------------------------------------------------------------------------
// Extended coordinates: exact rationals completed with -inf / +inf sentinels.
// The sentinels carry order semantics only; arithmetic on them is rejected.
// ---------------------------------------------------------------------------

enum class CoordKind { NegInf, Finite, PosInf };

class ExtendedCoordinate {
public:
  ExtendedCoordinate() : kind_(CoordKind::Finite), value_(0) {}
  ExtendedCoordinate(Rat value) : kind_(CoordKind::Finite), value_(std::move(value)) {}
  ExtendedCoordinate(long long value) : kind_(CoordKind::Finite), value_(value) {}
  ExtendedCoordinate(int value) : kind_(CoordKind::Finite), value_(value) {}

  static ExtendedCoordinate neg_inf();
  static ExtendedCoordinate pos_inf();

  CoordKind kind() const { return kind_; }
  bool finite() const { return kind_ == CoordKind::Finite; }

  /// Finite value; throws InputError on a sentinel.
  const Rat& value() const;

  std::string str() const;  // "p/q", "+inf" or "-inf"

private:
  CoordKind kind_;
  Rat value_;
};

/// Total order on the completion: -inf < rationals < +inf. Returns -1/0/+1.
int cmp(const ExtendedCoordinate& a, const ExtendedCoordinate& b);

bool operator==(const ExtendedCoordinate& a, const ExtendedCoordinate& b);
bool operator<(const ExtendedCoordinate& a, const ExtendedCoordinate& b);
bool operator<=(const ExtendedCoordinate& a, const ExtendedCoordinate& b);

ExtendedCoordinate coord_max(const ExtendedCoordinate& a, const ExtendedCoordinate& b);
ExtendedCoordinate coord_min(const ExtendedCoordinate& a, const ExtendedCoordinate& b);

/// Finite-only arithmetic; throws InputError when a sentinel is involved.
ExtendedCoordinate coord_add(const ExtendedCoordinate& a, const ExtendedCoordinate& b);
ExtendedCoordinate coord_sub(const ExtendedCoordinate& a, const ExtendedCoordinate& b);

// ---------------------------------------------------------------------------
// Points of [-inf,+inf]^n.
// ---------------------------------------------------------------------------

class ExtendedPoint {
public:
  ExtendedPoint() = default;
  explicit ExtendedPoint(std::vector<ExtendedCoordinate> coords);

  static ExtendedPoint from_ints(const std::vector<long long>& coords);
  static ExtendedPoint from_rats(std::vector<Rat> coords);

  int dim() const { return static_cast<int>(coords_.size()); }

  /// 1-based component accessor.
  const ExtendedCoordinate& pi(int i) const;
  /// 0-based access.
  const ExtendedCoordinate& operator[](int i) const { return coords_[i]; }

  const std::vector<ExtendedCoordinate>& coords() const { return coords_; }
  bool all_finite() const;
  std::string str() const;  // "(a, b, ...)"

private:
  std::vector<ExtendedCoordinate> coords_;
};

bool operator==(const ExtendedPoint& a, const ExtendedPoint& b);
bool operator!=(const ExtendedPoint& a, const ExtendedPoint& b);

/// Lexicographic order on coordinate tuples; *not* the partial order.
/// Used only as a deterministic container key.
bool lex_less(const ExtendedPoint& a, const ExtendedPoint& b);

struct ExtendedPointLexLess {
  bool operator()(const ExtendedPoint& a, const ExtendedPoint& b) const {
    return lex_less(a, b);
  }
};

// ---------------------------------------------------------------------------
// The coordinate-wise partial order.
// ---------------------------------------------------------------------------

enum class Order { EQ, LEQ, GEQ, INCOMPARABLE };

struct OrderRelation {
  Order rel;
  bool strict_all;   // every coordinate strictly increases (or decreases, for GEQ)
  bool strict_some;  // at least one coordinate strictly increases
};

/// Exact relation of x to y under the coordinate-wise order.
/// LEQ/GEQ exclude equality; EQ is reported separately.
OrderRelation compare(const ExtendedPoint& x, const ExtendedPoint& y);

bool point_leq(const ExtendedPoint& x, const ExtendedPoint& y);
/// x <= y and x != y.
bool point_less(const ExtendedPoint& x, const ExtendedPoint& y);
/// Strict in every coordinate.
bool point_below_all(const ExtendedPoint& x, const ExtendedPoint& y);

/// Coordinate-wise maximum of a nonempty family.
ExtendedPoint join(const std::vector<ExtendedPoint>& points);
ExtendedPoint join(const ExtendedPoint& a, const ExtendedPoint& b);

/// Membership of z in the open bonnet interior below b, i.e. z << b.
bool bonnet_interior_contains(const ExtendedPoint& b, const ExtendedPoint& z);

/// J-th face index set of an orthant translate: 1-based directions.
struct FaceIndexSet {
  std::vector<int> indices;  // sorted, 1-based
  int codimension() const { return static_cast<int>(indices.size()); }
};

/// If a <= b, the set J = { j : pi_j(a) = pi_j(b) }, so a lies in the
/// relative interior of the J-th face of b's bonnet. Otherwise nullopt.
std::optional<FaceIndexSet> face_membership(const ExtendedPoint& b, const ExtendedPoint& a);

/// Closed axis-aligned rectangle test; all coordinates must be finite.
bool rectangle_contains(const ExtendedPoint& x, const ExtendedPoint& y, const ExtendedPoint& z);

// Finite-only pointwise arithmetic.
ExtendedPoint point_add(const ExtendedPoint& a, const ExtendedPoint& b);
ExtendedPoint point_sub(const ExtendedPoint& a, const ExtendedPoint& b);
ExtendedPoint positive_part(const ExtendedPoint& a);  // a v 0
ExtendedPoint negative_part(const ExtendedPoint& a);  // (-a) v 0

void require_same_dim(const ExtendedPoint& a, const ExtendedPoint& b, const char* where);

}  // namespace scarf
