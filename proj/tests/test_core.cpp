#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "scarf/core.hpp"
#include "scarf/errors.hpp"
#include "scarf/json_io.hpp"
#include "scarf/neighborly.hpp"
#include "scarf/point_set.hpp"
#include "scarf/random.hpp"

#include "oracles.hpp"

using namespace scarf;
using scarf::testing::pt;
using scarf::testing::ps;

namespace {

ExtendedPoint mixed(std::vector<ExtendedCoordinate> cs) { return ExtendedPoint(std::move(cs)); }
const ExtendedCoordinate kPos = ExtendedCoordinate::pos_inf();
const ExtendedCoordinate kNeg = ExtendedCoordinate::neg_inf();

ExtendedPoint random_point(Rng& rng, int dim, long long lo, long long hi) {
  std::vector<long long> c(dim);
  for (int i = 0; i < dim; ++i) c[i] = rng.range(lo, hi);
  return pt(c);
}

}  // namespace

TEST_CASE("compare returns the exact order relation") {
  auto r = compare(pt({1, 5, 2}), pt({4, 0, 3}));
  CHECK(r.rel == Order::INCOMPARABLE);

  r = compare(pt({0, 0}), pt({0, 0}));
  CHECK(r.rel == Order::EQ);
  CHECK_FALSE(r.strict_all);
  CHECK_FALSE(r.strict_some);

  r = compare(pt({1, 1}), pt({2, 3}));
  CHECK(r.rel == Order::LEQ);
  CHECK(r.strict_all);
  CHECK(r.strict_some);

  r = compare(pt({1, 1}), pt({1, 3}));
  CHECK(r.rel == Order::LEQ);
  CHECK_FALSE(r.strict_all);
  CHECK(r.strict_some);

  r = compare(pt({2, 3}), pt({1, 1}));
  CHECK(r.rel == Order::GEQ);
  CHECK(r.strict_all);

  CHECK_THROWS_AS(compare(pt({1, 2}), pt({1, 2, 3})), InputError);
}

TEST_CASE("compare is a partial order on random triples") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    ExtendedPoint x = random_point(rng, 3, -5, 5);
    ExtendedPoint y = random_point(rng, 3, -5, 5);
    ExtendedPoint z = random_point(rng, 3, -5, 5);
    CHECK(point_leq(x, x));
    if (point_leq(x, y) && point_leq(y, x)) CHECK(x == y);
    if (point_leq(x, y) && point_leq(y, z)) CHECK(point_leq(x, z));
  }
}

TEST_CASE("join is the coordinate-wise maximum") {
  CHECK(join({pt({1, 5, 2}), pt({4, 0, 3})}) == pt({4, 5, 3}));
  CHECK(join({pt({1, 1})}) == pt({1, 1}));
  CHECK(join({pt({1, 1}), mixed({kPos, kNeg})}) == mixed({kPos, ExtendedCoordinate(1)}));
  CHECK_THROWS_AS(join(std::vector<ExtendedPoint>{}), InputError);
}

TEST_CASE("join is idempotent, commutative, associative") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ExtendedPoint> S;
    int k = static_cast<int>(rng.range(1, 5));
    for (int i = 0; i < k; ++i) S.push_back(random_point(rng, 3, -9, 9));
    ExtendedPoint base = join(S);
    // permutation
    std::vector<ExtendedPoint> perm = S;
    for (int i = k - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.range(0, i)]);
    CHECK(join(perm) == base);
    // duplication
    std::vector<ExtendedPoint> dup = S;
    dup.push_back(S[rng.range(0, k - 1)]);
    CHECK(join(dup) == base);
    // fold
    ExtendedPoint folded = S[0];
    for (int i = 1; i < k; ++i) folded = join(folded, S[i]);
    CHECK(folded == base);
  }
}

TEST_CASE("bonnet interior membership is the all-strict test") {
  CHECK(bonnet_interior_contains(pt({2, 4}), pt({1, 3})));
  CHECK_FALSE(bonnet_interior_contains(pt({2, 4}), pt({2, 3})));
  CHECK(bonnet_interior_contains(mixed({kPos, ExtendedCoordinate(1)}), pt({5, 0})));
}

TEST_CASE("face membership reads off the equality coordinates") {
  auto J = face_membership(pt({2, 4, 3}), pt({2, 1, 3}));
  REQUIRE(J.has_value());
  CHECK(J->indices == std::vector<int>{1, 3});
  CHECK(J->codimension() == 2);

  CHECK_FALSE(face_membership(pt({2, 4}), pt({3, 0})).has_value());

  J = face_membership(pt({1, 4}), pt({1, 4}));
  REQUIRE(J.has_value());
  CHECK(J->indices == std::vector<int>{1, 2});
}

TEST_CASE("rectangle membership") {
  CHECK(rectangle_contains(pt({0, 2}), pt({2, 0}), pt({1, 1})));
  CHECK_FALSE(rectangle_contains(pt({0, 2}), pt({2, 0}), pt({3, 1})));
  CHECK(rectangle_contains(pt({1, 1}), pt({1, 1}), pt({1, 1})));
  CHECK_THROWS_AS(rectangle_contains(mixed({kPos, ExtendedCoordinate(0)}), pt({2, 0}), pt({1, 1})),
                  InputError);
}

TEST_CASE("rectangle test matches the positive/negative part inequalities") {
  Rng rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    ExtendedPoint x = random_point(rng, 3, -6, 6);
    ExtendedPoint y = random_point(rng, 3, -6, 6);
    ExtendedPoint z = random_point(rng, 3, -6, 6);
    ExtendedPoint zx = point_sub(z, y), xy = point_sub(x, y);
    bool parts = point_leq(positive_part(zx), positive_part(xy)) &&
                 point_leq(negative_part(zx), negative_part(xy));
    CHECK(rectangle_contains(x, y, z) == parts);
  }
}

TEST_CASE("antichain detection with witness") {
  CHECK(ps({{0, 4}, {1, 3}, {2, 2}, {3, 1}, {4, 0}}).is_antichain());

  PointSet bad = ps({{2, 0}, {2, 1}});
  CHECK_FALSE(bad.is_antichain());
  REQUIRE(bad.antichain_witness().has_value());
  auto [i, j] = *bad.antichain_witness();
  CHECK(point_leq(bad.point(i), bad.point(j)));

  PointSet empty(2, {});
  CHECK(empty.is_antichain());
}

TEST_CASE("point sets reject duplicates and mixed dimensions") {
  CHECK_THROWS_AS(ps({{1, 2}, {1, 2}}), InputError);
  CHECK_THROWS_AS(PointSet(2, {pt({1, 2}), pt({1, 2, 3})}), InputError);
  CHECK_THROWS_AS(PointSet(2, {pt({1})}), InputError);
}

TEST_CASE("translate shifts every point") {
  PointSet A = ps({{0, 4}, {4, 0}});
  PointSet shifted = translate(A, pt({1, 1}));
  CHECK(shifted.point(0) == pt({1, 5}));
  CHECK(shifted.point(1) == pt({5, 1}));

  PointSet same = translate(A, pt({0, 0}));
  CHECK(same.point(0) == A.point(0));
  CHECK(same.point(1) == A.point(1));

  CHECK_THROWS_AS(translate(A, mixed({kPos, ExtendedCoordinate(0)})), InputError);
}

TEST_CASE("translation preserves antichain and genericity status") {
  Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    int count = static_cast<int>(rng.range(2, 6));
    std::vector<std::vector<long long>> coords;
    for (int i = 0; i < count; ++i) {
      std::vector<long long> c{rng.range(0, 9), rng.range(0, 9), rng.range(0, 9)};
      if (std::find(coords.begin(), coords.end(), c) == coords.end()) coords.push_back(c);
    }
    PointSet A = PointSet::from_ints(coords);
    ExtendedPoint x = random_point(rng, 3, -7, 7);
    PointSet Ax = translate(A, x);
    CHECK(A.is_antichain() == Ax.is_antichain());
    CHECK(is_generic(A).generic == is_generic(Ax).generic);
  }
}

TEST_CASE("sentinel arithmetic is rejected, not saturated") {
  CHECK_THROWS_AS(coord_add(kPos, ExtendedCoordinate(1)), InputError);
  CHECK_THROWS_AS(coord_sub(ExtendedCoordinate(1), kNeg), InputError);
  CHECK_THROWS_AS(point_add(mixed({kPos, ExtendedCoordinate(0)}), pt({1, 1})), InputError);
}

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(parse_rational("6/4") == Rat(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("a"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK(rational_string(Rat(3, 2)) == "3/2");
  CHECK(rational_string(Rat(-4)) == "-4");
  CHECK(decimal_string(Rat(1, 8), 4) == "0.1250");
  CHECK(decimal_string(Rat(-5, 2), 2) == "-2.50");
}

TEST_CASE("point set JSON round trip") {
  PointSet A(2,
             {pt({0, 4}), mixed({kPos, kNeg}),
              ExtendedPoint::from_rats({Rat(1, 2), Rat(-3, 7)})},
             {"a", "w1", "q"});
  Json j = point_set_to_json(A);
  PointSet back = point_set_from_json(j);
  REQUIRE(back.size() == A.size());
  for (int i = 0; i < A.size(); ++i) {
    CHECK(back.point(i) == A.point(i));
    CHECK(back.label(i) == A.label(i));
  }

  CHECK(j["points"][1][0] == "+inf");
  CHECK(j["points"][2][0] == "1/2");
}

TEST_CASE("point set JSON rejects malformed input") {
  CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"points": [[1,2]]})")), InputError);
  CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"dim": 2, "points": [[1.5, 2]]})")),
                  InputError);
  CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"dim": 2, "points": [["x", 2]]})")),
                  InputError);
  CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"dim": 2, "points": [[1,2],[1,2]]})")),
                  InputError);
  CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"dim": 3, "points": [[1,2]]})")),
                  InputError);
}

TEST_CASE("1-based coordinate accessor matches 0-based storage") {
  ExtendedPoint p = pt({7, 8, 9});
  CHECK(p.pi(1) == p[0]);
  CHECK(p.pi(3) == p[2]);
  CHECK_THROWS_AS(p.pi(0), InputError);
  CHECK_THROWS_AS(p.pi(4), InputError);
}
