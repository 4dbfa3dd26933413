#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "scarf/errors.hpp"
#include "scarf/hypersurface.hpp"
#include "scarf/neighborly.hpp"
#include "scarf/random.hpp"
#include "scarf/subdivision.hpp"

#include "oracles.hpp"

using namespace scarf;
using scarf::testing::ps;
using scarf::testing::pt;

namespace {

ExtendedPoint rpt(std::vector<Rat> coords) { return ExtendedPoint::from_rats(std::move(coords)); }

ExtendedPoint random_h_sample(Rng& rng, int n) {
  std::vector<Rat> coords;
  for (int i = 0; i < n; ++i) coords.push_back(rng.rational(40));
  return project_to_hyperplane(rpt(std::move(coords)));
}

ExtendedPoint shift_diag(const ExtendedPoint& p, const Rat& t) {
  std::vector<Rat> coords;
  for (int i = 0; i < p.dim(); ++i) coords.push_back(p[i].value() + t);
  return rpt(std::move(coords));
}

}  // namespace

TEST_CASE("region membership") {
  StaircaseRegion R(2, {pt({1, 1})});
  CHECK(region_contains(R, rpt({Rat(1, 2), Rat(1, 2)})));
  CHECK_FALSE(region_contains(R, pt({2, 0})));
  CHECK(region_contains(R, pt({1, 1})));
}

TEST_CASE("boundary criterion") {
  StaircaseRegion R(2, {pt({1, 1})});
  CHECK(on_boundary(R, rpt({Rat(1), Rat(1, 2)})));
  CHECK_FALSE(on_boundary(R, rpt({Rat(1, 2), Rat(1, 2)})));  // interior

  StaircaseRegion S(2, {pt({1, 4}), pt({2, 3}), pt({3, 2}), pt({4, 1})});
  CHECK(on_boundary(S, pt({2, 3})));
  CHECK_FALSE(on_boundary(S, rpt({Rat(3, 2), Rat(3, 2)})));
  CHECK_FALSE(on_boundary(S, pt({5, 5})));  // outside entirely
}

TEST_CASE("projection along the diagonal") {
  CHECK(project_to_hyperplane(pt({1, 1})) == pt({0, 0}));
  CHECK(project_to_hyperplane(pt({2, 0})) == pt({1, -1}));

  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.range(0, 3));
    std::vector<Rat> coords;
    for (int i = 0; i < n; ++i) coords.push_back(rng.rational(30));
    ExtendedPoint h = project_to_hyperplane(rpt(coords));
    Rat sum(0);
    for (int i = 0; i < n; ++i) sum += h[i].value();
    CHECK(sum == 0);
  }
}

TEST_CASE("raising to the surface") {
  StaircaseRegion R(2, {pt({3, 1}), pt({1, 3})});
  CHECK(raise_to_surface(R, pt({0, 0})) == pt({1, 1}));

  StaircaseRegion single(2, {pt({1, 1})});
  CHECK(raise_to_surface(single, pt({0, 0})) == pt({1, 1}));

  StaircaseRegion empty(2, {});
  CHECK_THROWS_AS(raise_to_surface(empty, pt({0, 0})), InputError);
}

TEST_CASE("raise and project are inverse along every line") {
  Rng rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng.range(0, 2));
    PointSet A = random_generic_antichain(n, 2 + static_cast<int>(rng.range(0, 6)),
                                          6000 + trial);
    StaircaseRegion R = staircase_region(A);
    for (int s = 0; s < 40; ++s) {
      ExtendedPoint h = random_h_sample(rng, n);
      ExtendedPoint p = raise_to_surface(R, h);
      CHECK(on_boundary(R, p));
      CHECK(project_to_hyperplane(p) == h);
    }
  }
}

TEST_CASE("the line meets the boundary only at the raised point") {
  Rng rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng.range(0, 2));
    PointSet A = random_generic_antichain(n, 2 + static_cast<int>(rng.range(0, 6)),
                                          7000 + trial);
    StaircaseRegion R = staircase_region(A);
    for (int s = 0; s < 15; ++s) {
      ExtendedPoint h = random_h_sample(rng, n);
      ExtendedPoint p = raise_to_surface(R, h);
      Rat eps = surface_epsilon(R, p);
      CHECK(eps > 0);
      CHECK_FALSE(on_boundary(R, shift_diag(p, eps)));
      CHECK_FALSE(on_boundary(R, shift_diag(p, -eps)));
    }
  }
}

TEST_CASE("generators lie on the boundary") {
  Rng rng(44);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng.range(0, 2));
    PointSet A = random_generic_antichain(n, 2 + static_cast<int>(rng.range(0, 7)),
                                          8000 + trial);
    StaircaseRegion R = staircase_region(A);
    for (const auto& a : A.points()) CHECK(on_boundary(R, a));
  }
}

TEST_CASE("projection is injective on mesh vertices") {
  Rng rng(45);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng.range(0, 2));
    PointSet A = random_generic_antichain(n, 3 + static_cast<int>(rng.range(0, 5)),
                                          9000 + trial);
    auto gs = geometric_subdivision(A, enumerate_complex(A));
    std::set<ExtendedPoint, ExtendedPointLexLess> images;
    for (const auto& v : gs.mesh.vertices)
      CHECK(images.insert(project_to_hyperplane(v)).second);
  }
}

TEST_CASE("boundary handling of +inf corner coordinates") {
  // Corners of an augmented single-point set: clauses at +inf never bind.
  std::vector<ExtendedCoordinate> c1{ExtendedCoordinate::pos_inf(), ExtendedCoordinate(1)};
  std::vector<ExtendedCoordinate> c2{ExtendedCoordinate(1), ExtendedCoordinate::pos_inf()};
  StaircaseRegion R(2, {ExtendedPoint(c1), ExtendedPoint(c2)});
  CHECK(on_boundary(R, pt({5, 1})));
  CHECK(on_boundary(R, pt({1, 7})));
  CHECK(on_boundary(R, pt({1, 1})));
  CHECK_FALSE(on_boundary(R, pt({0, 0})));   // interior of both bonnets
  CHECK_FALSE(on_boundary(R, pt({5, 2})));   // outside
  CHECK(raise_to_surface(R, pt({2, -2})) == pt({5, 1}));
}
