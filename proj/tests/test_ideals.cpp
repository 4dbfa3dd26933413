#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "scarf/errors.hpp"
#include "scarf/hypersurface.hpp"
#include "scarf/ideals.hpp"
#include "scarf/neighborly.hpp"
#include "scarf/random.hpp"
#include "scarf/topology.hpp"

#include "oracles.hpp"

using namespace scarf;
using scarf::testing::ps;
using scarf::testing::pt;

namespace {

MonomialIdeal random_generic_ideal(Rng& rng, int n, int max_gens, std::uint64_t seed) {
  PointSet A = random_generic_antichain(n, 1 + static_cast<int>(rng.range(0, max_gens - 1)),
                                        seed);
  MonomialIdeal I;
  for (int v = 0; v < n; ++v) I.variables.push_back("x" + std::to_string(v + 1));
  for (const auto& p : A.points()) {
    std::vector<long long> e;
    for (int c = 0; c < n; ++c)
      e.push_back(static_cast<long long>(numerator(p[c].value())));
    I.generators.push_back(std::move(e));
  }
  std::sort(I.generators.begin(), I.generators.end());
  return I;
}

/// Every subset judged by the literal membership clause.
SimplicialComplex brute_literal_complex(const MonomialIdeal& I) {
  const int n = static_cast<int>(I.generators.size());
  SimplicialComplex K(n);
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<int> members;
    std::vector<long long> lcm(I.nvars(), 0);
    for (int i = 0; i < n; ++i)
      if (mask & (1UL << i)) {
        members.push_back(i);
        for (int v = 0; v < I.nvars(); ++v) lcm[v] = std::max(lcm[v], I.generators[i][v]);
      }
    bool keep = true;
    for (const auto& g : I.generators) {
      bool covers = false;
      for (int v = 0; v < I.nvars() && !covers; ++v) covers = g[v] >= lcm[v];
      if (!covers) { keep = false; break; }
    }
    if (keep) K.insert_unchecked(members);
  }
  return K;
}

}  // namespace

TEST_CASE("monomial parsing") {
  MonomialIdeal I = parse_ideal("x^2, x*y, y^2", {"x", "y"});
  REQUIRE(I.generators.size() == 3);
  CHECK(I.generators[0] == std::vector<long long>{2, 0});
  CHECK(I.generators[1] == std::vector<long long>{1, 1});
  CHECK(I.generators[2] == std::vector<long long>{0, 2});

  MonomialIdeal J = parse_ideal("x", {"x", "y", "z"});
  REQUIRE(J.generators.size() == 1);
  CHECK(J.generators[0] == std::vector<long long>{1, 0, 0});

  MonomialIdeal unit = parse_ideal("1", {"x"});
  CHECK(unit.generators[0] == std::vector<long long>{0});

  MonomialIdeal multi = parse_ideal("x^2*y*x; z^3", {"x", "y", "z"});
  CHECK(multi.generators[0] == std::vector<long long>{3, 1, 0});
  CHECK(multi.generators[1] == std::vector<long long>{0, 0, 3});
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_WITH_AS(parse_ideal("x^-1", {"x"}), doctest::Contains("position"), InputError);
  CHECK_THROWS_AS(parse_ideal("x*w", {"x", "y"}), InputError);
  CHECK_THROWS_AS(parse_ideal("x,,y", {"x", "y"}), InputError);
  CHECK_THROWS_AS(parse_ideal("2*x", {"x"}), InputError);
  CHECK_THROWS_AS(parse_ideal("x,", {"x"}), InputError);
  CHECK_THROWS_AS(parse_ideal("x", {}), InputError);
}

TEST_CASE("minimization keeps the divisibility-minimal generators") {
  MonomialIdeal I;
  I.variables = {"x", "y"};
  I.generators = {{2, 0}, {1, 1}, {2, 2}};
  MonomialIdeal M = minimize(I);
  REQUIRE(M.generators.size() == 2);
  CHECK(M.generators[0] == std::vector<long long>{1, 1});
  CHECK(M.generators[1] == std::vector<long long>{2, 0});
  CHECK(is_minimized(M));

  MonomialIdeal anti;
  anti.variables = {"x", "y"};
  anti.generators = {{0, 2}, {2, 0}};
  CHECK(minimize(anti).generators == anti.generators);

  MonomialIdeal empty;
  empty.variables = {"x"};
  CHECK(minimize(empty).generators.empty());
}

TEST_CASE("generator complex with the literal membership clause") {
  MonomialIdeal I = minimize(parse_ideal("x^2, x*y, y^2", {"x", "y"}));
  SimplicialComplex K = buchberger_complex(I);
  CHECK(K.face_count_with_size(1) == 3);
  CHECK(K.face_count_with_size(2) == 2);
  // vertices sorted by exponent: (0,2)=y^2, (1,1)=xy, (2,0)=x^2
  CHECK(K.contains({0, 1}));
  CHECK(K.contains({1, 2}));
  CHECK_FALSE(K.contains({0, 2}));

  MonomialIdeal principal = minimize(parse_ideal("x^3*y", {"x", "y"}));
  SimplicialComplex Kp = buchberger_complex(principal);
  CHECK(Kp.face_count() == 1);

  CHECK_THROWS_AS(buchberger_complex(parse_ideal("x, x*y", {"x", "y"})), InputError);
}

TEST_CASE("literal clause equals the join test on every subset") {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng.range(0, 2));
    MonomialIdeal I = random_generic_ideal(rng, n, 8, 19000 + trial);
    CHECK(buchberger_complex(I) == brute_literal_complex(I));
    CHECK(brute_literal_complex(I) == scarf::testing::brute_complex(I.generator_points()));
  }
}

TEST_CASE("the literal clause needs no genericity") {
  // non-generic but minimized: shared exponents without a witness
  MonomialIdeal I;
  I.variables = {"x", "y", "z"};
  I.generators = {{0, 2, 1}, {1, 1, 2}, {2, 0, 1}};
  REQUIRE(is_minimized(I));
  CHECK_FALSE(is_generic(I.generator_points()).generic);
  CHECK(buchberger_complex(I) == brute_literal_complex(I));
}

TEST_CASE("Buchberger graph in three variables") {
  MonomialIdeal I = minimize(parse_ideal("x^4*z, y^3*z^2, x*y^2", {"x", "y", "z"}));
  REQUIRE(is_generic(I.generator_points()).generic);
  GeometricMesh mesh = buchberger_graph(I);
  CHECK(mesh.dim == 3);
  SimplicialComplex K = buchberger_complex(I, 1);
  long long edges = K.face_count_with_size(2);
  CHECK(static_cast<long long>(mesh.cells[1].size()) == 2 * edges);

  // segment midpoints stay on the staircase surface
  StaircaseRegion R = staircase_region(I.generator_points());
  for (const auto& seg : mesh.cells[1]) {
    std::vector<Rat> mid;
    for (int c = 0; c < 3; ++c)
      mid.push_back((mesh.vertices[seg[0]][c].value() + mesh.vertices[seg[1]][c].value()) / 2);
    CHECK(on_boundary(R, ExtendedPoint::from_rats(std::move(mid))));
  }

  MonomialIdeal I2 = minimize(parse_ideal("x^2, y^2", {"x", "y"}));
  CHECK_THROWS_AS(buchberger_graph(I2), InputError);  // needs 3 variables

  MonomialIdeal lone = minimize(parse_ideal("x*y*z", {"x", "y", "z"}));
  GeometricMesh single = buchberger_graph(lone);
  CHECK(single.cells[0].size() == 1);
  CHECK(single.cells[1].empty());
}

TEST_CASE("chain complex of the squarefree corner example") {
  MonomialIdeal I = minimize(parse_ideal("x^2, x*y, y^2", {"x", "y"}));
  GradedChainComplex C = scarf_chain_complex(I);
  CHECK(C.minimality_claimed);
  CHECK(C.ranks() == std::vector<long long>{3, 2});

  std::set<ExtendedPoint, ExtendedPointLexLess> deg1(C.multidegrees[1].begin(),
                                                     C.multidegrees[1].end());
  CHECK(deg1.count(pt({2, 0})) == 1);
  CHECK(deg1.count(pt({1, 1})) == 1);
  CHECK(deg1.count(pt({0, 2})) == 1);
  std::set<ExtendedPoint, ExtendedPointLexLess> deg2(C.multidegrees[2].begin(),
                                                     C.multidegrees[2].end());
  CHECK(deg2.count(pt({2, 1})) == 1);
  CHECK(deg2.count(pt({1, 2})) == 1);

  MonomialIdeal principal = minimize(parse_ideal("x^5", {"x", "y"}));
  CHECK(scarf_chain_complex(principal).ranks() == std::vector<long long>{1});
}

TEST_CASE("boundaries square to zero and respect multidegrees") {
  Rng rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.range(0, 1));
    MonomialIdeal I = random_generic_ideal(rng, n, 7, 20000 + trial);
    GradedChainComplex C = scarf_chain_complex(I);  // verifies d(d) = 0 itself
    PointSet G = I.generator_points();
    for (std::size_t d = 2; d < C.faces.size(); ++d) {
      for (std::size_t col = 0; col < C.faces[d].size(); ++col) {
        const ExtendedPoint& big = C.multidegrees[d][col];
        for (std::size_t row = 0; row < C.faces[d - 1].size(); ++row) {
          if (C.boundaries[d][row][col] == 0) continue;
          // connected faces are nested and their degrees strictly increase
          const auto& small = C.faces[d - 1][row];
          const auto& large = C.faces[d][col];
          CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
          CHECK(point_less(C.multidegrees[d - 1][row], big));
        }
        // the degree of a face is the join of its facets' degrees
        std::vector<ExtendedPoint> facet_degrees;
        for (std::size_t row = 0; row < C.faces[d - 1].size(); ++row)
          if (C.boundaries[d][row][col] != 0)
            facet_degrees.push_back(C.multidegrees[d - 1][row]);
        if (!facet_degrees.empty()) CHECK(join(facet_degrees) == big);
      }
    }
  }
}

TEST_CASE("Betti oracle on the corner example") {
  MonomialIdeal I = minimize(parse_ideal("x^2, x*y, y^2", {"x", "y"}));
  BettiTable table = betti_oracle(I);
  CHECK(table.rank(0, pt({2, 0})) == 1);
  CHECK(table.rank(0, pt({1, 1})) == 1);
  CHECK(table.rank(0, pt({0, 2})) == 1);
  CHECK(table.rank(1, pt({2, 1})) == 1);
  CHECK(table.rank(1, pt({1, 2})) == 1);
  CHECK(table.entries.size() == 5);
  CHECK(table.rank(0, pt({2, 2})) == 0);

  MonomialIdeal principal = minimize(parse_ideal("x^4", {"x", "y"}));
  BettiTable tp = betti_oracle(principal);
  REQUIRE(tp.entries.size() == 1);
  CHECK(tp.entries[0].index == 0);
  CHECK(tp.entries[0].rank == 1);
}

TEST_CASE("oracle support equals the generic chain complex") {
  Rng rng(73);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng.range(0, 1));
    MonomialIdeal I = random_generic_ideal(rng, n, 7, 21000 + trial);
    GradedChainComplex C = scarf_chain_complex(I);
    REQUIRE(C.minimality_claimed);
    BettiTable table = betti_oracle(I);
    long long scarf_count = 0;
    for (std::size_t d = 1; d < C.faces.size(); ++d) {
      scarf_count += static_cast<long long>(C.faces[d].size());
      for (const auto& m : C.multidegrees[d])
        CHECK(table.rank(static_cast<int>(d) - 1, m) == 1);
    }
    CHECK(static_cast<long long>(table.entries.size()) == scarf_count);
    for (const auto& e : table.entries) CHECK(e.rank == 1);
  }
}

TEST_CASE("oracle scale guard") {
  MonomialIdeal I;
  I.variables = {"a", "b", "c", "d", "e"};
  I.generators = {{1, 0, 0, 0, 0}};
  CHECK_THROWS_AS(betti_oracle(I), ScaleError);
}

TEST_CASE("non-generic ideals get a complex without the minimality claim") {
  MonomialIdeal I;
  I.variables = {"x", "y", "z"};
  I.generators = {{0, 2, 1}, {1, 1, 2}, {2, 0, 1}};
  GradedChainComplex C = scarf_chain_complex(I);
  CHECK_FALSE(C.minimality_claimed);
  CHECK(!C.faces[1].empty());
}
