#include "helpers.hpp"
#include "novikov/corpus.hpp"
#include "novikov/errors.hpp"
#include "novikov/homology.hpp"
#include "novikov/morse.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("matching strategies") {
  CHECK(acyclic_matching(corpus::grid_torus(2), 1, MatchingStrategy::None).empty());
  CHECK(acyclic_matching(corpus::subdivided_circle(), 1).size() == 1);
  // Standard torus incidences are t1 - 1 and the like: nothing is a unit.
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(acyclic_matching(corpus::torus(), seed).empty());
}

TEST_CASE("matchings are deterministic per seed") {
  const auto x = corpus::grid_torus(3);
  CHECK(acyclic_matching(x, 42) == acyclic_matching(x, 42));
}

TEST_CASE("invalid matchings are rejected") {
  const auto x = corpus::subdivided_circle();
  // v0 and e0 have incidence -1, v0 and e1 have incidence t1.
  CHECK_NOTHROW(validate_matching(x, Matching({{0, 0, 0}})));
  CHECK_NOTHROW(validate_matching(x, Matching({{0, 0, 1}})));
  CHECK_THROWS(validate_matching(x, Matching({{0, 0, 0}, {0, 0, 1}})));
  // Both pairs together close a gradient cycle v0 - e0 - v1 - e1 - v0.
  CHECK_THROWS_AS(validate_matching(x, Matching({{0, 0, 0}, {0, 1, 1}})), MorseCycleError);
  const auto torus = corpus::torus();
  CHECK_THROWS(validate_matching(torus, Matching({{0, 0, 0}})));
}

TEST_CASE("V-path reduction of the subdivided circle") {
  const auto x = corpus::subdivided_circle();
  CHECK(vpath_boundary(x, Matching()) == x);
  const Matching m = acyclic_matching(x, 1);
  const EquivariantComplex y = vpath_boundary(x, m);
  REQUIRE(y.cell_count(0) == 1);
  REQUIRE(y.cell_count(1) == 1);
  // Up to a unit the single entry is t - 1.
  const GroupRingElement d = y.boundary(1)(0, 0);
  CHECK(d.term_count() == 2);
  const auto ratio = exact_divide(d, gr("t1 - 1", 1, Ring::Z));
  REQUIRE(ratio);
  CHECK(ratio->is_unit_monomial());
}

TEST_CASE("a cone collapses to a point") {
  const auto cone = triangle();
  bool collapsed = false;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matching m = acyclic_matching(cone, seed);
    const EquivariantComplex y = vpath_boundary(cone, m);
    CHECK(novikov_betti(y, CohomologyClass{0}).betti == std::vector<Index>{1, 0, 0});
    collapsed = collapsed || (y.cell_count(0) == 1 && y.cell_count(1) == 0 && y.cell_count(2) == 0);
  }
  CHECK(collapsed);
}

TEST_CASE("elimination and V-path agree and give chain equivalences") {
  for (const auto& x : {corpus::grid_torus(2), corpus::grid_torus(3), corpus::subdivided_circle(), triangle()})
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Matching m = acyclic_matching(x, seed);
      const MorseReduction r = reduce_by_elimination(x, m);
      CHECK(r.reduced == vpath_boundary(x, m));
      CHECK(is_chain_map(x, r.reduced, r.projection));
      CHECK(is_chain_map(r.reduced, x, r.inclusion));
      // projection after inclusion is the identity on the Morse complex
      for (Index i = 0; i <= r.reduced.top_degree(); ++i) {
        const GroupRingMatrix pi = multiply(r.projection[static_cast<std::size_t>(i)], r.inclusion[static_cast<std::size_t>(i)]);
        for (Index a = 0; a < pi.rows(); ++a)
          for (Index b = 0; b < pi.cols(); ++b) CHECK(pi(a, b) == GroupRingElement::constant(x.ring(), x.rank(), a == b ? 1 : 0));
      }
    }
}

TEST_CASE("Morse reduction preserves Novikov Betti numbers") {
  const auto x = corpus::grid_torus(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const EquivariantComplex y = vpath_boundary(x, acyclic_matching(x, seed));
    CHECK(y.euler_characteristic() == 0);
    for (const auto& a : {CohomologyClass{0, 0}, CohomologyClass{1, 0}, CohomologyClass{2, -3}})
      CHECK(novikov_betti(y, a).betti == novikov_betti(x, a).betti);
  }
}
