#include "helpers.hpp"
#include "novikov/corpus.hpp"
#include "novikov/twist.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("twisted complex reinterprets the matrices") {
  const Polytope line({CohomologyClass{1}});
  const TwistedComplex s1 = twisted_complex(corpus::circle(), Subpolytope::full(line));
  CHECK(s1.complex().boundary(1)(0, 0) == gr("t1 - 1", 1, Ring::Z));
  CHECK(s1.ring().cover.target_rank() == 1);

  const Polytope square({{1, 0}, {0, 1}});
  const TwistedComplex full = twisted_complex(corpus::torus(), Subpolytope::full(square));
  const TwistedComplex restricted = twisted_complex(corpus::torus(), Subpolytope(square, {0}));
  CHECK(full.complex() == restricted.complex());
  CHECK(full.complex() == corpus::torus());
  CHECK(restricted.ring().restricted_functionals.size() == 1);
  CHECK(!(full == restricted));
}

TEST_CASE("twisted complex over a diagonal polytope specializes first") {
  const Polytope diagonal({CohomologyClass{1, 1}});
  const TwistedComplex t = twisted_complex(corpus::torus(), Subpolytope::full(diagonal));
  REQUIRE(t.complex().rank() == 1);
  const GroupRingElement s = gr("t1 - 1", 1, Ring::Z);
  const GroupRingElement s_inv = gr("t1^-1 - 1", 1, Ring::Z);
  const auto& d1 = t.complex().boundary(1);
  CHECK(d1(0, 0) == d1(0, 1));
  CHECK((d1(0, 0) == s || d1(0, 0) == s_inv));
}

TEST_CASE("tensor base change matches the twisted complex") {
  const Polytope line({CohomologyClass{1}});
  CHECK(twisted_complex(corpus::circle(), Subpolytope::full(line)) ==
        tensor_base_change(corpus::circle(), Subpolytope::full(line)));
  for (const auto& vertices : std::vector<std::vector<CohomologyClass>>{
           {{1, 0}, {0, 1}}, {{1, 1}}, {{2, 4}, {0, 1}}, {{Rational(1, 2), -1}}, {{0, 0}}}) {
    const Polytope p(vertices);
    for (Index i = 0; i < p.size(); ++i) {
      const Subpolytope face(p, {i});
      CHECK(twisted_complex(corpus::torus(), face) == tensor_base_change(corpus::torus(), face));
      CHECK(twisted_complex(corpus::grid_torus(2), face) == tensor_base_change(corpus::grid_torus(2), face));
    }
  }
  const Polytope klein({CohomologyClass{1}, CohomologyClass{-1}});
  CHECK(twisted_complex(corpus::klein_bottle(), Subpolytope::full(klein)) ==
        tensor_base_change(corpus::klein_bottle(), Subpolytope::full(klein)));
}

TEST_CASE("lifted boundary reads off deck translates") {
  const auto terms = lifted_boundary(corpus::circle(), 1, 0, lv({3}));
  REQUIRE(terms.size() == 2);
  Rational total = 0;
  for (const auto& term : terms) {
    CHECK(term.cell == 0);
    total += term.coefficient;
    CHECK((term.deck == lv({3}) || term.deck == lv({4})));
  }
  CHECK(total == 0);
}

TEST_CASE("zero vertex trick") {
  const Polytope p({{1, 0}});
  const Polytope extended = zero_vertex_extend(p);
  CHECK(extended.size() == 2);
  CHECK(extended.contains_vertex(CohomologyClass{0, 0}));
  CHECK(same_matrix(kernel_lattice(p.vertices()), kernel_lattice(extended.vertices())));
  CHECK(zero_vertex_extend(extended) == extended);

  const Polytope two_four({CohomologyClass{2, 4}});
  const IntMatrix k = kernel_lattice(zero_vertex_extend(two_four).vertices());
  REQUIRE(k.cols() == 1);
  CHECK(2 * k(0, 0) + 4 * k(1, 0) == 0);
  CHECK(std::abs(k(1, 0)) == 1);
}

TEST_CASE("changing lifts conjugates the boundary by monomials") {
  const EquivariantComplex x = corpus::subdivided_circle();
  const EquivariantComplex y = change_lifts(x, {{lv({0}), lv({2})}, {lv({1}), lv({-1})}});
  CHECK_NOTHROW(validate_boundary_square(y.boundaries()));
  CHECK(y.boundary(1)(1, 0) == gr("t1^-1", 1, Ring::Z) * x.boundary(1)(1, 0));
}
