#include "helpers.hpp"
#include "novikov/corpus.hpp"
#include "novikov/errors.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("circle complex") {
  const EquivariantComplex s1(Ring::Q, 1, {{"v"}, {"e"}}, {grm(1, 1, {"t - 1"})});
  CHECK(s1.top_degree() == 1);
  CHECK(s1.euler_characteristic() == 0);
  CHECK(s1.boundary(1)(0, 0) == gr("t - 1"));
  CHECK(s1.boundary(2).size() == 0);
}

TEST_CASE("boundary square is checked") {
  try {
    EquivariantComplex(Ring::Q, 1, {{"v"}, {"e"}, {"f"}}, {grm(1, 1, {"t - 1"}), grm(1, 1, {"1"})});
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.degree == 1);
    CHECK(e.row == 0);
    CHECK(e.col == 0);
  }
  CHECK_THROWS_AS(EquivariantComplex(Ring::Q, 1, {{"v"}, {"e"}}, {grm(1, 2, {"t - 1", "1"})}), InputError);
}

TEST_CASE("Fox calculus on the torus") {
  const EquivariantComplex t = corpus::torus();
  CHECK(t.boundary(1)(0, 0) == gr("t1 - 1", 2, Ring::Z));
  CHECK(t.boundary(1)(0, 1) == gr("t2 - 1", 2, Ring::Z));
  CHECK(t.boundary(2)(0, 0) == gr("1 - t2", 2, Ring::Z));
  CHECK(t.boundary(2)(1, 0) == gr("t1 - 1", 2, Ring::Z));
}

TEST_CASE("Fox calculus on the Klein bottle") {
  const EquivariantComplex k = corpus::klein_bottle();
  CHECK(k.ring() == Ring::Z2);
  CHECK(k.boundary(1)(0, 0).is_zero());
  CHECK(k.boundary(1)(0, 1) == gr("t - 1", 1, Ring::Z2));
  CHECK(k.boundary(2)(0, 0) == gr("1 + t", 1, Ring::Z2));
  CHECK(k.boundary(2)(1, 0).is_zero());
}

TEST_CASE("Fox derivative rules") {
  const IntMatrix id = IntMatrix::Identity(2, 2);
  const auto p = parse_presentation({"x", "y"}, {"x*y", "x^-1", "x^3"});
  // d(xy)/dx = 1, d(xy)/dy = x
  CHECK(fox_derivative(p.relators[0], 0, id, Ring::Z) == gr("1", 2, Ring::Z));
  CHECK(fox_derivative(p.relators[0], 1, id, Ring::Z) == gr("t1", 2, Ring::Z));
  CHECK(fox_derivative(p.relators[1], 0, id, Ring::Z) == gr("-t1^-1", 2, Ring::Z));
  CHECK(fox_derivative(p.relators[2], 0, id, Ring::Z) == gr("1 + t1 + t1^2", 2, Ring::Z));
}

TEST_CASE("presentations") {
  const EquivariantComplex free = fox_boundary(parse_presentation({"x"}, {}), IntMatrix::Identity(1, 1));
  CHECK(free == EquivariantComplex(Ring::Z, 1, {{"v"}, {"x"}}, {grm(1, 1, {"t1 - 1"}, 1, Ring::Z)}));
  CHECK(free_reduce(parse_presentation({"x", "y"}, {"x*y*y^-1*x^-1*y"}).relators[0]).size() == 1);
  IntMatrix bad(1, 2);
  bad << 1, 0;
  CHECK_THROWS_AS(fox_boundary(parse_presentation({"x", "y"}, {"x*y*x*y^-1"}), bad), CoverMismatch);
  CHECK_THROWS_AS(parse_presentation({"x", "x"}, {}), InputError);
  CHECK_THROWS_AS(parse_presentation({"x"}, {"z"}), InputError);
}

TEST_CASE("every corpus complex has d^2 = 0 and augments to ordinary homology") {
  for (const auto& e : corpus::entries()) {
    CHECK_NOTHROW(validate_boundary_square(e.complex.boundaries()));
    const EquivariantComplex base = e.complex.specialized(QuotientMap::augmentation(e.complex.rank()));
    CHECK(base.rank() == 0);
    CHECK_NOTHROW(validate_boundary_square(base.boundaries()));
  }
}

TEST_CASE("scaling leaves the complex alone") {
  const Polytope p({{1, 0}, {0, 1}});
  CHECK(scale_check(corpus::torus(), p, 1));
  CHECK(scale_check(corpus::torus(), p, Rational(7, 3)));
  CHECK(scale_check(corpus::circle(), Polytope({CohomologyClass{1}}), Rational(1, 2)));
  CHECK_THROWS_AS(scale_check(corpus::torus(), p, 0), InputError);
  CHECK_THROWS_AS(scale_check(corpus::torus(), p, -1), InputError);
}
