#include "helpers.hpp"
#include "novikov/errors.hpp"
#include "novikov/random.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("period evaluation") {
  CHECK(period_eval(CohomologyClass{Rational(1, 2), Rational(1, 3)}, lv({2, 3})) == 2);
  CHECK(period_eval(CohomologyClass{Rational(5, 7), -3}, lv({0, 0})) == 0);
  CHECK(period_eval(CohomologyClass{1, 0}, lv({0, 5})) == 0);
  CHECK_THROWS_AS(period_eval(CohomologyClass{1, 0}, lv({1, 2, 3})), InputError);
}

TEST_CASE("polytope minimum period") {
  CHECK(polytope_min_period(Polytope({{1, 0}, {0, 1}}), lv({2, -1})) == -1);
  CHECK(polytope_min_period(Polytope({{1, 0}}), lv({3, 7})) == 3);
  CHECK(polytope_min_period(Polytope({{1, 1}, {2, 0}}), lv({1, 1})) == 2);
}

TEST_CASE("polytope deduplicates and validates") {
  const Polytope p({{1, 0}, {1, 0}, {Rational(2, 2), 0}, {0, 1}});
  CHECK(p.size() == 2);
  CHECK_THROWS_AS(Polytope({{1, 0}, {1}}), InputError);
  CHECK_THROWS_AS(Polytope(std::vector<CohomologyClass>{}), InputError);
  const Rational bad[] = {Rational(1, 2), Rational(1, 3)};
  CHECK_THROWS_AS(p.convex_combination(bad), InputError);
  const Rational negative[] = {2, -1};
  CHECK_THROWS_AS(p.convex_combination(negative), InputError);
  CHECK_THROWS_AS(Subpolytope(p, {}), InputError);
  CHECK_THROWS_AS(Subpolytope(p, {5}), InputError);
}

namespace {

// Independent check: every basis vector is annihilated, and the basis has
// r - rank(periods) elements.
void check_kernel(std::vector<CohomologyClass> classes, Index expected_size) {
  const IntMatrix k = kernel_lattice(classes);
  CHECK(k.cols() == expected_size);
  for (Index j = 0; j < k.cols(); ++j)
    for (const auto& a : classes) CHECK(period_eval(a, k.col(j)) == 0);
}

}  // namespace

TEST_CASE("kernel lattice") {
  const CohomologyClass e1{1, 0};
  const CohomologyClass both[] = {CohomologyClass{1, 0}, CohomologyClass{0, 1}};
  const CohomologyClass first[] = {e1};
  IntMatrix k = kernel_lattice(first);
  REQUIRE(k.cols() == 1);
  CHECK(std::abs(k(1, 0)) == 1);
  CHECK(k(0, 0) == 0);
  CHECK(kernel_lattice(both).cols() == 0);

  // (2,4): kernel is generated by (2,-1) up to sign; a non-primitive answer
  // such as (4,-2) must not appear.
  const CohomologyClass two_four[] = {CohomologyClass{2, 4}};
  k = kernel_lattice(two_four);
  REQUIRE(k.cols() == 1);
  CHECK(std::abs(k(0, 0)) == 2);
  CHECK(std::abs(k(1, 0)) == 1);
  CHECK(2 * k(0, 0) + 4 * k(1, 0) == 0);

  check_kernel({CohomologyClass{Rational(1, 2), Rational(1, 3), 0}}, 2);
  check_kernel({CohomologyClass{1, 1, 1}, CohomologyClass{2, 2, 2}}, 2);
  check_kernel({CohomologyClass{0, 0}}, 2);
}

TEST_CASE("quotient map") {
  const CohomologyClass e1[] = {CohomologyClass{1, 0}};
  QuotientMap q(e1);
  CHECK(q.target_rank() == 1);
  CHECK(std::abs(q.apply(lv({3, 7}))(0)) == 3);

  const CohomologyClass both[] = {CohomologyClass{1, 0}, CohomologyClass{0, 1}};
  q = QuotientMap(both);
  CHECK(q.target_rank() == 2);
  CHECK(same_matrix(q.matrix(), IntMatrix::Identity(2, 2)));

  // (2,4): (x, y) -> x + 2y up to sign, kernel annihilated.
  const CohomologyClass two_four[] = {CohomologyClass{2, 4}};
  q = QuotientMap(two_four);
  REQUIRE(q.target_rank() == 1);
  CHECK(std::abs(q.matrix()(0, 0)) == 1);
  CHECK(q.matrix()(0, 1) == 2 * q.matrix()(0, 0));
  CHECK(q.apply(lv({2, -1}))(0) == 0);
  // The induced period is injective on the image.
  const Rational induced = q.induced(CohomologyClass{2, 4}).periods()(0);
  CHECK(induced != 0);
  CHECK(period_eval(CohomologyClass{2, 4}, lv({1, 1})) == induced * Rational(q.apply(lv({1, 1}))(0)));
}

TEST_CASE("quotient map is surjective with the right kernel on random classes") {
  std::mt19937_64 engine(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Index r = 1 + static_cast<Index>(uniform_below(engine, 4));
    const Index count = 1 + static_cast<Index>(uniform_below(engine, 3));
    std::vector<CohomologyClass> classes;
    for (Index c = 0; c < count; ++c) {
      RationalVector v(r);
      for (Index i = 0; i < r; ++i)
        v(i) = Rational(static_cast<long>(uniform_below(engine, 7)) - 3, 1 + static_cast<long>(uniform_below(engine, 3)));
      classes.emplace_back(v);
    }
    const QuotientMap q(classes);
    CHECK(q.target_rank() + q.kernel().cols() == r);
    for (Index j = 0; j < q.kernel().cols(); ++j) CHECK(q.apply(q.kernel().col(j)).isZero());
    // Each class factors through q.
    for (const auto& a : classes) {
      const CohomologyClass induced = q.induced(a);
      for (Index i = 0; i < r; ++i) {
        LatticeVector e = LatticeVector::Zero(r);
        e(i) = 1;
        CHECK(period_eval(a, e) == period_eval(induced, q.apply(e)));
      }
    }
  }
}

TEST_CASE("class ray is primitive and scale invariant") {
  const CohomologyClass a{Rational(2, 3), Rational(-4, 3)};
  CHECK(a.ray() == lv({1, -2}));
  CHECK(a.scaled(Rational(7, 5)).ray() == a.ray());
  CHECK(CohomologyClass::zero(3).ray() == lv({0, 0, 0}));
}

TEST_CASE("hermite normal form") {
  IntegerMatrix m(2, 2);
  m << 2, 4, 3, 6;
  const IntegerMatrix h = hermite_normal_form(m);
  CHECK(h.rows() == 1);
  CHECK(h(0, 0) == 1);
  CHECK(h(0, 1) == 2);
}
