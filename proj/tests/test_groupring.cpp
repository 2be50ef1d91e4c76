#include "helpers.hpp"
#include "novikov/errors.hpp"
#include "novikov/random.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("parse and print") {
  CHECK(gr("3*t1^2*t2^-1 + 1", 2).to_string() == "3*t1^2*t2^-1 + 1");
  CHECK(gr("t - 1") == gr("t1 - 1"));
  CHECK(gr("(t1 + 1)^2", 1) == gr("t1^2 + 2*t1 + 1", 1));
  CHECK(gr("t1^-1", 1) * gr("t1", 1) == gr("1", 1));
  CHECK(gr("1/2*t1 - 3/4", 1).coefficient(lv({0})) == Rational(-3, 4));
  CHECK(gr("0").is_zero());
  CHECK_THROWS_AS(gr("t3", 2), InputError);
  CHECK_THROWS_AS(gr("(t1 + 1)^-1", 1), InputError);
  CHECK_THROWS_AS(gr("t1 +", 1), InputError);
  CHECK_THROWS_AS(gr("1/2", 1, Ring::Z), InputError);
}

TEST_CASE("ring arithmetic examples") {
  const GroupRingElement one = GroupRingElement::constant(Ring::Q, 1, 1);
  const GroupRingElement x = gr("2*t1^3 - t1^-2 + 5");
  CHECK(gr_arith(one, x, GroupRingOp::Mul) == x);
  CHECK(gr_arith(gr("t1 - 1"), gr("t1 + 1"), GroupRingOp::Mul) == gr("t1^2 - 1"));
  CHECK(gr_arith(gr("1 + t", 1, Ring::Z2), gr("1 + t", 1, Ring::Z2), GroupRingOp::Mul) == gr("1 + t^2", 1, Ring::Z2));
  CHECK(gr_arith(x, x, GroupRingOp::Neg) == -x);
  CHECK_THROWS_AS(gr_arith(gr("t1"), gr("t1", 2), GroupRingOp::Add), InputError);
  CHECK_THROWS_AS(gr_arith(gr("t1"), gr("t1", 1, Ring::Z2), GroupRingOp::Add), InputError);
}

TEST_CASE("Z2 coefficients reduce mod 2") {
  CHECK(gr("2*t + 3", 1, Ring::Z2) == gr("1", 1, Ring::Z2));
  CHECK((gr("t", 1, Ring::Z2) + gr("t", 1, Ring::Z2)).is_zero());
  CHECK(-gr("t", 1, Ring::Z2) == gr("t", 1, Ring::Z2));
}

namespace {

GroupRingElement random_element(std::mt19937_64& engine, Index rank, Ring ring) {
  GroupRingElement out(ring, rank);
  const int terms = static_cast<int>(uniform_below(engine, 4));
  for (int k = 0; k < terms; ++k) {
    LatticeVector e(rank);
    for (Index i = 0; i < rank; ++i) e(i) = static_cast<std::int64_t>(uniform_below(engine, 5)) - 2;
    out += GroupRingElement::monomial(ring, e, Rational(static_cast<long>(uniform_below(engine, 7)) - 3));
  }
  return out;
}

}  // namespace

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 engine(11);
  for (Ring ring : {Ring::Z, Ring::Q, Ring::Z2})
    for (int trial = 0; trial < 60; ++trial) {
      const Index rank = 1 + static_cast<Index>(uniform_below(engine, 3));
      const auto a = random_element(engine, rank, ring);
      const auto b = random_element(engine, rank, ring);
      const auto c = random_element(engine, rank, ring);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
    }
}

TEST_CASE("specialization") {
  const CohomologyClass e1[] = {CohomologyClass{1, 0}};
  const QuotientMap first(e1);
  const GroupRingElement s = gr_specialize(gr("t1 - 1", 2), first);
  CHECK(s.rank() == 1);
  CHECK((s == gr("t1 - 1") || s == gr("t1^-1 - 1")));

  CHECK(gr_specialize(gr("t1*t2^-1", 2), QuotientMap::augmentation(2)) == gr("1", 0));

  // q(e1) = q(e2): the two terms collide and cancel.
  const CohomologyClass diagonal[] = {CohomologyClass{1, 1}};
  CHECK(gr_specialize(gr("t1 - t2", 2), QuotientMap(diagonal)).is_zero());
}

TEST_CASE("specialization is a ring homomorphism") {
  std::mt19937_64 engine(3);
  const CohomologyClass classes[] = {CohomologyClass{2, -1, 3}};
  const QuotientMap q(classes);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_element(engine, 3, Ring::Q);
    const auto b = random_element(engine, 3, Ring::Q);
    CHECK(gr_specialize(a * b, q) == gr_specialize(a, q) * gr_specialize(b, q));
    CHECK(gr_specialize(a + b, q) == gr_specialize(a, q) + gr_specialize(b, q));
  }
}

TEST_CASE("exact division") {
  const auto q = exact_divide(gr("t1^2 - 1"), gr("t1 - 1"));
  REQUIRE(q);
  CHECK(*q == gr("t1 + 1"));
  CHECK(!exact_divide(gr("t1^2 + 1"), gr("t1 - 1")));
  const auto laurent = exact_divide(gr("t1^-1 - t1", 1), gr("t1^-2 - 1", 1));
  REQUIRE(laurent);
  CHECK(*laurent == gr("t1"));
  std::mt19937_64 engine(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_element(engine, 2, Ring::Q);
    const auto b = random_element(engine, 2, Ring::Q);
    if (b.is_zero()) continue;
    const auto back = exact_divide(a * b, b);
    REQUIRE(back);
    CHECK(*back == a);
  }
}

TEST_CASE("units") {
  CHECK(gr("-t1^2*t2", 2).is_unit_monomial());
  CHECK(!gr("2*t1", 1).is_unit_monomial());
  CHECK(gr("2*t1", 1).is_monomial());
  CHECK(gr("-t1^2*t2", 2).monomial_inverse() == gr("-t1^-2*t2^-1", 2));
  CHECK_THROWS(gr("t1 + 1").monomial_inverse());
}
