#include "helpers.hpp"
#include "novikov/corpus.hpp"
#include "novikov/errors.hpp"
#include "novikov/homology.hpp"
#include "novikov/io.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace testing;

using Betti = std::vector<Index>;

TEST_CASE("Novikov Betti numbers of the corpus") {
  CHECK(novikov_betti(corpus::circle(), CohomologyClass{1}).betti == Betti{0, 0});
  CHECK(novikov_betti(corpus::circle(), CohomologyClass{0}).betti == Betti{1, 1});
  CHECK(novikov_betti(corpus::torus(), CohomologyClass{1, 1}).betti == Betti{0, 0, 0});
  CHECK(novikov_betti(corpus::torus(), CohomologyClass{0, 0}).betti == Betti{1, 2, 1});
  CHECK(novikov_betti(corpus::klein_bottle(), CohomologyClass{1}).betti == Betti{0, 0, 0});
  CHECK(novikov_betti(corpus::klein_bottle(), CohomologyClass{0}).betti == Betti{1, 2, 1});
  CHECK(novikov_betti(corpus::genus_two(), CohomologyClass{1, 0, 0, 0}).betti == Betti{0, 2, 0});
  CHECK(novikov_betti(corpus::point(), CohomologyClass{0}).betti == Betti{1});
  CHECK_THROWS_AS(novikov_betti(corpus::torus(), CohomologyClass{1}), InputError);
}

TEST_CASE("T2 over the diagonal class by hand") {
  // t1, t2 -> s: d1 = [s-1, s-1], d2 = [1-s, s-1]^T, each of rank one.
  const CohomologyClass diagonal[] = {CohomologyClass{1, 1}};
  const EquivariantComplex y = corpus::torus().specialized(QuotientMap(diagonal));
  CHECK(matrix_rank_fraction_field(y.boundary(1)).rank == 1);
  CHECK(matrix_rank_fraction_field(y.boundary(2)).rank == 1);
}

TEST_CASE("Klein bottle over Z is different from Z2") {
  // Over Q the relator column is 1 - t^... and x-column does not vanish.
  IntMatrix deck(1, 2);
  deck << 0, 1;
  const auto kq = fox_boundary(parse_presentation({"x", "y"}, {"x*y*x*y^-1"}), deck, Ring::Q);
  CHECK(novikov_betti(kq, CohomologyClass{0}).betti == Betti{1, 1, 0});
  CHECK(novikov_betti(kq, CohomologyClass{1}).betti == Betti{0, 0, 0});
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic(corpus::circle()) == 0);
  CHECK(euler_characteristic(corpus::torus()) == 0);
  CHECK(euler_characteristic(corpus::point()) == 1);
  CHECK(euler_characteristic(corpus::genus_two()) == -2);
  for (const auto& e : corpus::entries())
    for (const auto& a : e.classes) CHECK(novikov_betti(e.complex, a).alternating_sum() == e.complex.euler_characteristic());
}

TEST_CASE("class reports are scale invariant") {
  for (const auto& e : corpus::entries())
    for (const auto& a : e.classes)
      for (const Rational& r : {Rational(1, 2), Rational(3), Rational(7, 5)})
        CHECK(to_json(novikov_betti(e.complex, a)).dump() == to_json(novikov_betti(e.complex, a.scaled(r))).dump());
}

TEST_CASE("polytope Betti numbers") {
  const Polytope square({{1, 0}, {0, 1}});
  CHECK(polytope_betti(corpus::torus(), Subpolytope::full(square)).betti == Betti{0, 0, 0});
  const Polytope origin({CohomologyClass{0, 0}});
  CHECK(polytope_betti(corpus::torus(), Subpolytope::full(origin)).betti == Betti{1, 2, 1});
  const Polytope line({CohomologyClass{1}, CohomologyClass{2}});
  const auto r = polytope_betti(corpus::circle(), Subpolytope(line, {0}));
  CHECK(r.betti == Betti{0, 0});
  CHECK(r.ring.kind == "polytope");
  CHECK(!r.note.empty());
  CHECK_THROWS_AS(polytope_betti(corpus::circle(), Subpolytope::full(square)), InputError);
}

TEST_CASE("truncated oracle") {
  auto s1 = truncated_homology_oracle(corpus::circle(), CohomologyClass{1}, 10);
  CHECK(s1.boundary_ranks == Betti{1});
  CHECK(s1.betti == Betti{0, 0});
  CHECK(truncated_homology_oracle(corpus::torus(), CohomologyClass{1, 0}, 10).betti == Betti{0, 0, 0});
  const EquivariantComplex flat(Ring::Q, 1, {{"v"}, {"e", "f"}}, {grm(1, 2, {"0", "0"})});
  const auto zero = truncated_homology_oracle(flat, CohomologyClass{1}, 10);
  CHECK(zero.boundary_ranks == Betti{0});
  CHECK(zero.betti == Betti{1, 2});
  CHECK_THROWS_AS(truncated_homology_oracle(corpus::torus(), CohomologyClass{0, 0}, 10), InputError);
  CHECK_THROWS_AS(truncated_homology_oracle(corpus::circle(), CohomologyClass{1}, -1), IncreaseOrder);
}

TEST_CASE("oracle handles negative classes and far pivots") {
  // d1 = [t^5 - 1, t^-3 + 2]: needs enough precision to see the pivot.
  const EquivariantComplex x(Ring::Q, 1, {{"v"}, {"e", "f"}}, {grm(1, 2, {"t^5 - 1", "t^-3 + 2"})});
  for (const auto& a : {CohomologyClass{1}, CohomologyClass{-1}, CohomologyClass{Rational(2, 3)}}) {
    const auto stable = oracle_until_stable(x, a);
    CHECK(stable.result.betti == novikov_betti(x, a).betti);
    CHECK(stable.order <= 32);
  }
}

TEST_CASE("oracle agrees on random rank-one complexes") {
  std::mt19937_64 engine(17);
  for (int trial = 0; trial < 20; ++trial) {
    // d2 = u * w, d1 = v with v * u = 0 by construction: d1 = [p, -q], d2 = [q, p]^T * r.
    auto random_poly = [&]() {
      GroupRingElement out(Ring::Q, 1);
      for (int k = 0; k < 3; ++k)
        out += GroupRingElement::monomial(Ring::Q, lv({static_cast<std::int64_t>(uniform_below(engine, 5)) - 2}),
                                          Rational(static_cast<long>(uniform_below(engine, 5)) - 2));
      return out;
    };
    const auto p = random_poly(), q = random_poly(), r = random_poly();
    GroupRingMatrix d1(1, 2), d2(2, 1);
    d1 << p, -q;
    d2 << q * r, p * r;
    const EquivariantComplex x(Ring::Q, 1, {{"v"}, {"e", "f"}, {"s"}}, {d1, d2});
    for (const auto& a : {CohomologyClass{1}, CohomologyClass{-2}}) {
      const auto stable = oracle_until_stable(x, a);
      CHECK(stable.result.betti == novikov_betti(x, a).betti);
    }
  }
}

TEST_CASE("main theorem square") {
  const Polytope square({{1, 0}, {0, 1}});
  const Rational a[] = {1, 0};
  const Rational b[] = {Rational(1, 2), Rational(1, 2)};
  const auto report = main_theorem_check(corpus::torus(), Subpolytope::full(square), a, b);
  CHECK(report.passed());
  CHECK(report.full_from_a.betti == Betti{0, 0, 0});
  CHECK(report.full_from_b.betti == Betti{0, 0, 0});
  CHECK(report.b == CohomologyClass{Rational(1, 2), Rational(1, 2)});
  CHECK(main_theorem_check(corpus::torus(), Subpolytope::full(square), a, a).passed());

  const Polytope line({CohomologyClass{1}, CohomologyClass{-2}});
  const Rational c[] = {Rational(1, 4), Rational(3, 4)};
  const auto circle = main_theorem_check(corpus::subdivided_circle(), Subpolytope(line, {1}), a, c, 1, 2);
  CHECK(circle.passed());
  CHECK(circle.restricted_from_a.betti == circle.restricted_from_b.betti);

  const Rational bad[] = {Rational(1, 2), Rational(1, 3)};
  CHECK_THROWS_AS(main_theorem_check(corpus::torus(), Subpolytope::full(square), a, bad), InputError);
}

TEST_CASE("rational approximation") {
  auto f = rational_approximation(CohomologyClass{1, 1}, Rational(1, 10), 2);
  CHECK(f.image_rank == 1);
  CHECK(f.semi_regular());

  f = rational_approximation(CohomologyClass{1, 0}, 1, 2);
  REQUIRE(f.classes.size() == 1);
  CHECK(f.classes[0].periods()(1) == 0);
  CHECK(f.kernel_containing);

  f = rational_approximation(CohomologyClass{0, 0}, 1, 2);
  CHECK(f.classes.empty());
  CHECK(f.image_rank == 0);

  f = rational_approximation(CohomologyClass{Rational(3, 7), Rational(-5, 2), 4}, Rational(1, 100), 3);
  CHECK(f.semi_regular());
  for (const auto& b : f.classes) CHECK(f.common_denominator % boost::multiprecision::denominator(b.periods()(0)) == 0);
  CHECK_THROWS_AS(rational_approximation(CohomologyClass{1, 1}, 0, 2), InputError);
}

TEST_CASE("thread count does not change results") {
  const auto x = corpus::grid_torus(3);
  const auto serial = fraction_field_betti(x);
  setenv("NOVIKOV_THREADS", "4", 1);
  CHECK(configured_threads() == 4);
  const auto parallel = fraction_field_betti(x);
  unsetenv("NOVIKOV_THREADS");
  CHECK(serial == parallel);
}
