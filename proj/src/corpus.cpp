#include "novikov/corpus.hpp"

#include "novikov/errors.hpp"

namespace novikov::corpus {

namespace {

GroupRingMatrix matrix(Index rows, Index cols, Ring ring, Index rank, std::initializer_list<const char*> entries) {
  GroupRingMatrix m(rows, cols);
  auto it = entries.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = parse_group_ring(*it++, ring, rank);
  return m;
}

IntMatrix deck(Index rows, Index cols, std::initializer_list<std::int64_t> values) {
  IntMatrix m(rows, cols);
  auto it = values.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

EquivariantComplex point() { return EquivariantComplex(Ring::Z, 1, {{"v"}}, {}); }

EquivariantComplex circle() {
  return EquivariantComplex(Ring::Z, 1, {{"v"}, {"e"}}, {matrix(1, 1, Ring::Z, 1, {"t1 - 1"})});
}

EquivariantComplex subdivided_circle() {
  return EquivariantComplex(Ring::Z, 1, {{"v0", "v1"}, {"e0", "e1"}},
                            {matrix(2, 2, Ring::Z, 1, {"-1", "t1", "1", "-1"})});
}

EquivariantComplex torus() {
  return fox_boundary(parse_presentation({"x", "y"}, {"x*y*x^-1*y^-1"}), deck(2, 2, {1, 0, 0, 1}));
}

EquivariantComplex klein_bottle() {
  return fox_boundary(parse_presentation({"x", "y"}, {"x*y*x*y^-1"}), deck(1, 2, {0, 1}), Ring::Z2);
}

EquivariantComplex genus_two() {
  return fox_boundary(parse_presentation({"a1", "b1", "a2", "b2"}, {"a1*b1*a1^-1*b1^-1*a2*b2*a2^-1*b2^-1"}),
                      IntMatrix::Identity(4, 4));
}

EquivariantComplex grid_torus(Index n) {
  if (n < 1) throw InputError("grid_torus: n must be positive");
  const Index cells = n * n;
  auto at = [n](Index i, Index j) { return ((i % n) + n) % n + n * (((j % n) + n) % n); };
  auto wrap = [n](Index i, Index j) {
    LatticeVector e(2);
    e << (i >= n ? 1 : 0), (j >= n ? 1 : 0);
    return GroupRingElement::monomial(Ring::Z, e, 1);
  };
  std::vector<std::vector<std::string>> names(3);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) names[0].push_back("v" + std::to_string(i) + "_" + std::to_string(j));
  for (const char* kind : {"h", "u"})
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) names[1].push_back(kind + std::to_string(i) + "_" + std::to_string(j));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) names[2].push_back("s" + std::to_string(i) + "_" + std::to_string(j));

  // h(i,j): v(i,j) -> v(i+1,j), u(i,j): v(i,j) -> v(i,j+1)
  const GroupRingElement one = GroupRingElement::constant(Ring::Z, 2, 1);
  GroupRingMatrix d1 = GroupRingMatrix::Constant(cells, 2 * cells, GroupRingElement::zero(Ring::Z, 2));
  GroupRingMatrix d2 = GroupRingMatrix::Constant(2 * cells, cells, GroupRingElement::zero(Ring::Z, 2));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      const Index c = at(i, j);
      d1(c, c) -= one;
      d1(at(i + 1, j), c) += wrap(i + 1, 0);
      d1(c, cells + c) -= one;
      d1(at(i, j + 1), cells + c) += wrap(0, j + 1);
      // s(i,j) = h(i,j) + u(i+1,j) - h(i,j+1) - u(i,j)
      d2(c, c) += one;
      d2(cells + at(i + 1, j), c) += wrap(i + 1, 0);
      d2(at(i, j + 1), c) -= wrap(0, j + 1);
      d2(cells + c, c) -= one;
    }
  return EquivariantComplex(Ring::Z, 2, std::move(names), {d1, d2});
}

std::vector<Entry> entries() {
  return {
      {"point", point(), {1}, {CohomologyClass{0}}},
      {"circle", circle(), {1, 1}, {CohomologyClass{0}, CohomologyClass{1}, CohomologyClass{-2}}},
      {"subdivided_circle", subdivided_circle(), {1, 1},
       {CohomologyClass{0}, CohomologyClass{1}, CohomologyClass{Rational(-3, 2)}}},
      {"torus", torus(), {1, 2, 1},
       {CohomologyClass{0, 0}, CohomologyClass{1, 0}, CohomologyClass{0, 1}, CohomologyClass{1, 1},
        CohomologyClass{2, 3}}},
      {"grid_torus", grid_torus(2), {1, 2, 1},
       {CohomologyClass{0, 0}, CohomologyClass{1, 0}, CohomologyClass{Rational(1, 2), -3}}},
      {"klein_bottle", klein_bottle(), {1, 2, 1}, {CohomologyClass{0}, CohomologyClass{1}, CohomologyClass{-1}}},
      {"genus_two", genus_two(), {1, 4, 1},
       {CohomologyClass{0, 0, 0, 0}, CohomologyClass{1, 0, 0, 0}, CohomologyClass{1, 2, -1, 3}}},
  };
}

}  // namespace novikov::corpus
