#pragma once

#include "novikov/complex.hpp"

#include <initializer_list>

namespace testing {

using namespace novikov;

inline GroupRingElement gr(const char* text, Index rank = 1, Ring ring = Ring::Q) {
  return parse_group_ring(text, ring, rank);
}

inline GroupRingMatrix grm(Index rows, Index cols, std::initializer_list<const char*> entries, Index rank = 1,
                           Ring ring = Ring::Q) {
  GroupRingMatrix m(rows, cols);
  auto it = entries.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = gr(*it++, rank, ring);
  return m;
}

inline LatticeVector lv(std::initializer_list<std::int64_t> values) {
  LatticeVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (auto x : values) v(i++) = x;
  return v;
}

// Filled triangle with constant incidences: contractible, rank-1 deck group.
inline EquivariantComplex triangle() {
  return EquivariantComplex(Ring::Z, 1, {{"a", "b", "c"}, {"ab", "bc", "ca"}, {"abc"}},
                            {grm(3, 3, {"-1", "0", "1", "1", "-1", "0", "0", "1", "-1"}, 1, Ring::Z),
                             grm(3, 1, {"1", "1", "1"}, 1, Ring::Z)});
}

}  // namespace testing
