#pragma once

#include "novikov/complex.hpp"

#include <string>
#include <vector>

namespace novikov::corpus {

EquivariantComplex point();
EquivariantComplex circle();             // d1 = [t - 1]
EquivariantComplex subdivided_circle();  // two vertices, two edges
EquivariantComplex torus();              // <x, y | x y x^-1 y^-1>
EquivariantComplex klein_bottle();       // <x, y | x y x y^-1> over Z2, x -> 0, y -> 1
EquivariantComplex genus_two();          // surface relator, identity deck map

/// Torus cut into an n x n grid of squares, lifted to the Z^2 cover.
EquivariantComplex grid_torus(Index n);

struct Entry {
  std::string name;
  EquivariantComplex complex;
  std::vector<Index> ordinary_betti;
  std::vector<CohomologyClass> classes;  // sample classes, first one is 0
};

std::vector<Entry> entries();

}  // namespace novikov::corpus
