#pragma once

#include "novikov/complex.hpp"

#include <string>
#include <vector>

namespace novikov {

/// Identifies the ring Nov(A|B): the group ring of the cover Gamma_A
/// completed along the vertices of B. Two descriptors are equal exactly when
/// they describe the same ring.
struct NovikovRingDescriptor {
  QuotientMap cover;                                  // Z^r -> Gamma_A
  std::vector<CohomologyClass> restricted_functionals;  // vertices of B on Gamma_A

  friend bool operator==(const NovikovRingDescriptor& a, const NovikovRingDescriptor& b) {
    return a.cover == b.cover && a.restricted_functionals == b.restricted_functionals;
  }
};

NovikovRingDescriptor ring_descriptor(const Subpolytope& face);

/// The vector (Phi_{a_0}(A), ..., Phi_{a_k}(A)): the exponents of the
/// multi-variable Novikov twist t_0^{Phi_{a_0}} ... t_k^{Phi_{a_k}} of A.
RationalVector novikov_twist(const LatticeVector& element, const Polytope& polytope);

/// Cellular complex over Z[Gamma_A] read as a complex of free Nov(A|B)
/// modules on the preferred lifts.
class TwistedComplex {
 public:
  TwistedComplex() = default;
  TwistedComplex(EquivariantComplex complex, Subpolytope face)
      : complex_(std::move(complex)), face_(std::move(face)), ring_(ring_descriptor(face_)) {}

  const EquivariantComplex& complex() const { return complex_; }
  const Subpolytope& face() const { return face_; }
  const NovikovRingDescriptor& ring() const { return ring_; }

  /// Same matrices read over another restriction of the same polytope.
  TwistedComplex restricted_to(const Subpolytope& face) const;

  friend bool operator==(const TwistedComplex& a, const TwistedComplex& b) {
    return a.complex_ == b.complex_ && a.ring_ == b.ring_;
  }

 private:
  EquivariantComplex complex_;
  Subpolytope face_;
  NovikovRingDescriptor ring_;
};

/// Preferred lift of every base cell is its identity-labelled lift; entries
/// are the deck-group coefficients pushed to Gamma_A. Throws InputError on a
/// rank mismatch.
TwistedComplex twisted_complex(const EquivariantComplex& x, const Subpolytope& face);

/// C(M~_A) (x)_{Z[Gamma_A]} Nov(A|B), built by expanding each boundary into
/// its lifted cells on the cover and applying x~ (x) lambda |-> lambda * x.
TwistedComplex tensor_base_change(const EquivariantComplex& x, const Subpolytope& face);

/// One lifted cell h . y_k with integer coefficient.
struct LiftedTerm {
  Rational coefficient;
  LatticeVector deck;
  Index cell = 0;
};

/// Boundary of the lift g . x~_cell in degree `degree` on the cover, as a sum
/// of lifted cells of degree - 1.
std::vector<LiftedTerm> lifted_boundary(const EquivariantComplex& x, Index degree, Index cell,
                                        const LatticeVector& g);

/// P with the zero class appended (P itself if 0 is already a vertex).
/// Verifies that the cover and every restricted ring Nov(A|B) are unchanged;
/// throws std::logic_error otherwise.
Polytope zero_vertex_extend(const Polytope& polytope);

/// Moves the preferred lift of every cell: lift of cell j in degree i becomes
/// t^{shifts[i][j]} times the old one. Matrices are conjugated by monomial
/// diagonals; homology is unchanged.
EquivariantComplex change_lifts(const EquivariantComplex& x, const std::vector<std::vector<LatticeVector>>& shifts);

}  // namespace novikov
