#include "novikov/twist.hpp"

#include "novikov/errors.hpp"

#include <map>
#include <stdexcept>

namespace novikov {

NovikovRingDescriptor ring_descriptor(const Subpolytope& face) {
  NovikovRingDescriptor d;
  d.cover = QuotientMap(face.parent().vertices());
  for (const auto& v : face.vertices()) d.restricted_functionals.push_back(d.cover.induced(v));
  return d;
}

RationalVector novikov_twist(const LatticeVector& element, const Polytope& polytope) {
  RationalVector out(polytope.size());
  for (Index l = 0; l < polytope.size(); ++l) out(l) = period_eval(polytope.vertex(l), element);
  return out;
}

TwistedComplex TwistedComplex::restricted_to(const Subpolytope& face) const {
  if (!(face.parent() == face_.parent())) throw InputError("restriction must use the same polytope");
  return TwistedComplex(complex_, face);
}

TwistedComplex twisted_complex(const EquivariantComplex& x, const Subpolytope& face) {
  if (x.rank() != face.parent().rank())
    throw InputError("complex has deck rank " + std::to_string(x.rank()) + " but polytope has rank " +
                     std::to_string(face.parent().rank()));
  const QuotientMap cover(face.parent().vertices());
  return TwistedComplex(x.specialized(cover), face);
}

std::vector<LiftedTerm> lifted_boundary(const EquivariantComplex& x, Index degree, Index cell, const LatticeVector& g) {
  std::vector<LiftedTerm> out;
  const GroupRingMatrix d = x.boundary(degree);
  for (Index row = 0; row < d.rows(); ++row) {
    for (const auto& [h, c] : d(row, cell).terms()) out.push_back({c, LatticeVector(g + h), row});
  }
  return out;
}

TwistedComplex tensor_base_change(const EquivariantComplex& x, const Subpolytope& face) {
  if (x.rank() != face.parent().rank())
    throw InputError("complex has deck rank " + std::to_string(x.rank()) + " but polytope has rank " +
                     std::to_string(face.parent().rank()));
  const QuotientMap cover(face.parent().vertices());
  const LatticeVector identity = LatticeVector::Zero(x.rank());

  std::vector<GroupRingMatrix> boundaries;
  for (Index degree = 1; degree <= x.top_degree(); ++degree) {
    GroupRingMatrix d(x.cell_count(degree - 1), x.cell_count(degree));
    for (Index i = 0; i < d.rows(); ++i)
      for (Index j = 0; j < d.cols(); ++j) d(i, j) = GroupRingElement::zero(x.ring(), cover.target_rank());
    for (Index col = 0; col < d.cols(); ++col) {
      // Psi(h . y_k (x) 1) = t^{[h]} y_k, where [h] is h's class in Gamma_A.
      for (const auto& term : lifted_boundary(x, degree, col, identity))
        d(term.cell, col) += GroupRingElement::monomial(x.ring(), cover.apply(term.deck), term.coefficient);
    }
    boundaries.push_back(std::move(d));
  }
  return TwistedComplex(EquivariantComplex(x.ring(), cover.target_rank(), x.all_cells(), std::move(boundaries)), face);
}

Polytope zero_vertex_extend(const Polytope& polytope) {
  const CohomologyClass zero = CohomologyClass::zero(polytope.rank());
  if (polytope.contains_vertex(zero)) return polytope;
  std::vector<CohomologyClass> vertices = polytope.vertices();
  vertices.push_back(zero);
  Polytope extended(std::move(vertices));

  if (!same_matrix(kernel_lattice(polytope.vertices()), kernel_lattice(extended.vertices())))
    throw std::logic_error("zero_vertex_extend: cover changed");
  // Every face B of P, compared as a face of P and of P^0 (same indices).
  const Index n = polytope.size();
  if (n <= 12) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Index> indices;
      for (Index l = 0; l < n; ++l)
        if (mask & (1u << l)) indices.push_back(l);
      if (!(ring_descriptor(Subpolytope(polytope, indices)) == ring_descriptor(Subpolytope(extended, indices))))
        throw std::logic_error("zero_vertex_extend: restricted Novikov ring changed");
    }
  }
  return extended;
}

EquivariantComplex change_lifts(const EquivariantComplex& x, const std::vector<std::vector<LatticeVector>>& shifts) {
  if (static_cast<Index>(shifts.size()) != x.top_degree() + 1) throw InputError("change_lifts: one shift list per degree");
  for (Index i = 0; i <= x.top_degree(); ++i)
    if (static_cast<Index>(shifts[static_cast<std::size_t>(i)].size()) != x.cell_count(i))
      throw InputError("change_lifts: one shift per cell");
  // New lift of y is t^{s_y} y, so the entry (row k, col j) becomes
  // t^{s_j - s_k} times the old one.
  std::vector<GroupRingMatrix> out;
  for (Index degree = 1; degree <= x.top_degree(); ++degree) {
    GroupRingMatrix d = x.boundary(degree);
    for (Index k = 0; k < d.rows(); ++k)
      for (Index j = 0; j < d.cols(); ++j) {
        if (d(k, j).is_zero()) continue;
        const LatticeVector s = shifts[static_cast<std::size_t>(degree)][static_cast<std::size_t>(j)] -
                                shifts[static_cast<std::size_t>(degree - 1)][static_cast<std::size_t>(k)];
        d(k, j) = d(k, j).shifted(s);
      }
    out.push_back(std::move(d));
  }
  return EquivariantComplex(x.ring(), x.rank(), x.all_cells(), std::move(out));
}

}  // namespace novikov
