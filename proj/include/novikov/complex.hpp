#pragma once

#include "novikov/groupring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace novikov {

/// Finite free chain complex over R[Z^r], one generator per base cell.
/// boundary(i) maps degree-i cells (columns) to degree-(i-1) cells (rows);
/// every entry is the group-ring coefficient of the preferred lift of the row
/// cell in the boundary of the preferred lift of the column cell.
class EquivariantComplex {
 public:
  EquivariantComplex() = default;

  /// `boundaries[k]` is d_{k+1}. Entries are coerced to (ring, rank).
  /// Throws InputError on shape problems and ValidationError when d o d != 0.
  EquivariantComplex(Ring ring, Index rank, std::vector<std::vector<std::string>> cells,
                     std::vector<GroupRingMatrix> boundaries);

  Ring ring() const { return ring_; }
  Index rank() const { return rank_; }
  /// Highest degree with a cell list (-1 for the empty complex).
  Index top_degree() const { return static_cast<Index>(cells_.size()) - 1; }
  Index cell_count(Index degree) const;
  const std::vector<std::string>& cells(Index degree) const;
  const std::vector<std::vector<std::string>>& all_cells() const { return cells_; }

  /// d_degree; an empty (0-row or 0-column) matrix outside 1..top_degree().
  GroupRingMatrix boundary(Index degree) const;
  const std::vector<GroupRingMatrix>& boundaries() const { return boundaries_; }

  /// Push forward along a deck-group quotient (entry-wise specialization).
  EquivariantComplex specialized(const QuotientMap& q) const;
  EquivariantComplex with_ring(Ring ring) const;

  long euler_characteristic() const;

  /// Deterministic text serialization (cells and entries in canonical form).
  std::string canonical_text() const;

  friend bool operator==(const EquivariantComplex& a, const EquivariantComplex& b);

 private:
  Ring ring_ = Ring::Q;
  Index rank_ = 0;
  std::vector<std::vector<std::string>> cells_;
  std::vector<GroupRingMatrix> boundaries_;
};

/// Throws ValidationError naming the first nonzero entry (degree i, row, col)
/// of d_i o d_{i+1}.
void validate_boundary_square(const std::vector<GroupRingMatrix>& boundaries);

/// A letter g^{+-1} of a free-group word.
struct Letter {
  Index generator = 0;
  int sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// Finite presentation; relators are freely reduced.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

/// Relators are written as products of generator powers separated by '*' or
/// whitespace, e.g. "x*y*x^-1*y^-1". Throws InputError on unknown generators
/// or duplicate generator names.
GroupPresentation parse_presentation(std::vector<std::string> generators, const std::vector<std::string>& relators);

Word free_reduce(Word w);

/// Presentation 2-complex of `p` on the cover classified by `deck_map`
/// (column j = image of generator j in Z^r): one 0-cell, a 1-cell per
/// generator with d(g) = t^{q(g)} - 1, a 2-cell per relator whose column holds
/// the specialized Fox derivatives. Throws CoverMismatch if a relator does not
/// map to zero.
EquivariantComplex fox_boundary(const GroupPresentation& p, const IntMatrix& deck_map, Ring ring = Ring::Z);

/// Free Fox derivative d(word)/d(generator) pushed to Z^r by `deck_map`.
GroupRingElement fox_derivative(const Word& word, Index generator, const IntMatrix& deck_map, Ring ring);

/// Compares the complex pushed to the cover of P with the one pushed to the
/// cover of factor * P; both are materialized and compared as text. Throws
/// InputError when factor <= 0.
bool scale_check(const EquivariantComplex& x, const Polytope& polytope, const Rational& factor);

}  // namespace novikov
