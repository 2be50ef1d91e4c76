#pragma once

#include "novikov/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace novikov {

/// Element of the deck lattice Z^r.
using LatticeVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// Lexicographic order on lattice vectors of equal length.
struct LexLess {
  bool operator()(const LatticeVector& a, const LatticeVector& b) const;
};

bool lex_equal(const LatticeVector& a, const LatticeVector& b);

/// Shape and entry equality (Eigen's operator== requires equal shapes).
bool same_matrix(const IntMatrix& a, const IntMatrix& b);

/// A rational period functional on Z^r: A |-> periods . A.
class CohomologyClass {
 public:
  CohomologyClass() = default;
  explicit CohomologyClass(RationalVector periods) : periods_(std::move(periods)) {}
  CohomologyClass(std::initializer_list<Rational> periods);

  static CohomologyClass zero(Index rank);

  Index rank() const { return periods_.size(); }
  const RationalVector& periods() const { return periods_; }
  bool is_zero() const;

  CohomologyClass scaled(const Rational& factor) const;

  /// Primitive integral vector on the same open ray (zero for the zero class).
  LatticeVector ray() const;

  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b);

 private:
  RationalVector periods_;
};

/// Phi_a(A) = periods . A. Throws InputError on rank mismatch.
Rational period_eval(const CohomologyClass& a, const LatticeVector& element);

/// Convex hull of finitely many classes, stored by its (deduplicated) vertices.
class Polytope {
 public:
  Polytope() = default;
  /// Throws InputError on an empty list or mixed ranks. Duplicates are dropped,
  /// first occurrence wins.
  explicit Polytope(std::vector<CohomologyClass> vertices);

  Index rank() const { return rank_; }
  Index size() const { return static_cast<Index>(vertices_.size()); }
  const std::vector<CohomologyClass>& vertices() const { return vertices_; }
  const CohomologyClass& vertex(Index i) const { return vertices_.at(static_cast<std::size_t>(i)); }

  bool contains_vertex(const CohomologyClass& a) const;
  Polytope scaled(const Rational& factor) const;

  /// sum_l weights_l * a_l; weights must be convex (non-negative, summing to 1).
  CohomologyClass convex_combination(std::span<const Rational> weights) const;

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices_ == b.vertices_; }

 private:
  Index rank_ = 0;
  std::vector<CohomologyClass> vertices_;
};

/// The face spanned by a subset of a polytope's vertices.
class Subpolytope {
 public:
  Subpolytope() = default;
  /// Indices are sorted; throws InputError when empty, out of range or repeated.
  Subpolytope(Polytope parent, std::vector<Index> vertex_indices);
  static Subpolytope full(Polytope parent);

  const Polytope& parent() const { return parent_; }
  const std::vector<Index>& vertex_indices() const { return indices_; }
  std::vector<CohomologyClass> vertices() const;
  Index size() const { return static_cast<Index>(indices_.size()); }
  bool is_full() const { return size() == parent_.size(); }

 private:
  Polytope parent_;
  std::vector<Index> indices_;
};

/// min over vertices a_l of Phi_{a_l}(A).
Rational polytope_min_period(const Polytope& polytope, const LatticeVector& element);
Rational polytope_min_period(const Subpolytope& face, const LatticeVector& element);

/// Hermite normal form (row style): upper echelon, positive pivots, entries
/// above each pivot reduced into [0, pivot). Zero rows are dropped.
IntegerMatrix hermite_normal_form(IntegerMatrix m);

/// Saturated integer basis of the intersection of the kernels of the classes,
/// one basis vector per column, in canonical (Hermite) form. May have zero
/// columns.
IntMatrix kernel_lattice(std::span<const CohomologyClass> classes);

/// Surjection Z^r -> Z^r' whose kernel is kernel_lattice(classes).
class QuotientMap {
 public:
  QuotientMap() = default;
  explicit QuotientMap(std::span<const CohomologyClass> classes);

  /// The zero map Z^r -> Z^0 (augmentation).
  static QuotientMap augmentation(Index source_rank);
  static QuotientMap identity(Index rank);

  Index source_rank() const { return matrix_.cols(); }
  Index target_rank() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }
  const IntMatrix& kernel() const { return kernel_; }

  LatticeVector apply(const LatticeVector& element) const;

  /// The functional on Z^r' that pulls back to `a`. Throws InputError if `a`
  /// does not vanish on the kernel.
  CohomologyClass induced(const CohomologyClass& a) const;

  friend bool operator==(const QuotientMap& a, const QuotientMap& b) {
    return same_matrix(a.matrix_, b.matrix_) && same_matrix(a.kernel_, b.kernel_);
  }

 private:
  IntMatrix matrix_;
  IntMatrix kernel_;
};

inline QuotientMap quotient_map(std::span<const CohomologyClass> classes) { return QuotientMap(classes); }

}  // namespace novikov
