#pragma once

#include "novikov/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace novikov {

/// Coefficient ring of a group ring. Z2 coefficients are stored reduced to
/// {0, 1}; Z coefficients are integral rationals.
enum class Ring { Z, Q, Z2 };

std::string ring_name(Ring ring);
Ring parse_ring(std::string_view name);

/// Finitely supported Laurent element of R[Z^r], r >= 0.
///
/// Elements built from integer literals (including Eigen's Scalar(0) and
/// Scalar(1)) are "generic constants": they carry no rank or ring and adopt
/// those of whatever they are combined with. All other elements have a fixed
/// rank and ring; mixing different ones throws InputError.
class GroupRingElement {
 public:
  using Terms = std::map<LatticeVector, Rational, LexLess>;

  GroupRingElement() = default;
  GroupRingElement(int constant);  // NOLINT: Eigen needs implicit literals
  GroupRingElement(Ring ring, Index rank);

  static GroupRingElement zero(Ring ring, Index rank) { return GroupRingElement(ring, rank); }
  static GroupRingElement constant(Ring ring, Index rank, const Rational& c);
  static GroupRingElement monomial(Ring ring, const LatticeVector& exponent, const Rational& c = Rational(1));
  /// t_{i+1} in rank `rank` (0-based `i`).
  static GroupRingElement variable(Ring ring, Index rank, Index i, std::int64_t power = 1);

  bool is_generic() const { return rank_ < 0; }
  Ring ring() const { return ring_; }
  Index rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// A single term c*t^A with c = +-1 (c = 1 over Z2).
  bool is_unit_monomial() const;
  /// A single term with nonzero coefficient.
  bool is_monomial() const { return terms_.size() == 1; }

  /// Coefficient at `exponent` (zero when absent).
  Rational coefficient(const LatticeVector& exponent) const;

  /// Re-interprets the element over `ring`/`rank` (generic constants only get
  /// their rank fixed). Throws InputError when coefficients do not fit the ring.
  GroupRingElement with_ring(Ring ring, Index rank) const;
  GroupRingElement with_ring(Ring ring) const { return with_ring(ring, rank_); }

  /// Inverse of a monomial term; throws std::domain_error otherwise or when the
  /// coefficient is not invertible in the ring.
  GroupRingElement monomial_inverse() const;

  /// Ring homomorphism t^A |-> t^{q(A)}.
  GroupRingElement specialized(const QuotientMap& q) const;

  /// t^A |-> t^{A + shift}.
  GroupRingElement shifted(const LatticeVector& shift) const;

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement& operator*=(const GroupRingElement& other);

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator-(const GroupRingElement& a);

  /// Structural equality; generic constants compare equal to typed constants
  /// with the same value.
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) { return !(a == b); }

  /// Canonical text, terms in descending lexicographic order of exponents,
  /// e.g. "3*t1^2*t2^-1 + 1".
  std::string to_string() const;

 private:
  void add_term(const LatticeVector& exponent, const Rational& c);
  void adopt(const GroupRingElement& other);
  Rational reduce(const Rational& c) const;

  Ring ring_ = Ring::Q;
  Index rank_ = -1;
  Terms terms_;
};

/// Parses the canonical text form and also products, parentheses and integer
/// powers, e.g. "(t1 - 1)*(t2 + 1)^2", "-t^-1". A bare "t" means t1.
GroupRingElement parse_group_ring(std::string_view text, Ring ring, Index rank);

enum class GroupRingOp { Add, Mul, Neg };

/// add/mul/neg dispatch; `y` is ignored for Neg. Throws InputError when tags or
/// ranks differ.
GroupRingElement gr_arith(const GroupRingElement& x, const GroupRingElement& y, GroupRingOp op);

inline GroupRingElement gr_specialize(const GroupRingElement& x, const QuotientMap& q) { return x.specialized(q); }

/// Exact quotient a / b in the Laurent ring, or nullopt when b does not divide a.
std::optional<GroupRingElement> exact_divide(const GroupRingElement& a, const GroupRingElement& b);

using GroupRingMatrix = Eigen::Matrix<GroupRingElement, Eigen::Dynamic, Eigen::Dynamic>;

/// Entry-wise specialization.
GroupRingMatrix specialize(const GroupRingMatrix& m, const QuotientMap& q);

/// Product computed coefficient-wise (no blocking, no aliasing).
GroupRingMatrix multiply(const GroupRingMatrix& a, const GroupRingMatrix& b);

}  // namespace novikov

namespace Eigen {

template <>
struct NumTraits<novikov::GroupRingElement> : GenericNumTraits<novikov::GroupRingElement> {
  using Real = novikov::GroupRingElement;
  using NonInteger = novikov::GroupRingElement;
  using Literal = novikov::GroupRingElement;
  using Nested = novikov::GroupRingElement;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 64
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
