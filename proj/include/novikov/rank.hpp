#pragma once

#include "novikov/groupring.hpp"
#include "novikov/random.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>

namespace novikov {

/// GF(2^31) = F_2[x] / (x^31 + x^3 + 1). Used for random evaluation of
/// characteristic-two Laurent matrices, where F_2 itself has too few points.
class Gf2_31 {
 public:
  static constexpr std::uint32_t kModulus = (1u << 31) | (1u << 3) | 1u;

  Gf2_31() = default;
  Gf2_31(int bit) : value_(static_cast<std::uint32_t>(bit) & 1u) {}  // NOLINT: Eigen literals
  static Gf2_31 from_bits(std::uint32_t bits) {
    Gf2_31 out;
    out.value_ = bits & 0x7fffffffu;
    return out;
  }

  std::uint32_t bits() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend Gf2_31 operator+(Gf2_31 a, Gf2_31 b) { return from_bits(a.value_ ^ b.value_); }
  friend Gf2_31 operator-(Gf2_31 a, Gf2_31 b) { return a + b; }
  friend Gf2_31 operator-(Gf2_31 a) { return a; }
  friend Gf2_31 operator*(Gf2_31 a, Gf2_31 b);
  Gf2_31& operator+=(Gf2_31 o) { return *this = *this + o; }
  Gf2_31& operator-=(Gf2_31 o) { return *this = *this + o; }
  Gf2_31& operator*=(Gf2_31 o) { return *this = *this * o; }
  friend bool operator==(Gf2_31 a, Gf2_31 b) { return a.value_ == b.value_; }
  friend bool operator!=(Gf2_31 a, Gf2_31 b) { return a.value_ != b.value_; }

  Gf2_31 pow(std::uint64_t e) const;
  /// Throws std::domain_error for zero.
  Gf2_31 inverse() const;

 private:
  std::uint32_t value_ = 0;
};

// -- scalar hooks used by the generic elimination below ----------------------

inline bool is_zero_scalar(const Rational& x) { return x == 0; }
inline bool is_zero_scalar(const Gf2_31& x) { return x.is_zero(); }
inline bool is_zero_scalar(const GroupRingElement& x) { return x.is_zero(); }

inline std::size_t pivot_weight(const Rational&) { return 1; }
inline std::size_t pivot_weight(const Gf2_31&) { return 1; }
inline std::size_t pivot_weight(const GroupRingElement& x) { return x.term_count(); }

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline Gf2_31 exact_quotient(const Gf2_31& a, const Gf2_31& b) { return a * b.inverse(); }
inline GroupRingElement exact_quotient(const GroupRingElement& a, const GroupRingElement& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("Bareiss step is not an exact division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return *q;
}

/// Rank by fraction-free (Bareiss) elimination over an integral domain. Every
/// division is exact, so no fractions of the scalar type are ever formed.
template <class Derived>
Index bareiss_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  Scalar previous(1);
  Index rank = 0;
  for (Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Index pivot = -1;
    for (Index i = rank; i < a.rows(); ++i) {
      if (is_zero_scalar(a(i, col))) continue;
      if (pivot < 0 || pivot_weight(a(i, col)) < pivot_weight(a(pivot, col))) pivot = i;
    }
    if (pivot < 0) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    for (Index i = rank + 1; i < a.rows(); ++i) {
      for (Index j = col + 1; j < a.cols(); ++j) {
        Scalar cross = a(rank, col) * a(i, j) - a(i, col) * a(rank, j);
        a(i, j) = exact_quotient(cross, previous);
      }
      a(i, col) = Scalar(0);
    }
    previous = a(rank, col);
    ++rank;
  }
  return rank;
}

// -- evaluation ---------------------------------------------------------------

template <class Scalar>
Scalar scalar_power(Scalar base, std::int64_t e) {
  if (e < 0) {
    base = exact_quotient(Scalar(1), base);
    e = -e;
  }
  Scalar out(1);
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

inline Rational coefficient_as(const Rational& c, const Rational*) { return c; }
inline Gf2_31 coefficient_as(const Rational& c, const Gf2_31*) {
  return Gf2_31(boost::multiprecision::numerator(c) % 2 != 0 ? 1 : 0);
}

/// x(point): every t_i replaced by point[i] (which must be invertible).
template <class Scalar>
Scalar evaluate(const GroupRingElement& x, std::span<const Scalar> point) {
  Scalar sum(0);
  for (const auto& [e, c] : x.terms()) {
    Scalar term = coefficient_as(c, static_cast<const Scalar*>(nullptr));
    for (Index i = 0; i < e.size(); ++i)
      if (e(i) != 0) term = term * scalar_power(point[static_cast<std::size_t>(i)], e(i));
    sum = sum + term;
  }
  return sum;
}

// -- fraction-field rank ----------------------------------------------------

enum class RankMethod { FractionFieldExact, Evaluation, TruncatedOracle };

std::string method_name(RankMethod method);

struct RankOptions {
  /// Matrices with both dimensions at most this size use exact elimination.
  Index exact_threshold = 64;
  std::uint64_t seed = 0x5eedULL;
  int max_trials = 8;
};

struct RankResult {
  Index rank = 0;
  RankMethod method = RankMethod::FractionFieldExact;
  /// True when the value is a proven rank (exact elimination); evaluation
  /// gives a lower bound that is correct with high probability.
  bool exact_confirmed = true;
  int trials = 0;
};

/// Rank over the fraction field of Q[Z^r] (or F_2[Z^r]); Z entries are
/// promoted to Q.
RankResult matrix_rank_fraction_field(const GroupRingMatrix& m, const RankOptions& options = {});

/// Rank of m at one random point; deterministic for a given engine state.
Index evaluation_rank(const GroupRingMatrix& m, std::mt19937_64& engine);

}  // namespace novikov

namespace Eigen {

template <>
struct NumTraits<novikov::Gf2_31> : GenericNumTraits<novikov::Gf2_31> {
  using Real = novikov::Gf2_31;
  using NonInteger = novikov::Gf2_31;
  using Literal = novikov::Gf2_31;
  using Nested = novikov::Gf2_31;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 4
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
