#pragma once

#include "novikov/groupring.hpp"

#include <optional>
#include <span>

namespace novikov {

/// Finite window {A : Phi_c(A) <= order} of the upward completion along a
/// direction c. The monomials outside the window form an ideal for
/// multiplication by elements supported in {Phi_c >= 0}.
class Truncation {
 public:
  Truncation() = default;
  /// Throws InputError for the zero direction.
  Truncation(CohomologyClass direction, Rational order);

  /// Direction c = sum_l w_l a_l over the vertices of `face`; every weight
  /// must be strictly positive, so Phi_c > 0 wherever all vertices are positive.
  static Truncation interior(const Subpolytope& face, std::span<const Rational> weights, Rational order);
  /// Barycenter of `face`.
  static Truncation interior(const Subpolytope& face, Rational order);

  const CohomologyClass& direction() const { return direction_; }
  const Rational& order() const { return order_; }
  Index rank() const { return direction_.rank(); }

  Rational value(const LatticeVector& exponent) const { return period_eval(direction_, exponent); }
  bool in_window(const LatticeVector& exponent) const { return value(exponent) <= order_; }

  Truncation with_order(Rational order) const { return Truncation(direction_, std::move(order)); }

  friend bool operator==(const Truncation& a, const Truncation& b) {
    return a.direction_ == b.direction_ && a.order_ == b.order_;
  }

 private:
  CohomologyClass direction_;
  Rational order_ = 0;
};

/// An element of the completion known on the window of its truncation: the
/// stored body holds exactly the terms with Phi_c <= order.
class TruncatedNovikovSeries {
 public:
  TruncatedNovikovSeries() = default;
  /// Drops every term of `body` outside the window.
  TruncatedNovikovSeries(const GroupRingElement& body, Truncation window);

  const GroupRingElement& body() const { return body_; }
  const Truncation& window() const { return window_; }
  bool is_zero() const { return body_.is_zero(); }

  /// min Phi_c over the support, or nullopt for zero.
  std::optional<Rational> valuation() const;

  /// Same series seen through a smaller window. Throws InputError if
  /// `order` exceeds the current one.
  TruncatedNovikovSeries restricted(const Rational& order) const;

  /// Equality of windows and bodies.
  friend bool operator==(const TruncatedNovikovSeries& a, const TruncatedNovikovSeries& b) {
    return a.window_ == b.window_ && a.body_ == b.body_;
  }

 private:
  GroupRingElement body_;
  Truncation window_;
};

enum class SeriesOp { Add, Mul };

/// Sum or product, truncated to the shared window. Products are exact on the
/// window when both operands have non-negative valuation. Throws InputError
/// when the truncations differ.
TruncatedNovikovSeries series_arith(const TruncatedNovikovSeries& x, const TruncatedNovikovSeries& y, SeriesOp op);

/// min over the vertices of `face` of min over supp(u) of Phi_{a_l}(A) > 0.
/// Throws InputError for u = 0.
bool positivity_check(const GroupRingElement& u, const Subpolytope& face);
bool positivity_check(const GroupRingElement& u, const Polytope& polytope);

/// (1 - u)^{-1} = sum_j u^j on the window, where x = 1 - u. Requires field
/// coefficients and u positive on `face` (and on the truncation direction);
/// throws NotInvertibleUnderPolytope otherwise.
TruncatedNovikovSeries geom_inverse(const GroupRingElement& x, const Truncation& window, const Subpolytope& face);

/// x^{-1} on the window, for x whose Phi_c-minimal part is a single term.
/// The result agrees with the true inverse on every monomial with
/// Phi_c <= order; x * result == 1 holds on the window shifted down by
/// max(0, -valuation(x)). Throws AmbiguousLeadingTerm when the minimal part
/// has several terms, InputError for Z coefficients or x = 0.
TruncatedNovikovSeries leading_unit_inverse(const GroupRingElement& x, const Truncation& window);

/// Terms of x with Phi_c <= order.
GroupRingElement truncate(const GroupRingElement& x, const Truncation& window);

}  // namespace novikov
