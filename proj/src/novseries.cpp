#include "novikov/novseries.hpp"

#include "novikov/errors.hpp"

namespace novikov {

// ---------------------------------------------------------------------------
// Truncation

Truncation::Truncation(CohomologyClass direction, Rational order)
    : direction_(std::move(direction)), order_(std::move(order)) {
  if (direction_.is_zero()) throw InputError("truncation direction must be nonzero");
}

Truncation Truncation::interior(const Subpolytope& face, std::span<const Rational> weights, Rational order) {
  if (static_cast<Index>(weights.size()) != face.size())
    throw InputError("interior truncation: expected one weight per active vertex");
  RationalVector c = RationalVector::Constant(face.parent().rank(), Rational(0));
  std::size_t l = 0;
  for (const auto& v : face.vertices()) {
    if (weights[l] <= 0) throw InputError("interior truncation: weights must be strictly positive");
    for (Index i = 0; i < c.size(); ++i) c(i) += weights[l] * v.periods()(i);
    ++l;
  }
  return Truncation(CohomologyClass(std::move(c)), std::move(order));
}

Truncation Truncation::interior(const Subpolytope& face, Rational order) {
  std::vector<Rational> weights(static_cast<std::size_t>(face.size()), Rational(1, face.size()));
  return interior(face, weights, std::move(order));
}

// ---------------------------------------------------------------------------
// series

GroupRingElement truncate(const GroupRingElement& x, const Truncation& window) {
  if (x.is_generic()) {
    return x.is_zero() ? x : truncate(x.with_ring(Ring::Q, window.rank()), window);
  }
  GroupRingElement out = GroupRingElement::zero(x.ring(), x.rank());
  for (const auto& [e, c] : x.terms())
    if (window.in_window(e)) out += GroupRingElement::monomial(x.ring(), e, c);
  return out;
}

namespace {

GroupRingElement truncated_product(const GroupRingElement& a, const GroupRingElement& b, const Truncation& window) {
  GroupRingElement out = GroupRingElement::zero(a.ring(), a.rank());
  for (const auto& [ea, ca] : a.terms()) {
    const Rational va = window.value(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (va + window.value(eb) > window.order()) continue;
      out += GroupRingElement::monomial(a.ring(), LatticeVector(ea + eb), ca * cb);
    }
  }
  return out;
}

void require_field(const GroupRingElement& x, const char* what) {
  if (x.ring() == Ring::Z)
    throw InputError(std::string(what) + ": Novikov inversion needs field coefficients (Q or Z2)");
}

// sum_j u^j on the window; u must be positive along the window direction.
GroupRingElement geometric_sum(const GroupRingElement& u, const Truncation& window) {
  GroupRingElement sum = GroupRingElement::constant(u.ring(), u.rank(), 1);
  sum = truncate(sum, window);
  GroupRingElement power = sum;
  while (!power.is_zero()) {
    power = truncated_product(power, u, window);
    sum += power;
  }
  return sum;
}

}  // namespace

TruncatedNovikovSeries::TruncatedNovikovSeries(const GroupRingElement& body, Truncation window)
    : body_(truncate(body, window)), window_(std::move(window)) {
  if (!body_.is_generic() && body_.rank() != window_.rank())
    throw InputError("series rank does not match truncation rank");
}

std::optional<Rational> TruncatedNovikovSeries::valuation() const {
  std::optional<Rational> best;
  for (const auto& [e, c] : body_.terms()) {
    const Rational v = window_.value(e);
    if (!best || v < *best) best = v;
  }
  return best;
}

TruncatedNovikovSeries TruncatedNovikovSeries::restricted(const Rational& order) const {
  if (order > window_.order()) throw InputError("cannot restrict a series to a larger window");
  return TruncatedNovikovSeries(body_, window_.with_order(order));
}

TruncatedNovikovSeries series_arith(const TruncatedNovikovSeries& x, const TruncatedNovikovSeries& y, SeriesOp op) {
  if (!(x.window() == y.window())) throw InputError("series_arith: truncations differ");
  if (op == SeriesOp::Add) return TruncatedNovikovSeries(x.body() + y.body(), x.window());
  GroupRingElement a = x.body();
  GroupRingElement b = y.body();
  if (a.is_zero() || b.is_zero()) return TruncatedNovikovSeries(GroupRingElement(0), x.window());
  return TruncatedNovikovSeries(truncated_product(a, b, x.window()), x.window());
}

// ---------------------------------------------------------------------------
// positivity and inversion

bool positivity_check(const GroupRingElement& u, const Subpolytope& face) {
  if (u.is_zero()) throw InputError("positivity_check: zero element");
  if (u.is_generic()) return false;  // support {0}
  for (const auto& [e, c] : u.terms())
    if (polytope_min_period(face, e) <= 0) return false;
  return true;
}

bool positivity_check(const GroupRingElement& u, const Polytope& polytope) {
  return positivity_check(u, Subpolytope::full(polytope));
}

TruncatedNovikovSeries geom_inverse(const GroupRingElement& x, const Truncation& window, const Subpolytope& face) {
  if (x.is_zero()) throw InputError("geom_inverse: zero element");
  const GroupRingElement typed = x.is_generic() ? x.with_ring(Ring::Q, window.rank()) : x;
  require_field(typed, "geom_inverse");
  const GroupRingElement u = GroupRingElement::constant(typed.ring(), typed.rank(), 1) - typed;
  if (u.is_zero()) return TruncatedNovikovSeries(typed, window);
  if (!positivity_check(u, face))
    throw NotInvertibleUnderPolytope("1 - (" + u.to_string() + ") is not invertible: some vertex sees a non-positive period");
  for (const auto& [e, c] : u.terms())
    if (window.value(e) <= 0)
      throw NotInvertibleUnderPolytope("truncation direction is not interior: Phi_c <= 0 on " + u.to_string());
  return TruncatedNovikovSeries(geometric_sum(u, window), window);
}

TruncatedNovikovSeries leading_unit_inverse(const GroupRingElement& x, const Truncation& window) {
  if (x.is_zero()) throw InputError("leading_unit_inverse: zero element");
  const GroupRingElement typed = x.is_generic() ? x.with_ring(Ring::Q, window.rank()) : x;
  require_field(typed, "leading_unit_inverse");

  std::optional<Rational> lowest;
  int count = 0;
  LatticeVector lead_exponent;
  Rational lead_coefficient;
  for (const auto& [e, c] : typed.terms()) {
    const Rational v = window.value(e);
    if (!lowest || v < *lowest) {
      lowest = v;
      count = 1;
      lead_exponent = e;
      lead_coefficient = c;
    } else if (v == *lowest) {
      ++count;
    }
  }
  if (count != 1)
    throw AmbiguousLeadingTerm("leading_unit_inverse: " + std::to_string(count) + " terms of " + typed.to_string() +
                               " share the minimal period " + format_rational(*lowest));

  const GroupRingElement lead_inverse =
      GroupRingElement::monomial(typed.ring(), lead_exponent, lead_coefficient).monomial_inverse();
  const GroupRingElement u = GroupRingElement::constant(typed.ring(), typed.rank(), 1) - lead_inverse * typed;
  // result = lead^{-1} * sum_j u^j; its window order corresponds to order + v
  // for the geometric sum.
  const Truncation inner = window.with_order(window.order() + *lowest);
  const GroupRingElement sum = inner.order() < 0 ? GroupRingElement::zero(typed.ring(), typed.rank())
                                                 : geometric_sum(u, inner);
  return TruncatedNovikovSeries(lead_inverse * sum, window);
}

}  // namespace novikov
