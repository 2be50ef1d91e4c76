#pragma once

#include <stdexcept>
#include <string>

namespace novikov {

/// Malformed or inconsistent input (dimension mismatch, bad schema, bad flag).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A chain complex failed validation. When the failure is a nonzero entry of
/// a composite boundary, `degree`, `row` and `col` locate it in
/// d_degree * d_{degree+1}; otherwise they are -1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what, long degree = -1, long row = -1, long col = -1)
      : std::runtime_error(what), degree(degree), row(row), col(col) {}

  long degree;
  long row;
  long col;
};

/// 1 - u is not a unit of the polytope Novikov ring: some vertex sees a
/// non-positive period on the support of u.
class NotInvertibleUnderPolytope : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The minimal terms with respect to the truncation direction do not form a
/// single invertible term.
class AmbiguousLeadingTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A relator's abelianization is not killed by the deck map.
class CoverMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Truncated elimination ran out of precision; retry with a larger order.
class IncreaseOrder : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The modified Hasse diagram of a matching contains a directed cycle.
class MorseCycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace novikov
