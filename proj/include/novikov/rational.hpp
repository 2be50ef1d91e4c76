#pragma once

#include <Eigen/Core>

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace novikov {

// Expression templates off: Eigen stores and copies scalars by value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Parses "p/q", "p", or a finite decimal such as "-0.125". Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string format_rational(const Rational& value);

/// Parses a comma-separated list of rationals, e.g. "1,1/2,-3".
RationalVector parse_rational_list(std::string_view text);

inline bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

/// Exact conversion; throws InputError if `value` is not an integer or does
/// not fit in 64 bits.
std::int64_t to_int64(const Rational& value);
std::int64_t to_int64(const Integer& value);

}  // namespace novikov

// Eigen scalar traits for the gmp number types.
namespace Eigen {

template <>
struct NumTraits<novikov::Rational> : GenericNumTraits<novikov::Rational> {
  using Real = novikov::Rational;
  using NonInteger = novikov::Rational;
  using Literal = novikov::Rational;
  using Nested = novikov::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<novikov::Integer> : GenericNumTraits<novikov::Integer> {
  using Real = novikov::Integer;
  using NonInteger = novikov::Rational;
  using Literal = novikov::Integer;
  using Nested = novikov::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
