#include "novikov/rational.hpp"

#include "novikov/errors.hpp"

#include <cctype>
#include <limits>

namespace novikov {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_signed_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InputError("malformed rational: '" + std::string(whole) + "'");
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw InputError("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_signed_integer(trim(s.substr(0, slash)), s);
    const std::string_view den_text = trim(s.substr(slash + 1));
    if (!all_digits(den_text)) throw InputError("malformed rational: '" + std::string(s) + "'");
    const Integer den(std::string{den_text});
    if (den == 0) throw InputError("zero denominator: '" + std::string(s) + "'");
    return Rational(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    if (!frac_part.empty() && !all_digits(frac_part))
      throw InputError("malformed rational: '" + std::string(s) + "'");
    bool negative = !int_part.empty() && int_part.front() == '-';
    std::string_view digits = int_part;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!digits.empty() && !all_digits(digits))
      throw InputError("malformed rational: '" + std::string(s) + "'");
    if (digits.empty() && frac_part.empty())
      throw InputError("malformed rational: '" + std::string(s) + "'");
    Integer whole = digits.empty() ? Integer(0) : Integer(std::string(digits));
    Integer frac = frac_part.empty() ? Integer(0) : Integer(std::string(frac_part));
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac_part.size()));
    Rational value(whole * scale + frac, scale);
    return negative ? Rational(-value) : value;
  }

  return Rational(parse_signed_integer(s, s));
}

std::string format_rational(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

RationalVector parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    values.push_back(parse_rational(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  RationalVector out(static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) out(static_cast<Index>(i)) = values[i];
  return out;
}

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
    throw InputError("integer out of 64-bit range: " + value.str());
  return value.convert_to<std::int64_t>();
}

std::int64_t to_int64(const Rational& value) {
  if (!is_integral(value)) throw InputError("expected an integer, got " + format_rational(value));
  return to_int64(Integer(boost::multiprecision::numerator(value)));
}

}  // namespace novikov
