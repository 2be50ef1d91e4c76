#include "novikov/groupring.hpp"

#include "novikov/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace novikov {

namespace mp = boost::multiprecision;

std::string ring_name(Ring ring) {
  switch (ring) {
    case Ring::Z: return "Z";
    case Ring::Q: return "Q";
    case Ring::Z2: return "Z2";
  }
  return "?";
}

Ring parse_ring(std::string_view name) {
  if (name == "Z") return Ring::Z;
  if (name == "Q") return Ring::Q;
  if (name == "Z2") return Ring::Z2;
  throw InputError("unknown coefficient ring '" + std::string(name) + "' (expected Z, Q or Z2)");
}

namespace {

Rational reduce_for(Ring ring, const Rational& c) {
  if (ring == Ring::Q) return c;
  if (!is_integral(c))
    throw InputError("coefficient " + format_rational(c) + " is not valid over " + ring_name(ring));
  if (ring == Ring::Z) return c;
  Integer n = mp::numerator(c) % 2;
  if (n < 0) n += 2;
  return Rational(n);
}

}  // namespace

// ---------------------------------------------------------------------------
// construction

GroupRingElement::GroupRingElement(int constant) {
  if (constant != 0) terms_.emplace(LatticeVector(0), Rational(constant));
}

GroupRingElement::GroupRingElement(Ring ring, Index rank) : ring_(ring), rank_(rank) {
  if (rank < 0) throw InputError("group ring rank must be non-negative");
}

GroupRingElement GroupRingElement::constant(Ring ring, Index rank, const Rational& c) {
  GroupRingElement out(ring, rank);
  out.add_term(LatticeVector::Zero(rank), c);
  return out;
}

GroupRingElement GroupRingElement::monomial(Ring ring, const LatticeVector& exponent, const Rational& c) {
  GroupRingElement out(ring, exponent.size());
  out.add_term(exponent, c);
  return out;
}

GroupRingElement GroupRingElement::variable(Ring ring, Index rank, Index i, std::int64_t power) {
  if (i < 0 || i >= rank) throw InputError("variable index out of range");
  LatticeVector e = LatticeVector::Zero(rank);
  e(i) = power;
  return monomial(ring, e);
}

Rational GroupRingElement::reduce(const Rational& c) const {
  return is_generic() ? c : reduce_for(ring_, c);
}

void GroupRingElement::add_term(const LatticeVector& exponent, const Rational& c) {
  const Rational value = reduce(c);
  if (value == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, value);
  if (!inserted) {
    it->second = reduce(it->second + value);
    if (it->second == 0) terms_.erase(it);
  }
}

void GroupRingElement::adopt(const GroupRingElement& other) {
  if (other.is_generic()) return;
  if (is_generic()) {
    *this = with_ring(other.ring_, other.rank_);
    return;
  }
  if (ring_ != other.ring_)
    throw InputError("group ring mismatch: " + ring_name(ring_) + " vs " + ring_name(other.ring_));
  if (rank_ != other.rank_)
    throw InputError("group ring rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(other.rank_));
}

GroupRingElement GroupRingElement::with_ring(Ring ring, Index rank) const {
  if (!is_generic() && rank != rank_)
    throw InputError("cannot change group ring rank from " + std::to_string(rank_) + " to " + std::to_string(rank));
  if (rank < 0) {
    GroupRingElement out = *this;
    return out;
  }
  GroupRingElement out(ring, rank);
  for (const auto& [e, c] : terms_) out.add_term(is_generic() ? LatticeVector::Zero(rank).eval() : e, c);
  return out;
}

// ---------------------------------------------------------------------------
// queries

bool GroupRingElement::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return c == 1 && (e.size() == 0 || e.isZero());
}

bool GroupRingElement::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const Rational& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

Rational GroupRingElement::coefficient(const LatticeVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

GroupRingElement GroupRingElement::monomial_inverse() const {
  if (terms_.size() != 1) throw std::domain_error("monomial_inverse: not a monomial: " + to_string());
  const auto& [e, c] = *terms_.begin();
  if (!is_generic() && ring_ != Ring::Q && c != 1 && c != -1)
    throw std::domain_error("monomial_inverse: coefficient not a unit over " + ring_name(ring_));
  GroupRingElement out = *this;
  out.terms_.clear();
  out.terms_.emplace(LatticeVector(-e), Rational(1) / c);
  return out;
}

GroupRingElement GroupRingElement::specialized(const QuotientMap& q) const {
  if (is_generic()) return *this;
  if (rank_ != q.source_rank())
    throw InputError("specialize: element rank " + std::to_string(rank_) + " but quotient source rank " +
                     std::to_string(q.source_rank()));
  GroupRingElement out(ring_, q.target_rank());
  for (const auto& [e, c] : terms_) out.add_term(q.apply(e), c);
  return out;
}

GroupRingElement GroupRingElement::shifted(const LatticeVector& shift) const {
  if (is_generic()) throw InputError("cannot shift a generic constant");
  if (shift.size() != rank_) throw InputError("shift has wrong rank");
  GroupRingElement out(ring_, rank_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(LatticeVector(e + shift), c);
  return out;
}

// ---------------------------------------------------------------------------
// arithmetic

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  adopt(other);
  if (other.is_generic() && !is_generic()) {
    for (const auto& [e, c] : other.terms_) add_term(LatticeVector::Zero(rank_), c);
  } else {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) { return *this += -other; }

GroupRingElement& GroupRingElement::operator*=(const GroupRingElement& other) {
  *this = *this * other;
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out = GroupRingElement(0);
  out.adopt(a);
  out.adopt(b);
  const GroupRingElement lhs = a.is_generic() ? a.with_ring(out.ring_, out.rank_) : a;
  const GroupRingElement rhs = b.is_generic() ? b.with_ring(out.ring_, out.rank_) : b;
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      if (ea.size() == 0)
        out.add_term(eb, ca * cb);
      else
        out.add_term(LatticeVector(ea + eb), ca * cb);
    }
  return out;
}

GroupRingElement operator-(const GroupRingElement& a) {
  GroupRingElement out = a;
  out.terms_.clear();
  for (const auto& [e, c] : a.terms_) out.add_term(e, -c);
  return out;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  if (!a.is_generic() && !b.is_generic() && (a.ring_ != b.ring_ || a.rank_ != b.rank_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->second != ib->second) return false;
    const bool za = ia->first.size() == 0 || ia->first.isZero();
    const bool zb = ib->first.size() == 0 || ib->first.isZero();
    if (ia->first.size() == ib->first.size()) {
      if (!lex_equal(ia->first, ib->first)) return false;
    } else if (!(za && zb)) {
      return false;
    }
  }
  return true;
}

GroupRingElement gr_arith(const GroupRingElement& x, const GroupRingElement& y, GroupRingOp op) {
  if (op == GroupRingOp::Neg) return -x;
  if (x.ring() != y.ring() || x.rank() != y.rank())
    throw InputError("gr_arith: operands differ in ring or rank");
  return op == GroupRingOp::Add ? x + y : x * y;
}

// ---------------------------------------------------------------------------
// exact division

std::optional<GroupRingElement> exact_divide(const GroupRingElement& a, const GroupRingElement& b) {
  if (b.is_zero()) return std::nullopt;
  GroupRingElement base = GroupRingElement(0);
  base += a;
  base += b;
  const Ring ring = base.ring();
  const Index rank = base.rank();
  if (a.is_zero()) return base.is_generic() ? GroupRingElement(0) : GroupRingElement::zero(ring, rank);
  if (base.is_generic()) {
    // Generic constants only ever hold integers.
    const Rational q = a.terms().begin()->second / b.terms().begin()->second;
    if (!is_integral(q)) return std::nullopt;
    return GroupRingElement(static_cast<int>(to_int64(q)));
  }

  const GroupRingElement num = a.with_ring(ring, rank);
  const GroupRingElement den = b.with_ring(ring, rank);

  // Shift both into the polynomial ring so that no variable divides either;
  // then any Laurent quotient is a polynomial and lex division terminates.
  auto min_exponent = [](const GroupRingElement& x) {
    LatticeVector m = x.terms().begin()->first;
    for (const auto& [e, c] : x.terms()) m = m.cwiseMin(e);
    return m;
  };
  const LatticeVector alpha = min_exponent(num);
  const LatticeVector beta = min_exponent(den);
  GroupRingElement rem = num.shifted(-alpha);
  const GroupRingElement divisor = den.shifted(-beta);
  const auto& [lead_e, lead_c] = *divisor.terms().rbegin();

  GroupRingElement quotient = GroupRingElement::zero(ring, rank);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    const LatticeVector diff = re - lead_e;
    if ((diff.array() < 0).any()) return std::nullopt;
    const Rational c = rc / lead_c;
    if (ring != Ring::Q && !is_integral(c)) return std::nullopt;
    const GroupRingElement step = GroupRingElement::monomial(ring, diff, c);
    quotient += step;
    rem -= step * divisor;
  }
  return quotient.shifted(LatticeVector(alpha - beta));
}

// ---------------------------------------------------------------------------
// text form

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    std::string monomial;
    for (Index i = 0; i < e.size(); ++i) {
      if (e(i) == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += "t" + std::to_string(i + 1);
      if (e(i) != 1) monomial += "^" + std::to_string(e(i));
    }
    std::string term;
    if (monomial.empty())
      term = format_rational(magnitude);
    else if (magnitude == 1)
      term = monomial;
    else
      term = format_rational(magnitude) + "*" + monomial;
    if (first)
      out += (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Ring ring, Index rank) : text_(text), ring_(ring), rank_(rank) {}

  GroupRingElement parse() {
    GroupRingElement value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("group ring parse error at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t signed_int() {
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    if (accept('(')) {
      const std::int64_t v = signed_int();
      if (!accept(')')) fail("expected ')'");
      return negative ? -v : v;
    }
    const std::string d = digits();
    if (d.empty()) fail("expected integer exponent");
    const std::int64_t v = std::stoll(d);
    return negative ? -v : v;
  }

  GroupRingElement expression() {
    GroupRingElement value = GroupRingElement::zero(ring_, rank_);
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    GroupRingElement t = term();
    value += negative ? -t : t;
    while (true) {
      if (accept('+'))
        value += term();
      else if (accept('-'))
        value -= term();
      else
        break;
    }
    return value;
  }

  GroupRingElement term() {
    GroupRingElement value = power();
    while (accept('*')) value *= power();
    return value;
  }

  GroupRingElement power() {
    GroupRingElement base = atom();
    if (!accept('^')) return base;
    const std::int64_t e = signed_int();
    if (e < 0) {
      if (!base.is_monomial()) fail("negative power of a non-monomial");
      try {
        base = base.monomial_inverse();
      } catch (const std::domain_error& err) {
        fail(err.what());
      }
    }
    GroupRingElement out = GroupRingElement::constant(ring_, rank_, 1);
    for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) out *= base;
    return out;
  }

  GroupRingElement atom() {
    skip_space();
    if (accept('(')) {
      GroupRingElement inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (pos_ < text_.size() && text_[pos_] == 't') {
      ++pos_;
      std::string idx;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) idx += text_[pos_++];
      const Index i = idx.empty() ? 1 : std::stoll(idx);
      if (i < 1 || i > rank_) fail("variable t" + std::to_string(i) + " outside rank " + std::to_string(rank_));
      return GroupRingElement::variable(ring_, rank_, i - 1);
    }
    const std::string num = digits();
    if (num.empty()) fail("expected number, variable or '('");
    Rational value{Integer(num)};
    skip_space();
    // "p/q" binds tighter than '*'.
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::string den = digits();
      if (den.empty() || Integer(den) == 0) fail("bad denominator");
      value /= Rational(Integer(den));
    }
    return GroupRingElement::constant(ring_, rank_, value);
  }

  std::string_view text_;
  Ring ring_;
  Index rank_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupRingElement parse_group_ring(std::string_view text, Ring ring, Index rank) {
  return Parser(text, ring, rank).parse();
}

// ---------------------------------------------------------------------------
// matrices

GroupRingMatrix specialize(const GroupRingMatrix& m, const QuotientMap& q) {
  return m.unaryExpr([&q](const GroupRingElement& x) { return x.specialized(q); });
}

GroupRingMatrix multiply(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  GroupRingMatrix out(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      GroupRingElement sum(0);
      for (Index k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        sum += a(i, k) * b(k, j);
      }
      out(i, j) = sum;
    }
  return out;
}

}  // namespace novikov
