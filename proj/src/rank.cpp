#include "novikov/rank.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace novikov {

Gf2_31 operator*(Gf2_31 a, Gf2_31 b) {
  std::uint64_t product = 0;
  std::uint64_t x = a.value_;
  std::uint32_t y = b.value_;
  while (y != 0) {
    if (y & 1u) product ^= x;
    x <<= 1;
    y >>= 1;
  }
  for (int bit = 61; bit >= 31; --bit) {
    if (product & (std::uint64_t{1} << bit)) product ^= std::uint64_t{Gf2_31::kModulus} << (bit - 31);
  }
  return Gf2_31::from_bits(static_cast<std::uint32_t>(product));
}

Gf2_31 Gf2_31::pow(std::uint64_t e) const {
  Gf2_31 base = *this;
  Gf2_31 out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Gf2_31 Gf2_31::inverse() const {
  if (is_zero()) throw std::domain_error("GF(2^31): zero has no inverse");
  return pow((std::uint64_t{1} << 31) - 2);
}

std::string method_name(RankMethod method) {
  switch (method) {
    case RankMethod::FractionFieldExact: return "fraction-field exact";
    case RankMethod::Evaluation: return "evaluation";
    case RankMethod::TruncatedOracle: return "truncated-oracle";
  }
  return "?";
}

namespace {

struct MatrixShape {
  Ring ring = Ring::Q;
  Index rank = 0;
};

MatrixShape shape_of(const GroupRingMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_generic()) return {m(i, j).ring(), m(i, j).rank()};
  return {};
}

GroupRingMatrix promoted(const GroupRingMatrix& m, MatrixShape shape) {
  const Ring ring = shape.ring == Ring::Z ? Ring::Q : shape.ring;
  return m.unaryExpr([&](const GroupRingElement& x) { return x.with_ring(ring, shape.rank); });
}

template <class Scalar>
Index evaluated_rank(const GroupRingMatrix& m, std::span<const Scalar> point) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> values(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) values(i, j) = evaluate<Scalar>(m(i, j), point);
  return bareiss_rank(values);
}

}  // namespace

Index evaluation_rank(const GroupRingMatrix& m, std::mt19937_64& engine) {
  const MatrixShape shape = shape_of(m);
  const GroupRingMatrix a = promoted(m, shape);
  if (shape.ring == Ring::Z2) {
    std::vector<Gf2_31> point;
    for (Index i = 0; i < shape.rank; ++i)
      point.push_back(Gf2_31::from_bits(static_cast<std::uint32_t>(1 + uniform_below(engine, (1u << 31) - 1))));
    return evaluated_rank<Gf2_31>(a, point);
  }
  std::vector<Rational> point;
  for (Index i = 0; i < shape.rank; ++i) {
    const auto magnitude = static_cast<std::int64_t>(1 + uniform_below(engine, std::uint64_t{1} << 20));
    point.emplace_back(uniform_below(engine, 2) == 0 ? magnitude : -magnitude);
  }
  return evaluated_rank<Rational>(a, point);
}

RankResult matrix_rank_fraction_field(const GroupRingMatrix& m, const RankOptions& options) {
  RankResult result;
  if (m.rows() == 0 || m.cols() == 0) return result;

  const MatrixShape shape = shape_of(m);
  if (m.rows() <= options.exact_threshold && m.cols() <= options.exact_threshold) {
    result.rank = bareiss_rank(promoted(m, shape));
    return result;
  }

  // Evaluation at a random point never exceeds the true rank; keep drawing
  // until the maximum has been hit twice.
  result.method = RankMethod::Evaluation;
  result.exact_confirmed = false;
  std::mt19937_64 engine(options.seed);
  Index best = -1;
  int hits = 0;
  for (int trial = 0; trial < options.max_trials; ++trial) {
    const Index r = evaluation_rank(m, engine);
    ++result.trials;
    if (r > best) {
      best = r;
      hits = 1;
    } else if (r == best) {
      ++hits;
    }
    if (hits >= 2) break;
  }
  result.rank = best;
  return result;
}

}  // namespace novikov
