#include "novikov/lattice.hpp"

#include "novikov/errors.hpp"

#include <algorithm>
#include <numeric>

namespace novikov {

namespace mp = boost::multiprecision;

bool LexLess::operator()(const LatticeVector& a, const LatticeVector& b) const {
  const Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

bool lex_equal(const LatticeVector& a, const LatticeVector& b) {
  return a.size() == b.size() && (a.size() == 0 || a == b);
}

bool same_matrix(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}

// ---------------------------------------------------------------------------
// CohomologyClass

CohomologyClass::CohomologyClass(std::initializer_list<Rational> periods)
    : periods_(static_cast<Index>(periods.size())) {
  Index i = 0;
  for (const auto& p : periods) periods_(i++) = p;
}

CohomologyClass CohomologyClass::zero(Index rank) {
  return CohomologyClass(RationalVector::Constant(rank, Rational(0)));
}

bool CohomologyClass::is_zero() const {
  for (Index i = 0; i < periods_.size(); ++i)
    if (periods_(i) != 0) return false;
  return true;
}

CohomologyClass CohomologyClass::scaled(const Rational& factor) const {
  RationalVector out = periods_;
  for (Index i = 0; i < out.size(); ++i) out(i) *= factor;
  return CohomologyClass(std::move(out));
}

LatticeVector CohomologyClass::ray() const {
  Integer lcm = 1;
  for (Index i = 0; i < periods_.size(); ++i) lcm = mp::lcm(lcm, Integer(mp::denominator(periods_(i))));
  std::vector<Integer> scaled(static_cast<std::size_t>(periods_.size()));
  Integer gcd = 0;
  for (Index i = 0; i < periods_.size(); ++i) {
    const Rational v = periods_(i) * Rational(lcm);
    scaled[static_cast<std::size_t>(i)] = mp::numerator(v);
    gcd = mp::gcd(gcd, scaled[static_cast<std::size_t>(i)]);
  }
  LatticeVector out(periods_.size());
  for (Index i = 0; i < periods_.size(); ++i)
    out(i) = gcd == 0 ? 0 : to_int64(Integer(scaled[static_cast<std::size_t>(i)] / gcd));
  return out;
}

bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.rank() != b.rank()) return false;
  for (Index i = 0; i < a.rank(); ++i)
    if (a.periods_(i) != b.periods_(i)) return false;
  return true;
}

Rational period_eval(const CohomologyClass& a, const LatticeVector& element) {
  if (a.rank() != element.size())
    throw InputError("period_eval: class has rank " + std::to_string(a.rank()) + " but element has length " +
                     std::to_string(element.size()));
  Rational sum = 0;
  for (Index i = 0; i < element.size(); ++i) {
    if (element(i) != 0) sum += a.periods()(i) * Rational(element(i));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Polytope / Subpolytope

Polytope::Polytope(std::vector<CohomologyClass> vertices) {
  if (vertices.empty()) throw InputError("polytope needs at least one vertex");
  rank_ = vertices.front().rank();
  for (auto& v : vertices) {
    if (v.rank() != rank_) throw InputError("polytope vertices have mixed ranks");
    if (std::find(vertices_.begin(), vertices_.end(), v) == vertices_.end()) vertices_.push_back(std::move(v));
  }
}

bool Polytope::contains_vertex(const CohomologyClass& a) const {
  return std::find(vertices_.begin(), vertices_.end(), a) != vertices_.end();
}

Polytope Polytope::scaled(const Rational& factor) const {
  std::vector<CohomologyClass> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.scaled(factor));
  return Polytope(std::move(out));
}

CohomologyClass Polytope::convex_combination(std::span<const Rational> weights) const {
  if (static_cast<Index>(weights.size()) != size())
    throw InputError("expected " + std::to_string(size()) + " convex weights, got " + std::to_string(weights.size()));
  Rational total = 0;
  RationalVector sum = RationalVector::Constant(rank_, Rational(0));
  for (std::size_t l = 0; l < weights.size(); ++l) {
    if (weights[l] < 0) throw InputError("convex weights must be non-negative");
    total += weights[l];
    for (Index i = 0; i < rank_; ++i) sum(i) += weights[l] * vertices_[l].periods()(i);
  }
  if (total != 1) throw InputError("convex weights must sum to 1, got " + format_rational(total));
  return CohomologyClass(std::move(sum));
}

Subpolytope::Subpolytope(Polytope parent, std::vector<Index> vertex_indices)
    : parent_(std::move(parent)), indices_(std::move(vertex_indices)) {
  if (indices_.empty()) throw InputError("subpolytope needs at least one vertex");
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw InputError("subpolytope vertex indices repeat");
  if (indices_.front() < 0 || indices_.back() >= parent_.size())
    throw InputError("subpolytope vertex index out of range");
}

Subpolytope Subpolytope::full(Polytope parent) {
  std::vector<Index> all(static_cast<std::size_t>(parent.size()));
  std::iota(all.begin(), all.end(), Index{0});
  return Subpolytope(std::move(parent), std::move(all));
}

std::vector<CohomologyClass> Subpolytope::vertices() const {
  std::vector<CohomologyClass> out;
  out.reserve(indices_.size());
  for (Index i : indices_) out.push_back(parent_.vertex(i));
  return out;
}

Rational polytope_min_period(const Polytope& polytope, const LatticeVector& element) {
  return polytope_min_period(Subpolytope::full(polytope), element);
}

Rational polytope_min_period(const Subpolytope& face, const LatticeVector& element) {
  Rational best = period_eval(face.parent().vertex(face.vertex_indices().front()), element);
  for (Index i : face.vertex_indices()) best = std::min(best, period_eval(face.parent().vertex(i), element));
  return best;
}

// ---------------------------------------------------------------------------
// Integer normal forms

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

void swap_rows(IntegerMatrix& m, Index i, Index j) {
  if (i != j) m.row(i).swap(m.row(j));
}

void add_row_multiple(IntegerMatrix& m, Index target, Index source, const Integer& factor) {
  if (factor == 0) return;
  for (Index c = 0; c < m.cols(); ++c) m(target, c) -= factor * m(source, c);
}

RationalMatrix invert_unimodular(const IntegerMatrix& u) {
  const Index n = u.rows();
  RationalMatrix a(n, 2 * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      a(i, j) = Rational(u(i, j));
      a(i, n + j) = Rational(i == j ? 1 : 0);
    }
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::logic_error("invert_unimodular: singular matrix");
    a.row(pivot).swap(a.row(col));
    const Rational inv = Rational(1) / a(col, col);
    for (Index j = 0; j < 2 * n; ++j) a(col, j) *= inv;
    for (Index i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (Index j = 0; j < 2 * n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return a.rightCols(n);
}

IntegerMatrix integral_rows(std::span<const CohomologyClass> classes, Index rank) {
  IntegerMatrix m(static_cast<Index>(classes.size()), rank);
  for (std::size_t l = 0; l < classes.size(); ++l) {
    if (classes[l].rank() != rank) throw InputError("classes have mixed ranks");
    Integer lcm = 1;
    for (Index i = 0; i < rank; ++i) lcm = mp::lcm(lcm, Integer(mp::denominator(classes[l].periods()(i))));
    for (Index i = 0; i < rank; ++i)
      m(static_cast<Index>(l), i) = mp::numerator(Rational(classes[l].periods()(i) * Rational(lcm)));
  }
  return m;
}

IntMatrix to_int_matrix(const IntegerMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = to_int64(m(i, j));
  return out;
}

}  // namespace

IntegerMatrix hermite_normal_form(IntegerMatrix m) {
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    while (true) {
      Index best = -1;
      for (Index i = row; i < m.rows(); ++i) {
        if (m(i, col) != 0 && (best < 0 || mp::abs(m(i, col)) < mp::abs(m(best, col)))) best = i;
      }
      if (best < 0) break;
      swap_rows(m, row, best);
      bool done = true;
      for (Index i = row + 1; i < m.rows(); ++i) {
        if (m(i, col) == 0) continue;
        add_row_multiple(m, i, row, floor_div(m(i, col), m(row, col)));
        if (m(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (row >= m.rows() || m(row, col) == 0) continue;
    if (m(row, col) < 0)
      for (Index c = 0; c < m.cols(); ++c) m(row, c) = -m(row, c);
    for (Index i = 0; i < row; ++i) add_row_multiple(m, i, row, floor_div(m(i, col), m(row, col)));
    ++row;
  }
  return m.topRows(row).eval();
}

IntMatrix kernel_lattice(std::span<const CohomologyClass> classes) {
  return QuotientMap(classes).kernel();
}

// ---------------------------------------------------------------------------
// QuotientMap

QuotientMap::QuotientMap(std::span<const CohomologyClass> classes) {
  if (classes.empty()) throw InputError("quotient_map needs at least one class");
  const Index r = classes.front().rank();
  const IntegerMatrix m = integral_rows(classes, r);
  const Index k = m.rows();

  // Row-reduce [M^T | I]: the left block becomes an echelon form of M^T and
  // the rows whose left block vanishes carry the (saturated) kernel in HNF.
  IntegerMatrix aug(r, k + r);
  aug.setZero();
  aug.leftCols(k) = m.transpose();
  for (Index i = 0; i < r; ++i) aug(i, k + i) = 1;

  // hermite_normal_form drops no rows here: the identity block keeps every
  // row nonzero.
  const IntegerMatrix h = hermite_normal_form(aug);
  Index rho = 0;
  while (rho < r && !h.row(rho).leftCols(k).isZero()) ++rho;

  const IntegerMatrix unimodular = h.rightCols(r);
  kernel_ = to_int_matrix(unimodular.bottomRows(r - rho).transpose().eval());

  const RationalMatrix inverse = invert_unimodular(unimodular);
  IntegerMatrix q(rho, r);
  for (Index i = 0; i < rho; ++i)
    for (Index j = 0; j < r; ++j) {
      const Rational& v = inverse(j, i);
      if (!is_integral(v)) throw std::logic_error("quotient_map: non-integral inverse");
      q(i, j) = mp::numerator(v);
    }
  matrix_ = to_int_matrix(hermite_normal_form(q));
  if (matrix_.rows() != rho) throw std::logic_error("quotient_map: rank drop in canonical form");
  if (matrix_.cols() != r) matrix_.resize(rho, r);
}

QuotientMap QuotientMap::augmentation(Index source_rank) {
  QuotientMap q;
  q.matrix_ = IntMatrix(0, source_rank);
  q.kernel_ = IntMatrix::Identity(source_rank, source_rank);
  return q;
}

QuotientMap QuotientMap::identity(Index rank) {
  QuotientMap q;
  q.matrix_ = IntMatrix::Identity(rank, rank);
  q.kernel_ = IntMatrix(rank, 0);
  return q;
}

LatticeVector QuotientMap::apply(const LatticeVector& element) const {
  if (element.size() != source_rank()) throw InputError("quotient map applied to element of wrong rank");
  LatticeVector out = LatticeVector::Zero(target_rank());
  for (Index i = 0; i < target_rank(); ++i)
    for (Index j = 0; j < source_rank(); ++j) out(i) += matrix_(i, j) * element(j);
  return out;
}

CohomologyClass QuotientMap::induced(const CohomologyClass& a) const {
  if (a.rank() != source_rank()) throw InputError("induced: class rank does not match quotient source");
  const Index rho = target_rank();
  RationalVector y = RationalVector::Constant(rho, Rational(0));
  Index col = 0;
  for (Index k = 0; k < rho; ++k) {
    while (matrix_(k, col) == 0) ++col;
    Rational residual = a.periods()(col);
    for (Index j = 0; j < k; ++j) residual -= y(j) * Rational(matrix_(j, col));
    y(k) = residual / Rational(matrix_(k, col));
    ++col;
  }
  for (Index j = 0; j < source_rank(); ++j) {
    Rational v = 0;
    for (Index k = 0; k < rho; ++k) v += y(k) * Rational(matrix_(k, j));
    if (v != a.periods()(j)) throw InputError("class does not vanish on the kernel of the quotient");
  }
  return CohomologyClass(std::move(y));
}

}  // namespace novikov
