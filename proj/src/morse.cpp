#include "novikov/morse.hpp"

#include "novikov/errors.hpp"
#include "novikov/random.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace novikov {

Matching::Matching(std::vector<MatchedPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
}

std::optional<Index> Matching::up_partner(Index degree, Index cell) const {
  for (const auto& p : pairs_)
    if (p.degree == degree && p.lower == cell) return p.upper;
  return std::nullopt;
}

std::optional<Index> Matching::down_partner(Index degree, Index cell) const {
  for (const auto& p : pairs_)
    if (p.degree + 1 == degree && p.upper == cell) return p.lower;
  return std::nullopt;
}

std::vector<Index> Matching::critical_cells(const EquivariantComplex& x, Index degree) const {
  std::vector<Index> out;
  for (Index c = 0; c < x.cell_count(degree); ++c)
    if (is_critical(degree, c)) out.push_back(c);
  return out;
}

namespace {

// Directed cycle search in the band between `degree` and degree + 1: face
// edges point down, matched edges point up.
bool band_has_cycle(const EquivariantComplex& x, const std::vector<MatchedPair>& pairs, Index degree) {
  const GroupRingMatrix d = x.boundary(degree + 1);
  const Index lower = d.rows();
  const Index n = lower + d.cols();
  std::set<std::pair<Index, Index>> matched;
  for (const auto& p : pairs)
    if (p.degree == degree) matched.insert({p.lower, p.upper});

  std::vector<std::vector<Index>> adjacency(static_cast<std::size_t>(n));
  for (Index s = 0; s < d.rows(); ++s)
    for (Index t = 0; t < d.cols(); ++t) {
      if (d(s, t).is_zero()) continue;
      if (matched.count({s, t}))
        adjacency[static_cast<std::size_t>(s)].push_back(lower + t);
      else
        adjacency[static_cast<std::size_t>(lower + t)].push_back(s);
    }

  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 on stack, 2 done
  for (Index root = 0; root < n; ++root) {
    if (state[static_cast<std::size_t>(root)] != 0) continue;
    std::vector<std::pair<Index, std::size_t>> stack{{root, 0}};
    state[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto& out = adjacency[static_cast<std::size_t>(node)];
      if (next == out.size()) {
        state[static_cast<std::size_t>(node)] = 2;
        stack.pop_back();
        continue;
      }
      const Index to = out[next++];
      if (state[static_cast<std::size_t>(to)] == 1) return true;
      if (state[static_cast<std::size_t>(to)] == 0) {
        state[static_cast<std::size_t>(to)] = 1;
        stack.push_back({to, 0});
      }
    }
  }
  return false;
}

}  // namespace

void validate_matching(const EquivariantComplex& x, const Matching& m) {
  std::set<std::pair<Index, Index>> used;
  for (const auto& p : m.pairs()) {
    if (p.degree < 0 || p.degree + 1 > x.top_degree() || p.lower < 0 || p.lower >= x.cell_count(p.degree) ||
        p.upper < 0 || p.upper >= x.cell_count(p.degree + 1))
      throw ValidationError("matched pair refers to a missing cell");
    if (!used.insert({p.degree, p.lower}).second || !used.insert({p.degree + 1, p.upper}).second)
      throw ValidationError("a cell appears in two matched pairs");
    if (!x.boundary(p.degree + 1)(p.lower, p.upper).is_unit_monomial())
      throw ValidationError("matched pair (" + x.cells(p.degree)[static_cast<std::size_t>(p.lower)] + ", " +
                            x.cells(p.degree + 1)[static_cast<std::size_t>(p.upper)] +
                            ") does not have a unit-monomial incidence");
  }
  for (Index degree = 0; degree < x.top_degree(); ++degree)
    if (band_has_cycle(x, m.pairs(), degree))
      throw MorseCycleError("matching has a directed cycle between degrees " + std::to_string(degree) + " and " +
                            std::to_string(degree + 1));
}

Matching acyclic_matching(const EquivariantComplex& x, std::uint64_t seed, MatchingStrategy strategy) {
  if (strategy == MatchingStrategy::None) return Matching{};

  std::vector<MatchedPair> candidates;
  for (Index degree = 0; degree < x.top_degree(); ++degree) {
    const GroupRingMatrix d = x.boundary(degree + 1);
    for (Index s = 0; s < d.rows(); ++s)
      for (Index t = 0; t < d.cols(); ++t)
        if (d(s, t).is_unit_monomial()) candidates.push_back({degree, s, t});
  }
  std::mt19937_64 engine(seed);
  seeded_shuffle(candidates, engine);

  std::vector<MatchedPair> chosen;
  std::set<std::pair<Index, Index>> used;
  for (const auto& c : candidates) {
    if (used.count({c.degree, c.lower}) || used.count({c.degree + 1, c.upper})) continue;
    chosen.push_back(c);
    if (band_has_cycle(x, chosen, c.degree)) {
      chosen.pop_back();
      continue;
    }
    used.insert({c.degree, c.lower});
    used.insert({c.degree + 1, c.upper});
  }
  return Matching(std::move(chosen));
}

namespace {

using Flow = std::map<Index, GroupRingElement>;  // critical cell -> coefficient

class VPathFlows {
 public:
  VPathFlows(const EquivariantComplex& x, const Matching& m, Index degree)
      : x_(x), m_(m), degree_(degree), up_(x.boundary(degree + 1)) {
    const Index n = x.cell_count(degree);
    memo_.resize(static_cast<std::size_t>(n));
    state_.assign(static_cast<std::size_t>(n), 0);
  }

  // Sum over V-paths from `cell` (degree `degree_`) to critical cells.
  const Flow& flow(Index cell) {
    auto& st = state_[static_cast<std::size_t>(cell)];
    if (st == 2) return memo_[static_cast<std::size_t>(cell)];
    if (st == 1) throw MorseCycleError("V-path revisits cell " + x_.cells(degree_)[static_cast<std::size_t>(cell)]);
    st = 1;
    Flow result;
    if (m_.is_critical(degree_, cell)) {
      result.emplace(cell, GroupRingElement::constant(x_.ring(), x_.rank(), 1));
    } else if (auto partner = m_.up_partner(degree_, cell)) {
      const GroupRingElement step = -up_(cell, *partner).monomial_inverse();
      for (Index other = 0; other < up_.rows(); ++other) {
        if (other == cell || up_(other, *partner).is_zero()) continue;
        const GroupRingElement weight = step * up_(other, *partner);
        for (const auto& [target, c] : flow(other)) accumulate(result, target, weight * c);
      }
    }
    // Cells matched downward are the top of a lower pair: no V-path ends there.
    memo_[static_cast<std::size_t>(cell)] = std::move(result);
    st = 2;
    return memo_[static_cast<std::size_t>(cell)];
  }

  static void accumulate(Flow& f, Index target, const GroupRingElement& value) {
    auto [it, inserted] = f.emplace(target, value);
    if (!inserted) it->second += value;
    if (it->second.is_zero()) f.erase(it);
  }

 private:
  const EquivariantComplex& x_;
  const Matching& m_;
  Index degree_;
  GroupRingMatrix up_;
  std::vector<Flow> memo_;
  std::vector<int> state_;
};

}  // namespace

EquivariantComplex vpath_boundary(const EquivariantComplex& x, const Matching& m) {
  validate_matching(x, m);
  if (m.empty()) return x;

  const Index top = x.top_degree();
  std::vector<std::vector<Index>> critical;
  std::vector<std::vector<std::string>> names;
  for (Index degree = 0; degree <= top; ++degree) {
    critical.push_back(m.critical_cells(x, degree));
    std::vector<std::string> n;
    for (Index c : critical.back()) n.push_back(x.cells(degree)[static_cast<std::size_t>(c)]);
    names.push_back(std::move(n));
  }

  std::vector<GroupRingMatrix> boundaries;
  for (Index degree = 1; degree <= top; ++degree) {
    const auto& rows = critical[static_cast<std::size_t>(degree - 1)];
    const auto& cols = critical[static_cast<std::size_t>(degree)];
    std::map<Index, Index> row_position;
    for (std::size_t k = 0; k < rows.size(); ++k) row_position[rows[k]] = static_cast<Index>(k);

    const GroupRingMatrix d = x.boundary(degree);
    VPathFlows flows(x, m, degree - 1);
    GroupRingMatrix out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (Index i = 0; i < out.rows(); ++i)
      for (Index j = 0; j < out.cols(); ++j) out(i, j) = GroupRingElement::zero(x.ring(), x.rank());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (Index face = 0; face < d.rows(); ++face) {
        const GroupRingElement& incidence = d(face, cols[j]);
        if (incidence.is_zero()) continue;
        for (const auto& [target, c] : flows.flow(face))
          out(row_position.at(target), static_cast<Index>(j)) += incidence * c;
      }
    }
    boundaries.push_back(std::move(out));
  }
  return EquivariantComplex(x.ring(), x.rank(), std::move(names), std::move(boundaries));
}

// ---------------------------------------------------------------------------
// pair-by-pair elimination with chain maps

namespace {

GroupRingMatrix identity_matrix(Index n, Ring ring, Index rank) {
  GroupRingMatrix out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      out(i, j) = i == j ? GroupRingElement::constant(ring, rank, 1) : GroupRingElement::zero(ring, rank);
  return out;
}

GroupRingMatrix drop_row(const GroupRingMatrix& m, Index row) {
  GroupRingMatrix out(m.rows() - 1, m.cols());
  out << m.topRows(row), m.bottomRows(m.rows() - row - 1);
  return out;
}

GroupRingMatrix drop_col(const GroupRingMatrix& m, Index col) {
  GroupRingMatrix out(m.rows(), m.cols() - 1);
  out << m.leftCols(col), m.rightCols(m.cols() - col - 1);
  return out;
}

Index position(const std::vector<Index>& alive, Index cell) {
  auto it = std::find(alive.begin(), alive.end(), cell);
  if (it == alive.end()) throw std::logic_error("reduce_by_elimination: cell already eliminated");
  return it - alive.begin();
}

}  // namespace

MorseReduction reduce_by_elimination(const EquivariantComplex& x, const Matching& m) {
  validate_matching(x, m);
  const Index top = x.top_degree();
  const Ring ring = x.ring();
  const Index rank = x.rank();

  // d[k] is the current d_{k+1}.
  std::vector<GroupRingMatrix> d = x.boundaries();
  std::vector<std::vector<Index>> alive;
  MorseReduction out;
  for (Index degree = 0; degree <= top; ++degree) {
    std::vector<Index> cells(static_cast<std::size_t>(x.cell_count(degree)));
    for (std::size_t k = 0; k < cells.size(); ++k) cells[k] = static_cast<Index>(k);
    alive.push_back(std::move(cells));
    out.projection.push_back(identity_matrix(x.cell_count(degree), ring, rank));
    out.inclusion.push_back(identity_matrix(x.cell_count(degree), ring, rank));
  }

  for (const auto& pair : m.pairs()) {
    const Index i = pair.degree;
    auto& rows = alive[static_cast<std::size_t>(i)];
    auto& cols = alive[static_cast<std::size_t>(i + 1)];
    const Index s = position(rows, pair.lower);
    const Index t = position(cols, pair.upper);
    GroupRingMatrix& up = d[static_cast<std::size_t>(i)];
    if (!up(s, t).is_unit_monomial())
      throw MorseCycleError("matched incidence changed during elimination; matching is not acyclic");
    const GroupRingElement u_inv = up(s, t).monomial_inverse();

    // Chain maps, using the boundary before this step.
    {
      // projection in degree i: sigma |-> -sum_{y != sigma} d[y, tau] u^{-1} y
      GroupRingMatrix f(up.rows() - 1, up.rows());
      for (Index r = 0, k = 0; r < up.rows(); ++r) {
        if (r == s) continue;
        for (Index c = 0; c < up.rows(); ++c)
          f(k, c) = c == s ? GroupRingElement(-(up(r, t) * u_inv)).with_ring(ring, rank)
                           : (c == r ? GroupRingElement::constant(ring, rank, 1) : GroupRingElement::zero(ring, rank));
        ++k;
      }
      out.projection[static_cast<std::size_t>(i)] = multiply(f, out.projection[static_cast<std::size_t>(i)]);
      out.projection[static_cast<std::size_t>(i + 1)] = drop_row(out.projection[static_cast<std::size_t>(i + 1)], t);

      // inclusion in degree i + 1: x |-> x - u^{-1} d[sigma, x] tau
      GroupRingMatrix g(up.cols(), up.cols() - 1);
      for (Index c = 0, k = 0; c < up.cols(); ++c) {
        if (c == t) continue;
        for (Index r = 0; r < up.cols(); ++r)
          g(r, k) = r == t ? GroupRingElement(-(u_inv * up(s, c))).with_ring(ring, rank)
                           : (r == c ? GroupRingElement::constant(ring, rank, 1) : GroupRingElement::zero(ring, rank));
        ++k;
      }
      out.inclusion[static_cast<std::size_t>(i + 1)] = multiply(out.inclusion[static_cast<std::size_t>(i + 1)], g);
      out.inclusion[static_cast<std::size_t>(i)] = drop_col(out.inclusion[static_cast<std::size_t>(i)], s);
    }

    // d'_{i+1}[y, x] = d[y, x] - d[y, tau] u^{-1} d[sigma, x]
    GroupRingMatrix reduced(up.rows() - 1, up.cols() - 1);
    for (Index r = 0, kr = 0; r < up.rows(); ++r) {
      if (r == s) continue;
      for (Index c = 0, kc = 0; c < up.cols(); ++c) {
        if (c == t) continue;
        GroupRingElement v = up(r, c);
        if (!up(r, t).is_zero() && !up(s, c).is_zero()) v -= up(r, t) * u_inv * up(s, c);
        reduced(kr, kc++) = v;
      }
      ++kr;
    }
    up = std::move(reduced);
    if (i >= 1) d[static_cast<std::size_t>(i - 1)] = drop_col(d[static_cast<std::size_t>(i - 1)], s);
    if (i + 1 < top) d[static_cast<std::size_t>(i + 1)] = drop_row(d[static_cast<std::size_t>(i + 1)], t);
    rows.erase(rows.begin() + s);
    cols.erase(cols.begin() + t);
  }

  std::vector<std::vector<std::string>> names;
  for (Index degree = 0; degree <= top; ++degree) {
    std::vector<std::string> n;
    for (Index c : alive[static_cast<std::size_t>(degree)]) n.push_back(x.cells(degree)[static_cast<std::size_t>(c)]);
    names.push_back(std::move(n));
  }
  out.reduced = EquivariantComplex(ring, rank, std::move(names), std::move(d));
  return out;
}

bool is_chain_map(const EquivariantComplex& source, const EquivariantComplex& target,
                  const std::vector<GroupRingMatrix>& maps) {
  const Index top = std::max(source.top_degree(), target.top_degree());
  if (static_cast<Index>(maps.size()) != top + 1) return false;
  for (Index degree = 1; degree <= top; ++degree) {
    const GroupRingMatrix lhs = multiply(target.boundary(degree), maps[static_cast<std::size_t>(degree)]);
    const GroupRingMatrix rhs = multiply(maps[static_cast<std::size_t>(degree - 1)], source.boundary(degree));
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return false;
    for (Index i = 0; i < lhs.rows(); ++i)
      for (Index j = 0; j < lhs.cols(); ++j)
        if (lhs(i, j) != rhs(i, j)) return false;
  }
  return true;
}

}  // namespace novikov
