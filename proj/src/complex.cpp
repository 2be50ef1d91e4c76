#include "novikov/complex.hpp"

#include "novikov/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace novikov {

EquivariantComplex::EquivariantComplex(Ring ring, Index rank, std::vector<std::vector<std::string>> cells,
                                       std::vector<GroupRingMatrix> boundaries)
    : ring_(ring), rank_(rank), cells_(std::move(cells)), boundaries_(std::move(boundaries)) {
  if (rank_ < 0) throw InputError("deck rank must be non-negative");
  const std::size_t expected = cells_.empty() ? 0 : cells_.size() - 1;
  if (boundaries_.size() != expected)
    throw InputError("expected " + std::to_string(expected) + " boundary matrices, got " +
                     std::to_string(boundaries_.size()));
  for (std::size_t k = 0; k < boundaries_.size(); ++k) {
    auto& d = boundaries_[k];
    if (d.rows() != static_cast<Index>(cells_[k].size()) || d.cols() != static_cast<Index>(cells_[k + 1].size()))
      throw InputError("boundary d" + std::to_string(k + 1) + " is " + std::to_string(d.rows()) + "x" +
                       std::to_string(d.cols()) + ", expected " + std::to_string(cells_[k].size()) + "x" +
                       std::to_string(cells_[k + 1].size()));
    d = d.unaryExpr([this](const GroupRingElement& x) { return x.with_ring(ring_, rank_); });
  }
  validate_boundary_square(boundaries_);
}

Index EquivariantComplex::cell_count(Index degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return static_cast<Index>(cells_[static_cast<std::size_t>(degree)].size());
}

const std::vector<std::string>& EquivariantComplex::cells(Index degree) const {
  static const std::vector<std::string> kEmpty;
  if (degree < 0 || degree > top_degree()) return kEmpty;
  return cells_[static_cast<std::size_t>(degree)];
}

GroupRingMatrix EquivariantComplex::boundary(Index degree) const {
  if (degree >= 1 && degree <= top_degree()) return boundaries_[static_cast<std::size_t>(degree - 1)];
  return GroupRingMatrix(cell_count(degree - 1), cell_count(degree));
}

EquivariantComplex EquivariantComplex::specialized(const QuotientMap& q) const {
  if (q.source_rank() != rank_) throw InputError("quotient source rank does not match the complex");
  std::vector<GroupRingMatrix> out;
  out.reserve(boundaries_.size());
  for (const auto& d : boundaries_) out.push_back(specialize(d, q));
  return EquivariantComplex(ring_, q.target_rank(), cells_, std::move(out));
}

EquivariantComplex EquivariantComplex::with_ring(Ring ring) const {
  std::vector<GroupRingMatrix> out;
  for (const auto& d : boundaries_)
    out.push_back(d.unaryExpr([&](const GroupRingElement& x) { return x.with_ring(ring, rank_); }));
  return EquivariantComplex(ring, rank_, cells_, std::move(out));
}

long EquivariantComplex::euler_characteristic() const {
  long chi = 0;
  for (Index i = 0; i <= top_degree(); ++i) chi += (i % 2 == 0 ? 1 : -1) * cell_count(i);
  return chi;
}

std::string EquivariantComplex::canonical_text() const {
  std::ostringstream out;
  out << "ring " << ring_name(ring_) << "\nrank " << rank_ << "\n";
  for (Index i = 0; i <= top_degree(); ++i) {
    out << "cells " << i << ":";
    for (const auto& name : cells(i)) out << " " << name;
    out << "\n";
  }
  for (std::size_t k = 0; k < boundaries_.size(); ++k) {
    const auto& d = boundaries_[k];
    out << "d" << k + 1 << "\n";
    for (Index r = 0; r < d.rows(); ++r) {
      for (Index c = 0; c < d.cols(); ++c) out << (c ? " | " : "  ") << d(r, c).to_string();
      out << "\n";
    }
  }
  return out.str();
}

bool operator==(const EquivariantComplex& a, const EquivariantComplex& b) {
  if (a.ring_ != b.ring_ || a.rank_ != b.rank_ || a.cells_ != b.cells_) return false;
  if (a.boundaries_.size() != b.boundaries_.size()) return false;
  for (std::size_t k = 0; k < a.boundaries_.size(); ++k) {
    const auto& x = a.boundaries_[k];
    const auto& y = b.boundaries_[k];
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (Index i = 0; i < x.rows(); ++i)
      for (Index j = 0; j < x.cols(); ++j)
        if (x(i, j) != y(i, j)) return false;
  }
  return true;
}

void validate_boundary_square(const std::vector<GroupRingMatrix>& boundaries) {
  for (std::size_t k = 0; k + 1 < boundaries.size(); ++k) {
    const GroupRingMatrix dd = multiply(boundaries[k], boundaries[k + 1]);
    for (Index i = 0; i < dd.rows(); ++i)
      for (Index j = 0; j < dd.cols(); ++j)
        if (!dd(i, j).is_zero())
          throw ValidationError("d" + std::to_string(k + 1) + " o d" + std::to_string(k + 2) + " has nonzero entry (" +
                                    std::to_string(i) + ", " + std::to_string(j) + "): " + dd(i, j).to_string(),
                                static_cast<long>(k + 1), static_cast<long>(i), static_cast<long>(j));
  }
}

// ---------------------------------------------------------------------------
// presentations and Fox calculus

Word free_reduce(Word w) {
  Word out;
  for (const auto& letter : w) {
    if (!out.empty() && out.back().generator == letter.generator && out.back().sign == -letter.sign)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

namespace {

Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
  Word word;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '*', ' ');
  std::istringstream tokens(normalized);
  std::string token;
  while (tokens >> token) {
    std::string name = token;
    long power = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      std::string exponent = token.substr(caret + 1);
      if (!exponent.empty() && exponent.front() == '(' && exponent.back() == ')')
        exponent = exponent.substr(1, exponent.size() - 2);
      try {
        std::size_t used = 0;
        power = std::stol(exponent, &used);
        if (used != exponent.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InputError("bad exponent in relator '" + text + "'");
      }
    }
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end()) throw InputError("unknown generator '" + name + "' in relator '" + text + "'");
    const Index g = it - generators.begin();
    for (long k = 0; k < std::abs(power); ++k) word.push_back({g, power < 0 ? -1 : 1});
  }
  return free_reduce(std::move(word));
}

LatticeVector image(const Word& w, const IntMatrix& deck_map) {
  LatticeVector sum = LatticeVector::Zero(deck_map.rows());
  for (const auto& letter : w) sum += letter.sign * deck_map.col(letter.generator);
  return sum;
}

}  // namespace

GroupPresentation parse_presentation(std::vector<std::string> generators, const std::vector<std::string>& relators) {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw InputError("empty generator name");
    if (!seen.insert(g).second) throw InputError("duplicate generator '" + g + "'");
  }
  GroupPresentation p;
  p.generators = std::move(generators);
  for (const auto& r : relators) p.relators.push_back(parse_word(r, p.generators));
  return p;
}

GroupRingElement fox_derivative(const Word& word, Index generator, const IntMatrix& deck_map, Ring ring) {
  const Index r = deck_map.rows();
  GroupRingElement out = GroupRingElement::zero(ring, r);
  LatticeVector prefix = LatticeVector::Zero(r);
  for (const auto& letter : word) {
    const LatticeVector step = letter.sign * deck_map.col(letter.generator);
    if (letter.generator == generator) {
      // d(g)/dg = 1 and d(g^-1)/dg = -g^-1, each multiplied by the prefix.
      if (letter.sign > 0)
        out += GroupRingElement::monomial(ring, prefix);
      else
        out -= GroupRingElement::monomial(ring, LatticeVector(prefix + step));
    }
    prefix += step;
  }
  return out;
}

EquivariantComplex fox_boundary(const GroupPresentation& p, const IntMatrix& deck_map, Ring ring) {
  const Index g = static_cast<Index>(p.generators.size());
  if (deck_map.cols() != g)
    throw InputError("deck map has " + std::to_string(deck_map.cols()) + " generator images, expected " +
                     std::to_string(g));
  const Index r = deck_map.rows();
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    const LatticeVector w = image(p.relators[k], deck_map);
    if (!w.isZero())
      throw CoverMismatch("relator " + std::to_string(k + 1) + " does not lie in the kernel of the deck map");
  }

  std::vector<std::vector<std::string>> cells{{"v"}, p.generators};
  std::vector<GroupRingMatrix> boundaries;
  GroupRingMatrix d1(1, g);
  for (Index j = 0; j < g; ++j)
    d1(0, j) = GroupRingElement::monomial(ring, deck_map.col(j)) - GroupRingElement::constant(ring, r, 1);
  boundaries.push_back(d1);

  if (!p.relators.empty()) {
    const Index n = static_cast<Index>(p.relators.size());
    GroupRingMatrix d2(g, n);
    std::vector<std::string> faces;
    for (Index k = 0; k < n; ++k) {
      faces.push_back("R" + std::to_string(k + 1));
      for (Index j = 0; j < g; ++j) d2(j, k) = fox_derivative(p.relators[static_cast<std::size_t>(k)], j, deck_map, ring);
    }
    cells.push_back(std::move(faces));
    boundaries.push_back(d2);
  }
  return EquivariantComplex(ring, r, std::move(cells), std::move(boundaries));
}

bool scale_check(const EquivariantComplex& x, const Polytope& polytope, const Rational& factor) {
  if (factor <= 0) throw InputError("scale_check: factor must be positive");
  const Polytope scaled = polytope.scaled(factor);
  const EquivariantComplex original = x.specialized(QuotientMap(polytope.vertices()));
  const EquivariantComplex rescaled = x.specialized(QuotientMap(scaled.vertices()));
  return original.canonical_text() == rescaled.canonical_text();
}

}  // namespace novikov
