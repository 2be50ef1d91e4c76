#pragma once

#include "novikov/complex.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace novikov {

/// Cell `lower` of degree `degree` paired with cell `upper` of degree + 1.
struct MatchedPair {
  Index degree = 0;
  Index lower = 0;
  Index upper = 0;
  friend auto operator<=>(const MatchedPair&, const MatchedPair&) = default;
};

/// A partial pairing of base cells. Validity against a particular complex is
/// checked by validate_matching.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<MatchedPair> pairs);

  const std::vector<MatchedPair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }

  /// Cell of degree + 1 matched with (degree, cell), if any.
  std::optional<Index> up_partner(Index degree, Index cell) const;
  /// Cell of degree - 1 matched with (degree, cell), if any.
  std::optional<Index> down_partner(Index degree, Index cell) const;
  bool is_critical(Index degree, Index cell) const { return !up_partner(degree, cell) && !down_partner(degree, cell); }

  std::vector<Index> critical_cells(const EquivariantComplex& x, Index degree) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<MatchedPair> pairs_;
};

enum class MatchingStrategy { Greedy, None };

/// Pairs must have unit-monomial incidence, each cell may appear once, and the
/// modified Hasse diagram (matched edges reversed) must be acyclic in each
/// dimension band. Throws ValidationError or MorseCycleError.
void validate_matching(const EquivariantComplex& x, const Matching& m);

/// Greedy acyclic matching over a seeded random order of the unit-incidence
/// candidates. Deterministic for a given seed.
Matching acyclic_matching(const EquivariantComplex& x, std::uint64_t seed, MatchingStrategy strategy = MatchingStrategy::Greedy);

/// The Morse complex on the critical cells: entries are weighted sums over
/// V-paths, each matched step contributing -u^{-1} for the pair's incidence u.
/// Throws MorseCycleError if a V-path revisits a cell.
EquivariantComplex vpath_boundary(const EquivariantComplex& x, const Matching& m);

/// Result of eliminating the matched pairs one at a time, with the comparison
/// chain maps. projection[i] maps C_i(x) to the reduced C_i and inclusion[i]
/// goes back; projection o inclusion is the identity.
struct MorseReduction {
  EquivariantComplex reduced;
  std::vector<GroupRingMatrix> projection;
  std::vector<GroupRingMatrix> inclusion;
};

MorseReduction reduce_by_elimination(const EquivariantComplex& x, const Matching& m);

/// maps[i] : C_i(source) -> C_i(target); checks d^target o f_i == f_{i-1} o d^source.
bool is_chain_map(const EquivariantComplex& source, const EquivariantComplex& target,
                  const std::vector<GroupRingMatrix>& maps);

}  // namespace novikov
