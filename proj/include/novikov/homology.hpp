#pragma once

#include "novikov/complex.hpp"
#include "novikov/rank.hpp"
#include "novikov/twist.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace novikov {

/// Which ring the ranks were taken over. Every field is invariant under
/// positive rescaling of the classes involved.
struct RingSummary {
  std::string kind;                  // "class" or "polytope"
  std::vector<LatticeVector> rays;   // primitive ray of the class / of each vertex
  std::vector<Index> restricted;     // active vertex indices ("polytope" only)
  Index cover_rank = 0;              // rank of the deck group after the quotient
  IntMatrix cover_kernel;            // kernel of Z^r -> cover, one vector per column

  friend bool operator==(const RingSummary& a, const RingSummary& b);
};

struct BettiReport {
  std::vector<Index> betti;
  long chi = 0;
  RingSummary ring;
  RankMethod method = RankMethod::FractionFieldExact;
  bool exact = true;
  std::map<std::string, bool> checks;
  std::string note;

  long alternating_sum() const;
  friend bool operator==(const BettiReport& a, const BettiReport& b);
};

long euler_characteristic(const EquivariantComplex& x);

/// Betti numbers over the fraction field of the complex's own group ring.
BettiReport fraction_field_betti(const EquivariantComplex& x, const RankOptions& options = {});

/// Ranks of HN(a): push X to the cover Z^r / ker Phi_a, on which the induced
/// period is injective, then b_i = n_i - rank d_i - rank d_{i+1} over the
/// fraction field. a = 0 gives ordinary Betti numbers.
BettiReport novikov_betti(const EquivariantComplex& x, const CohomologyClass& a, const RankOptions& options = {});

/// Ranks of the polytope Novikov homology HN(A|B), computed on the cover
/// Gamma_A. The ranks agree over every domain between Z[Gamma_A] and its
/// Novikov completions, Nov(A|B) included. Throws InputError on rank mismatch.
BettiReport polytope_betti(const EquivariantComplex& x, const Subpolytope& face, const RankOptions& options = {});

/// Betti numbers of a twisted complex (ring summary from its descriptor).
BettiReport twisted_betti(const TwistedComplex& t, const RankOptions& options = {});

struct OracleResult {
  std::vector<Index> boundary_ranks;  // rank d_1, ..., rank d_top
  std::vector<Index> betti;
  Rational order;
};

/// Gaussian elimination over truncated Laurent series in the single cover
/// variable, pivoting with leading_unit_inverse. Throws InputError unless the
/// cover of `a` has rank one, IncreaseOrder when precision runs out.
OracleResult truncated_homology_oracle(const EquivariantComplex& x, const CohomologyClass& a, const Rational& order);

struct StabilizedOracle {
  OracleResult result;
  Rational order;  // smaller order of the first agreeing pair
  int runs = 0;
};

/// Doubles the order from `start` until two consecutive runs agree.
/// Throws IncreaseOrder if `max_order` is passed first.
StabilizedOracle oracle_until_stable(const EquivariantComplex& x, const CohomologyClass& a,
                                     const Rational& start = 4, const Rational& max_order = 1024);

struct MainTheoremReport {
  CohomologyClass a;
  CohomologyClass b;
  BettiReport full_from_a;
  BettiReport full_from_b;
  BettiReport restricted_from_a;
  BettiReport restricted_from_b;
  std::map<std::string, bool> checks;
  bool passed() const;
};

/// For a, b given by convex weights over the vertices of `face.parent()`:
/// builds the polytope complexes "from a" (twisted_complex plus a Morse
/// reduction seeded by seed_a) and "from b" (tensor_base_change plus a
/// reduction seeded by seed_b), compares their Betti reports over Nov(A) and
/// Nov(A|B), checks the comparison map between the two Morse complexes is a
/// chain map, and that restricting to B commutes with comparison at matrix
/// level. Throws InputError when a weight vector is not convex.
MainTheoremReport main_theorem_check(const EquivariantComplex& x, const Subpolytope& face,
                                     std::span<const Rational> weights_a, std::span<const Rational> weights_b,
                                     std::uint64_t seed_a = 1, std::uint64_t seed_b = 2);

struct ApproximationFamily {
  CohomologyClass target;
  Rational tolerance;
  Index image_rank = 0;
  std::vector<CohomologyClass> classes;
  Integer common_denominator = 1;  // q with every q * b_j integral
  bool distinct = false;
  bool within_tolerance = false;
  bool kernel_containing = false;
  bool spanning = false;

  bool semi_regular() const { return distinct && within_tolerance && kernel_containing && spanning; }
};

/// One rational class per generator of the image of Phi_u, each obtained from
/// the previous by moving a single coordinate (in the basis of integral
/// classes dual to that image), all within `tolerance` of u in sup norm and
/// vanishing on ker Phi_u. The flags are computed by direct checks.
/// Throws InputError when tolerance <= 0 or the rank disagrees with u.
ApproximationFamily rational_approximation(const CohomologyClass& u, const Rational& tolerance, Index rank);

/// Thread count from NOVIKOV_THREADS (default 1).
unsigned configured_threads();

}  // namespace novikov
