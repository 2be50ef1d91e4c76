#include "novikov/homology.hpp"

#include "novikov/errors.hpp"
#include "novikov/morse.hpp"
#include "novikov/novseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>

namespace novikov {

namespace mp = boost::multiprecision;

bool operator==(const RingSummary& a, const RingSummary& b) {
  if (a.kind != b.kind || a.restricted != b.restricted || a.cover_rank != b.cover_rank) return false;
  if (!same_matrix(a.cover_kernel, b.cover_kernel) || a.rays.size() != b.rays.size()) return false;
  for (std::size_t i = 0; i < a.rays.size(); ++i)
    if (!lex_equal(a.rays[i], b.rays[i])) return false;
  return true;
}

long BettiReport::alternating_sum() const {
  long sum = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) sum += (i % 2 == 0 ? 1 : -1) * static_cast<long>(betti[i]);
  return sum;
}

bool operator==(const BettiReport& a, const BettiReport& b) {
  return a.betti == b.betti && a.chi == b.chi && a.ring == b.ring && a.method == b.method && a.exact == b.exact &&
         a.checks == b.checks && a.note == b.note;
}

long euler_characteristic(const EquivariantComplex& x) { return x.euler_characteristic(); }

unsigned configured_threads() {
  if (const char* env = std::getenv("NOVIKOV_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

BettiReport fraction_field_betti(const EquivariantComplex& x, const RankOptions& options) {
  const Index top = x.top_degree();
  std::vector<RankResult> ranks(static_cast<std::size_t>(std::max<Index>(top + 2, 1)));
  const unsigned threads = configured_threads();
  if (threads > 1 && top > 1) {
    std::vector<std::future<RankResult>> jobs;
    for (Index i = 1; i <= top; ++i)
      jobs.push_back(std::async(std::launch::async, [&x, &options, i] {
        return matrix_rank_fraction_field(x.boundary(i), options);
      }));
    for (Index i = 1; i <= top; ++i) ranks[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i - 1)].get();
  } else {
    for (Index i = 1; i <= top; ++i) ranks[static_cast<std::size_t>(i)] = matrix_rank_fraction_field(x.boundary(i), options);
  }

  BettiReport report;
  report.chi = x.euler_characteristic();
  for (Index i = 0; i <= top; ++i) {
    const Index b = x.cell_count(i) - ranks[static_cast<std::size_t>(i)].rank -
                    (i + 1 <= top ? ranks[static_cast<std::size_t>(i + 1)].rank : 0);
    report.betti.push_back(b);
  }
  for (Index i = 1; i <= top; ++i) {
    const auto& r = ranks[static_cast<std::size_t>(i)];
    if (r.method == RankMethod::Evaluation) report.method = RankMethod::Evaluation;
    report.exact = report.exact && r.exact_confirmed;
  }
  report.checks["euler"] = report.alternating_sum() == report.chi;
  return report;
}

BettiReport novikov_betti(const EquivariantComplex& x, const CohomologyClass& a, const RankOptions& options) {
  if (a.rank() != x.rank())
    throw InputError("class has rank " + std::to_string(a.rank()) + " but the complex has deck rank " +
                     std::to_string(x.rank()));
  const CohomologyClass classes[] = {a};
  const QuotientMap q(classes);
  BettiReport report = fraction_field_betti(x.specialized(q), options);
  report.ring.kind = "class";
  report.ring.rays = {a.ray()};
  report.ring.cover_rank = q.target_rank();
  report.ring.cover_kernel = q.kernel();
  return report;
}

namespace {

RingSummary polytope_summary(const Subpolytope& face) {
  RingSummary s;
  s.kind = "polytope";
  for (const auto& v : face.parent().vertices()) s.rays.push_back(v.ray());
  s.restricted = face.vertex_indices();
  const QuotientMap cover(face.parent().vertices());
  s.cover_rank = cover.target_rank();
  s.cover_kernel = cover.kernel();
  return s;
}

const char* kPolytopeNote =
    "ranks over the fraction field of the cover group ring; equal over any domain between "
    "Z[Gamma_A] and its Novikov completions, Nov(A|B) included";

}  // namespace

BettiReport twisted_betti(const TwistedComplex& t, const RankOptions& options) {
  BettiReport report = fraction_field_betti(t.complex(), options);
  report.ring = polytope_summary(t.face());
  report.note = kPolytopeNote;
  return report;
}

BettiReport polytope_betti(const EquivariantComplex& x, const Subpolytope& face, const RankOptions& options) {
  return twisted_betti(twisted_complex(x, face), options);
}

// ---------------------------------------------------------------------------
// truncated elimination oracle

namespace {

bool known_nonzero(const GroupRingElement& x, const Truncation& window, const Rational& precision) {
  for (const auto& [e, c] : x.terms())
    if (window.value(e) <= precision) return true;
  return false;
}

Rational known_valuation(const GroupRingElement& x, const Truncation& window, const Rational& precision) {
  std::optional<Rational> best;
  for (const auto& [e, c] : x.terms()) {
    const Rational v = window.value(e);
    if (v <= precision && (!best || v < *best)) best = v;
  }
  return *best;
}

Index truncated_rank(const GroupRingMatrix& m, const Truncation& window) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  const Ring ring = m(0, 0).ring();
  std::vector<std::vector<GroupRingElement>> a(static_cast<std::size_t>(rows));

  // The cover variable t has Phi_c(t) = +-1, so shifting by the row minimum
  // makes every valuation non-negative without changing the rank.
  const Rational unit = window.value(LatticeVector::Ones(1));
  for (Index i = 0; i < rows; ++i) {
    std::optional<Rational> lowest;
    for (Index j = 0; j < cols; ++j)
      for (const auto& [e, c] : m(i, j).terms()) {
        const Rational v = window.value(e);
        if (!lowest || v < *lowest) lowest = v;
      }
    LatticeVector shift = LatticeVector::Zero(1);
    if (lowest) shift(0) = to_int64(Rational(-*lowest / unit));
    for (Index j = 0; j < cols; ++j) {
      const GroupRingElement& entry = m(i, j);
      a[static_cast<std::size_t>(i)].push_back(
          entry.is_zero() ? GroupRingElement::zero(ring, 1) : truncate(entry.shifted(shift), window));
    }
  }

  Rational precision = window.order();
  std::vector<bool> active(static_cast<std::size_t>(rows), true);
  Index rank = 0;
  for (Index col = 0; col < cols; ++col) {
    Index pivot = -1;
    Rational pivot_valuation;
    for (Index i = 0; i < rows; ++i) {
      const auto& entry = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (!active[static_cast<std::size_t>(i)] || !known_nonzero(entry, window, precision)) continue;
      const Rational v = known_valuation(entry, window, precision);
      if (pivot < 0 || v < pivot_valuation) {
        pivot = i;
        pivot_valuation = v;
      }
    }
    if (pivot < 0) continue;

    auto& pivot_row = a[static_cast<std::size_t>(pivot)];
    const GroupRingElement pivot_known = truncate(pivot_row[static_cast<std::size_t>(col)], window.with_order(precision));
    const TruncatedNovikovSeries inverse = leading_unit_inverse(pivot_known, window);
    for (Index i = 0; i < rows; ++i) {
      if (!active[static_cast<std::size_t>(i)] || i == pivot) continue;
      auto& row = a[static_cast<std::size_t>(i)];
      if (row[static_cast<std::size_t>(col)].is_zero()) continue;
      const TruncatedNovikovSeries factor =
          series_arith(TruncatedNovikovSeries(row[static_cast<std::size_t>(col)], window), inverse, SeriesOp::Mul);
      for (Index j = col; j < cols; ++j) {
        const auto& p = pivot_row[static_cast<std::size_t>(j)];
        if (p.is_zero()) continue;
        const TruncatedNovikovSeries step = series_arith(factor, TruncatedNovikovSeries(p, window), SeriesOp::Mul);
        row[static_cast<std::size_t>(j)] = truncate(row[static_cast<std::size_t>(j)] - step.body(), window);
      }
    }
    active[static_cast<std::size_t>(pivot)] = false;
    ++rank;
    precision -= pivot_valuation;
    if (precision < 0)
      throw IncreaseOrder("truncated oracle: precision exhausted at order " + format_rational(window.order()));
  }
  return rank;
}

}  // namespace

OracleResult truncated_homology_oracle(const EquivariantComplex& x, const CohomologyClass& a, const Rational& order) {
  if (a.rank() != x.rank()) throw InputError("class rank does not match the complex");
  const CohomologyClass classes[] = {a};
  const QuotientMap q(classes);
  if (q.target_rank() != 1)
    throw InputError("truncated oracle needs a class whose cover has rank one (got rank " +
                     std::to_string(q.target_rank()) + ")");
  if (order < 0) throw IncreaseOrder("truncated oracle: negative order " + format_rational(order));
  const Rational period = q.induced(a).periods()(0);
  const Truncation window(CohomologyClass{period > 0 ? Rational(1) : Rational(-1)}, order);
  EquivariantComplex y = x.specialized(q);
  if (y.ring() == Ring::Z) y = y.with_ring(Ring::Q);

  OracleResult out;
  out.order = order;
  const Index top = y.top_degree();
  for (Index i = 1; i <= top; ++i) out.boundary_ranks.push_back(truncated_rank(y.boundary(i), window));
  for (Index i = 0; i <= top; ++i) {
    const Index below = i >= 1 ? out.boundary_ranks[static_cast<std::size_t>(i - 1)] : 0;
    const Index above = i + 1 <= top ? out.boundary_ranks[static_cast<std::size_t>(i)] : 0;
    out.betti.push_back(y.cell_count(i) - below - above);
  }
  return out;
}

StabilizedOracle oracle_until_stable(const EquivariantComplex& x, const CohomologyClass& a, const Rational& start,
                                     const Rational& max_order) {
  StabilizedOracle out;
  std::optional<OracleResult> previous;
  for (Rational order = start; order <= max_order; order *= 2) {
    ++out.runs;
    try {
      OracleResult current = truncated_homology_oracle(x, a, order);
      if (previous && previous->boundary_ranks == current.boundary_ranks) {
        out.result = std::move(*previous);
        out.order = out.result.order;
        return out;
      }
      previous = std::move(current);
    } catch (const IncreaseOrder&) {
      previous.reset();
    }
  }
  throw IncreaseOrder("truncated oracle did not stabilize below order " + format_rational(max_order));
}

// ---------------------------------------------------------------------------
// comparison square

bool MainTheoremReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

namespace {

BettiReport reduced_betti(const MorseReduction& r, const Subpolytope& face) {
  BettiReport report = fraction_field_betti(r.reduced);
  report.ring = polytope_summary(face);
  report.note = kPolytopeNote;
  return report;
}

std::vector<GroupRingMatrix> compose(const std::vector<GroupRingMatrix>& outer, const std::vector<GroupRingMatrix>& inner) {
  std::vector<GroupRingMatrix> out;
  for (std::size_t i = 0; i < outer.size(); ++i) out.push_back(multiply(outer[i], inner[i]));
  return out;
}

bool same_maps(const std::vector<GroupRingMatrix>& a, const std::vector<GroupRingMatrix>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].rows() != b[k].rows() || a[k].cols() != b[k].cols()) return false;
    for (Index i = 0; i < a[k].rows(); ++i)
      for (Index j = 0; j < a[k].cols(); ++j)
        if (a[k](i, j) != b[k](i, j)) return false;
  }
  return true;
}

}  // namespace

MainTheoremReport main_theorem_check(const EquivariantComplex& x, const Subpolytope& face,
                                     std::span<const Rational> weights_a, std::span<const Rational> weights_b,
                                     std::uint64_t seed_a, std::uint64_t seed_b) {
  const Polytope& polytope = face.parent();
  MainTheoremReport report;
  report.a = polytope.convex_combination(weights_a);
  report.b = polytope.convex_combination(weights_b);

  const Subpolytope full = Subpolytope::full(polytope);
  const TwistedComplex from_a = twisted_complex(x, full);
  const TwistedComplex from_b = tensor_base_change(x, full);
  report.checks["twisted_equals_base_change"] =
      from_a == from_b && twisted_complex(x, face) == tensor_base_change(x, face);

  // Morse models of the polytope complex, one per class.
  const Matching match_a = acyclic_matching(from_a.complex(), seed_a);
  const Matching match_b = acyclic_matching(from_b.complex(), seed_b);
  const MorseReduction red_a = reduce_by_elimination(from_a.complex(), match_a);
  const MorseReduction red_b = reduce_by_elimination(from_b.complex(), match_b);
  report.checks["reductions_are_chain_maps"] =
      is_chain_map(from_a.complex(), red_a.reduced, red_a.projection) &&
      is_chain_map(red_a.reduced, from_a.complex(), red_a.inclusion) &&
      is_chain_map(from_b.complex(), red_b.reduced, red_b.projection) &&
      is_chain_map(red_b.reduced, from_b.complex(), red_b.inclusion);

  report.full_from_a = reduced_betti(red_a, full);
  report.full_from_b = reduced_betti(red_b, full);

  // Restricting to B only changes the ring the same matrices are read over.
  const TwistedComplex restricted_a = from_a.restricted_to(face);
  const TwistedComplex restricted_b = from_b.restricted_to(face);
  const MorseReduction red_a_b = reduce_by_elimination(restricted_a.complex(), match_a);
  const MorseReduction red_b_b = reduce_by_elimination(restricted_b.complex(), match_b);
  report.restricted_from_a = reduced_betti(red_a_b, face);
  report.restricted_from_b = reduced_betti(red_b_b, face);

  report.checks["full_betti_equal"] = report.full_from_a.betti == report.full_from_b.betti;
  report.checks["restricted_betti_equal"] = report.restricted_from_a.betti == report.restricted_from_b.betti;
  report.checks["cellular_agrees"] = report.full_from_a.betti == twisted_betti(from_a).betti;

  // Comparison M_a -> M_b through the cellular complex, and back.
  const auto compare_ab = compose(red_b.projection, red_a.inclusion);
  const auto compare_ba = compose(red_a.projection, red_b.inclusion);
  report.checks["comparison_is_chain_map"] = is_chain_map(red_a.reduced, red_b.reduced, compare_ab) &&
                                             is_chain_map(red_b.reduced, red_a.reduced, compare_ba);

  // iota_B(compare) versus compare computed after iota_B.
  const auto compare_ab_restricted = compose(red_b_b.projection, red_a_b.inclusion);
  report.checks["square_commutes"] = same_maps(compare_ab, compare_ab_restricted) &&
                                     is_chain_map(red_a_b.reduced, red_b_b.reduced, compare_ab_restricted);

  report.checks["euler"] = report.full_from_a.alternating_sum() == x.euler_characteristic() &&
                           report.restricted_from_b.alternating_sum() == x.euler_characteristic();
  return report;
}

// ---------------------------------------------------------------------------
// rational approximation

ApproximationFamily rational_approximation(const CohomologyClass& u, const Rational& tolerance, Index rank) {
  if (tolerance <= 0) throw InputError("rational_approximation: tolerance must be positive");
  if (u.rank() != rank) throw InputError("rational_approximation: class rank does not match lattice rank");

  ApproximationFamily family;
  family.target = u;
  family.tolerance = tolerance;
  const CohomologyClass classes[] = {u};
  const QuotientMap q(classes);
  const Index m = q.target_rank();
  family.image_rank = m;

  // Integral classes a_l dual to the image generators: the rows of q. They
  // vanish on ker Phi_u and u = sum_l coords_l a_l.
  const RationalVector coords = q.induced(u).periods();
  Integer largest = 1;
  for (Index l = 0; l < m; ++l)
    for (Index j = 0; j < rank; ++j) largest = std::max(largest, Integer(std::abs(q.matrix()(l, j))));

  Rational step = tolerance / Rational(4 * std::max<Index>(m, 1)) / Rational(largest);
  for (int attempt = 0; attempt < 64 && m > 0; ++attempt) {
    // v^1 = step * (1, ..., 1); v^{j+1} moves coordinate j by another step.
    RationalVector shift = RationalVector::Constant(m, step);
    if (coords(m - 1) + shift(m - 1) != 0) {
      for (Index j = 0; j < m; ++j) {
        if (j > 0) shift(j - 1) += step;
        RationalVector periods = RationalVector::Constant(rank, Rational(0));
        for (Index l = 0; l < m; ++l)
          for (Index i = 0; i < rank; ++i) periods(i) += (coords(l) + shift(l)) * Rational(q.matrix()(l, i));
        family.classes.emplace_back(std::move(periods));
      }
      break;
    }
    step /= 2;
  }

  // Direct verification of every flag.
  family.distinct = true;
  for (std::size_t i = 0; i < family.classes.size(); ++i)
    for (std::size_t j = i + 1; j < family.classes.size(); ++j)
      if (family.classes[i] == family.classes[j]) family.distinct = false;

  family.within_tolerance = true;
  for (const auto& b : family.classes)
    for (Index i = 0; i < rank; ++i)
      if (mp::abs(b.periods()(i) - u.periods()(i)) >= tolerance) family.within_tolerance = false;

  family.kernel_containing = true;
  const IntMatrix& kernel = q.kernel();
  for (const auto& b : family.classes)
    for (Index k = 0; k < kernel.cols(); ++k)
      if (period_eval(b, kernel.col(k)) != 0) family.kernel_containing = false;

  RationalMatrix span(static_cast<Index>(family.classes.size()), rank);
  for (std::size_t j = 0; j < family.classes.size(); ++j) span.row(static_cast<Index>(j)) = family.classes[j].periods().transpose();
  family.spanning = static_cast<Index>(family.classes.size()) == m && bareiss_rank(span) == m;

  for (const auto& b : family.classes)
    for (Index i = 0; i < rank; ++i)
      family.common_denominator = mp::lcm(family.common_denominator, Integer(mp::denominator(b.periods()(i))));
  return family;
}

}  // namespace novikov
