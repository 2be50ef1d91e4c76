#include "novikov/acceptance.hpp"

#include "novikov/corpus.hpp"
#include "novikov/errors.hpp"
#include "novikov/homology.hpp"
#include "novikov/io.hpp"
#include "novikov/morse.hpp"
#include "novikov/novseries.hpp"
#include "novikov/random.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace novikov {

namespace {

using Engine = std::mt19937_64;

struct Tally {
  long cases = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  long failed = 0;

  std::string detail() const {
    std::ostringstream out;
    out << cases - failed << "/" << cases << " cases";
    for (const auto& f : failures) out << "; " << f;
    return out.str();
  }
};

std::string betti_text(const std::vector<Index>& b) {
  std::string out = "(";
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
  return out + ")";
}

std::string class_text(const CohomologyClass& a) { return to_json(a).dump(); }

Rational random_rational(Engine& engine, std::int64_t span, std::int64_t max_den) {
  const std::int64_t num = static_cast<std::int64_t>(uniform_below(engine, 2 * span + 1)) - span;
  const std::int64_t den = 1 + static_cast<std::int64_t>(uniform_below(engine, max_den));
  return Rational(num, den);
}

std::vector<Rational> random_weights(Engine& engine, std::size_t n) {
  std::vector<Rational> w(n);
  Rational total = 0;
  for (auto& x : w) {
    x = Rational(static_cast<long>(uniform_below(engine, 5)));
    total += x;
  }
  if (total == 0) {
    w[uniform_below(engine, n)] = 1;
    return w;
  }
  for (auto& x : w) x /= total;
  return w;
}

// A polytope per corpus complex whose cover has full rank.
Polytope sample_polytope(Index rank) {
  std::vector<CohomologyClass> vertices;
  for (Index i = 0; i < rank; ++i) {
    RationalVector v = RationalVector::Constant(rank, Rational(0));
    v(i) = 1;
    vertices.emplace_back(v);
  }
  RationalVector mixed(rank);
  for (Index i = 0; i < rank; ++i) mixed(i) = Rational(i % 2 == 0 ? 2 : -1, i + 1);
  vertices.emplace_back(mixed);
  return Polytope(std::move(vertices));
}

std::vector<Subpolytope> sample_faces(const Polytope& p) {
  std::vector<Subpolytope> out{Subpolytope::full(p), Subpolytope(p, {0})};
  if (p.size() > 2) out.emplace_back(p, std::vector<Index>{0, p.size() - 1});
  return out;
}

void validation(Tally& t, std::uint64_t seed) {
  for (const auto& e : corpus::entries()) {
    try {
      validate_boundary_square(e.complex.boundaries());
      t.expect(true, e.name);
    } catch (const ValidationError& err) {
      t.expect(false, e.name + ": " + err.what());
    }
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Matching m = acyclic_matching(e.complex, seed + s);
      try {
        validate_matching(e.complex, m);
        validate_boundary_square(vpath_boundary(e.complex, m).boundaries());
        validate_boundary_square(reduce_by_elimination(e.complex, m).reduced.boundaries());
        t.expect(true, e.name);
      } catch (const std::exception& err) {
        t.expect(false, e.name + " seed " + std::to_string(seed + s) + ": " + err.what());
      }
    }
  }
  // A broken square must be caught.
  GroupRingMatrix d1(1, 1), d2(1, 1);
  d1(0, 0) = parse_group_ring("t - 1", Ring::Z, 1);
  d2(0, 0) = parse_group_ring("1", Ring::Z, 1);
  bool caught = false;
  try {
    EquivariantComplex(Ring::Z, 1, {{"v"}, {"e"}, {"f"}}, {d1, d2});
  } catch (const ValidationError& err) {
    caught = err.degree == 1 && err.row == 0 && err.col == 0;
  }
  t.expect(caught, "corrupted boundary not rejected");
}

void ordinary_recovery(Tally& t) {
  for (const auto& e : corpus::entries()) {
    const auto report = novikov_betti(e.complex, CohomologyClass::zero(e.complex.rank()));
    t.expect(report.betti == e.ordinary_betti, e.name + " got " + betti_text(report.betti));
  }
}

void vanishing(Tally& t) {
  struct Case {
    EquivariantComplex x;
    CohomologyClass a;
    std::string name;
  };
  const std::vector<Case> cases = {
      {corpus::circle(), {1}, "circle"},
      {corpus::subdivided_circle(), {1}, "subdivided circle"},
      {corpus::torus(), {1, 0}, "torus"},
      {corpus::torus(), {0, 1}, "torus"},
      {corpus::torus(), {1, 1}, "torus"},
      {corpus::torus(), {2, 3}, "torus"},
      {corpus::klein_bottle(), {1}, "klein bottle"},
  };
  for (const auto& c : cases) {
    const auto report = novikov_betti(c.x, c.a);
    const std::vector<Index> zeros(static_cast<std::size_t>(c.x.top_degree() + 1), 0);
    t.expect(report.betti == zeros, c.name + " " + class_text(c.a) + " got " + betti_text(report.betti));
    try {
      const auto oracle = truncated_homology_oracle(c.x, c.a, 16);
      t.expect(oracle.betti == report.betti, c.name + " oracle got " + betti_text(oracle.betti));
    } catch (const std::exception& err) {
      t.expect(false, c.name + " oracle: " + err.what());
    }
  }
}

void euler(Tally& t) {
  for (const auto& e : corpus::entries())
    for (const auto& a : e.classes) {
      const auto report = novikov_betti(e.complex, a);
      t.expect(report.alternating_sum() == euler_characteristic(e.complex) && report.checks.at("euler"),
               e.name + " " + class_text(a));
    }
}

void vertex_reduction(Tally& t, std::uint64_t seed) {
  Engine engine(seed);
  long positive = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Index rank = 1 + static_cast<Index>(uniform_below(engine, 3));
    GroupRingElement u(Ring::Q, rank);
    const int terms = 1 + static_cast<int>(uniform_below(engine, 4));
    for (int k = 0; k < terms; ++k) {
      LatticeVector e(rank);
      for (Index i = 0; i < rank; ++i) e(i) = static_cast<std::int64_t>(uniform_below(engine, 7)) - 2;
      u += GroupRingElement::monomial(Ring::Q, e, 1);
    }
    if (u.is_zero()) continue;
    std::vector<CohomologyClass> vertices;
    const int count = 1 + static_cast<int>(uniform_below(engine, 4));
    for (int k = 0; k < count; ++k) {
      RationalVector v(rank);
      for (Index i = 0; i < rank; ++i) v(i) = random_rational(engine, 3, 3);
      vertices.emplace_back(v);
    }
    const Polytope p(vertices);
    const auto weights = random_weights(engine, static_cast<std::size_t>(p.size()));
    const CohomologyClass c = p.convex_combination(weights);
    const bool at_vertices = positivity_check(u, p);
    const bool at_combination = positivity_check(u, Polytope({c}));
    positive += at_vertices;
    t.expect(!at_vertices || at_combination, "positivity lost at " + class_text(c) + " for " + u.to_string());
    bool bounded = true;
    for (const auto& [e, coeff] : u.terms()) bounded = bounded && polytope_min_period(p, e) <= period_eval(c, e);
    t.expect(bounded, "min period above combination for " + u.to_string());
  }
  t.expect(positive >= 10, "too few positive samples (" + std::to_string(positive) + ")");
}

void ray_invariance(Tally& t) {
  for (const auto& e : corpus::entries()) {
    const Polytope p = sample_polytope(e.complex.rank());
    for (const Rational& r : {Rational(1, 2), Rational(3)}) {
      t.expect(scale_check(e.complex, p, r), e.name + " complex changed under scaling");
      const Polytope scaled = p.scaled(r);
      for (const auto& face : sample_faces(p)) {
        const Subpolytope scaled_face(scaled, face.vertex_indices());
        t.expect(twisted_complex(e.complex, face).complex() == twisted_complex(e.complex, scaled_face).complex(),
                 e.name + " twisted complex changed under scaling");
        t.expect(to_json(polytope_betti(e.complex, face)).dump() ==
                     to_json(polytope_betti(e.complex, scaled_face)).dump(),
                 e.name + " polytope report changed under scaling");
      }
      for (const auto& a : e.classes)
        t.expect(to_json(novikov_betti(e.complex, a)).dump() == to_json(novikov_betti(e.complex, a.scaled(r))).dump(),
                 e.name + " class report changed under scaling " + class_text(a));
    }
  }
}

void twisted_equals_base_change(Tally& t) {
  for (const auto& e : corpus::entries()) {
    const Polytope p = sample_polytope(e.complex.rank());
    for (const auto& face : sample_faces(p))
      t.expect(twisted_complex(e.complex, face) == tensor_base_change(e.complex, face), e.name);
    const Polytope origin({CohomologyClass::zero(e.complex.rank())});
    t.expect(twisted_complex(e.complex, Subpolytope::full(origin)) ==
                 tensor_base_change(e.complex, Subpolytope::full(origin)),
             e.name + " at the origin");
  }
}

bool same_numbers(const BettiReport& a, const BettiReport& b) {
  return a.betti == b.betti && a.chi == b.chi && a.method == b.method && a.exact == b.exact && a.checks == b.checks &&
         a.ring.cover_rank == b.ring.cover_rank && same_matrix(a.ring.cover_kernel, b.ring.cover_kernel);
}

void zero_vertex(Tally& t) {
  for (const auto& e : corpus::entries()) {
    const Polytope p = sample_polytope(e.complex.rank());
    const Polytope extended = zero_vertex_extend(p);
    t.expect(same_matrix(kernel_lattice(p.vertices()), kernel_lattice(extended.vertices())), e.name + " kernel");
    for (const auto& face : sample_faces(p)) {
      const Subpolytope lifted(extended, face.vertex_indices());
      t.expect(same_numbers(polytope_betti(e.complex, face), polytope_betti(e.complex, lifted)), e.name + " report");
      t.expect(twisted_complex(e.complex, face).complex() == twisted_complex(e.complex, lifted).complex(),
               e.name + " complex");
    }
  }
}

void novikov_principle(Tally& t, std::uint64_t seed) {
  for (const auto& e : corpus::entries()) {
    std::vector<CohomologyClass> classes = e.classes;
    while (classes.size() < 3) classes.push_back(classes.back().scaled(2));
    classes.resize(3);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Matching m = acyclic_matching(e.complex, seed + s);
      const EquivariantComplex reduced = vpath_boundary(e.complex, m);
      for (const auto& a : classes) {
        const auto cellular = novikov_betti(e.complex, a);
        const auto morse = novikov_betti(reduced, a);
        t.expect(cellular.betti == morse.betti,
                 e.name + " seed " + std::to_string(seed + s) + " " + class_text(a) + " got " + betti_text(morse.betti));
      }
    }
  }
}

void main_theorem(Tally& t, std::uint64_t seed) {
  Engine engine(seed);
  struct Case {
    EquivariantComplex x;
    Polytope p;
    std::string name;
  };
  const std::vector<Case> cases = {
      {corpus::torus(), Polytope({CohomologyClass{1, 0}, CohomologyClass{0, 1}, CohomologyClass{1, 1}}), "torus"},
      {corpus::grid_torus(2), Polytope({CohomologyClass{1, 0}, CohomologyClass{0, 1}, CohomologyClass{-1, 2}}),
       "grid torus"},
      {corpus::genus_two(),
       Polytope({CohomologyClass{1, 0, 0, 0}, CohomologyClass{0, 1, 0, 0}, CohomologyClass{1, 1, 1, -1}}),
       "genus two"},
  };
  for (const auto& c : cases)
    for (int sample = 0; sample < 10; ++sample) {
      std::vector<Index> indices;
      for (Index i = 0; i < c.p.size(); ++i)
        if (uniform_below(engine, 2) == 1) indices.push_back(i);
      if (indices.empty()) indices.push_back(static_cast<Index>(uniform_below(engine, c.p.size())));
      const Subpolytope face(c.p, indices);
      const auto wa = random_weights(engine, static_cast<std::size_t>(c.p.size()));
      const auto wb = random_weights(engine, static_cast<std::size_t>(c.p.size()));
      const auto report = main_theorem_check(c.x, face, wa, wb, seed + 2 * sample, seed + 2 * sample + 1);
      std::string failed;
      for (const auto& [k, v] : report.checks)
        if (!v) failed += " " + k;
      t.expect(report.passed(), c.name + " sample " + std::to_string(sample) + ":" + failed);
    }
}

void pajitnov(Tally& t, std::uint64_t seed) {
  Engine engine(seed);
  for (int trial = 0; trial < 20; ++trial) {
    const Index rank = 1 + static_cast<Index>(uniform_below(engine, 4));
    RationalVector periods(rank);
    for (Index i = 0; i < rank; ++i) periods(i) = random_rational(engine, 9, 7);
    const CohomologyClass u(periods);
    for (const Rational& eps : {Rational(1, 10), Rational(1, 100)}) {
      const auto family = rational_approximation(u, eps, rank);
      t.expect(family.semi_regular() && static_cast<Index>(family.classes.size()) == family.image_rank,
               "target " + class_text(u) + " eps " + format_rational(eps));
    }
  }
}

void oracle_consistency(Tally& t) {
  for (const auto& e : corpus::entries())
    for (const auto& a : e.classes) {
      const CohomologyClass classes[] = {a};
      if (QuotientMap(classes).target_rank() != 1) continue;
      try {
        const auto stable = oracle_until_stable(e.complex, a);
        const auto exact = novikov_betti(e.complex, a);
        t.expect(stable.result.betti == exact.betti && stable.order <= 32,
                 e.name + " " + class_text(a) + " oracle " + betti_text(stable.result.betti) + " at order " +
                     format_rational(stable.order));
      } catch (const std::exception& err) {
        t.expect(false, e.name + " " + class_text(a) + ": " + err.what());
      }
    }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria = {
      {"validation", [seed](Tally& t) { validation(t, seed); }},
      {"ordinary_recovery", ordinary_recovery},
      {"novikov_vanishing", vanishing},
      {"euler_invariance", euler},
      {"vertex_reduction", [seed](Tally& t) { vertex_reduction(t, seed); }},
      {"ray_invariance", ray_invariance},
      {"twisted_equals_polytope", twisted_equals_base_change},
      {"zero_vertex_trick", zero_vertex},
      {"novikov_principle", [seed](Tally& t) { novikov_principle(t, seed); }},
      {"main_theorem_square", [seed](Tally& t) { main_theorem(t, seed); }},
      {"rational_approximation", [seed](Tally& t) { pajitnov(t, seed); }},
      {"oracle_consistency", oracle_consistency},
  };
  std::vector<CriterionResult> results;
  int id = 0;
  for (const auto& [name, run] : criteria) {
    CriterionResult r;
    r.id = ++id;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    try {
      run(tally);
      r.passed = tally.failed == 0 && tally.cases > 0;
      r.detail = tally.detail();
    } catch (const std::exception& err) {
      r.passed = false;
      r.detail = std::string("exception: ") + err.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace novikov
