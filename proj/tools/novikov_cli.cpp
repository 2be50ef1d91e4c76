// novikov: command-line front end for the polytope Novikov homology library.

#include "novikov/acceptance.hpp"
#include "novikov/corpus.hpp"
#include "novikov/errors.hpp"
#include "novikov/homology.hpp"
#include "novikov/io.hpp"
#include "novikov/morse.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace novikov;

namespace {

struct Config {
  std::string format = "text";
  std::string input;
  std::string class_text;
  std::string vertices;
  std::string polytope_file;
  std::string restrict_text;
  std::string a_weights;
  std::string b_weights;
  std::string eps = "1/10";
  std::string order = "16";
  std::string strategy = "greedy";
  std::string example;
  std::uint64_t seed = 1;
  std::uint64_t seed_b = 2;
};

int emit(const Config& cfg, const Json& report, const std::string& text, int code = 0) {
  if (cfg.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
  return code;
}

std::string list_text(const std::vector<Index>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string report_text(const BettiReport& r) {
  std::string out = "betti: " + list_text(r.betti) + "\nchi: " + std::to_string(r.chi) + "\nmethod: " +
                    method_name(r.method) + (r.exact ? "" : " (unconfirmed)") + "\n";
  for (const auto& [k, v] : r.checks) out += "check " + k + ": " + (v ? "ok" : "FAILED") + "\n";
  return out;
}

bool all_checks(const BettiReport& r) {
  for (const auto& [k, v] : r.checks)
    if (!v) return false;
  return true;
}

CohomologyClass class_arg(const Config& cfg, Index rank) {
  if (cfg.class_text.empty()) throw InputError("--class is required");
  CohomologyClass a(parse_rational_list(cfg.class_text));
  if (a.rank() != rank)
    throw InputError("--class has " + std::to_string(a.rank()) + " entries, the complex has rank " + std::to_string(rank));
  return a;
}

Polytope polytope_arg(const Config& cfg) {
  if (!cfg.polytope_file.empty()) {
    std::ifstream in(cfg.polytope_file);
    if (!in) throw InputError("cannot open " + cfg.polytope_file);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw InputError(cfg.polytope_file + ": " + e.what());
    }
    return polytope_from_json(doc);
  }
  if (cfg.vertices.empty()) throw InputError("--vertices or --polytope is required");
  std::vector<CohomologyClass> vertices;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = cfg.vertices.find(';', start);
    vertices.emplace_back(parse_rational_list(cfg.vertices.substr(start, semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return Polytope(std::move(vertices));
}

Subpolytope face_arg(const Config& cfg, const Polytope& p) {
  if (cfg.restrict_text.empty()) return Subpolytope::full(p);
  std::vector<Index> indices;
  for (const auto& x : parse_rational_list(cfg.restrict_text)) {
    if (!is_integral(x)) throw InputError("--restrict takes vertex indices");
    indices.push_back(to_int64(x));
  }
  return Subpolytope(p, std::move(indices));
}

std::vector<Rational> weights_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string(flag) + " is required");
  const RationalVector w = parse_rational_list(text);
  return std::vector<Rational>(w.begin(), w.end());
}

void check_rank(const EquivariantComplex& x, const Polytope& p) {
  if (p.rank() != x.rank())
    throw InputError("polytope rank " + std::to_string(p.rank()) + " does not match complex rank " +
                     std::to_string(x.rank()));
}

int run_validate(const Config& cfg) {
  const EquivariantComplex x = ingest_file(cfg.input);
  Json out{{"valid", true}, {"coefficients", ring_name(x.ring())}, {"rank", x.rank()}, {"chi", x.euler_characteristic()}};
  Json counts = Json::array();
  for (Index i = 0; i <= x.top_degree(); ++i) counts.push_back(x.cell_count(i));
  out["cells"] = counts;
  return emit(cfg, out, "valid: d^2 = 0 over the group ring (" + ring_name(x.ring()) + ", rank " + std::to_string(x.rank()) + ")\n");
}

int run_betti(const Config& cfg) {
  const EquivariantComplex x = ingest_file(cfg.input);
  const BettiReport r = novikov_betti(x, CohomologyClass::zero(x.rank()));
  return emit(cfg, to_json(r), report_text(r), all_checks(r) ? 0 : 1);
}

int run_novikov(const Config& cfg) {
  const EquivariantComplex x = ingest_file(cfg.input);
  const CohomologyClass a = class_arg(cfg, x.rank());
  BettiReport r = novikov_betti(x, a);
  Json out = to_json(r);
  std::string text = report_text(r);
  if (r.ring.cover_rank == 1) {
    try {
      const OracleResult oracle = truncated_homology_oracle(x, a, parse_rational(cfg.order));
      r.checks["oracle"] = oracle.betti == r.betti;
      out = to_json(r);
      out["oracle"] = to_json(oracle);
      text = report_text(r) + "oracle order " + format_rational(oracle.order) + ": " + list_text(oracle.betti) + "\n";
    } catch (const IncreaseOrder& e) {
      out["oracle"] = error_json("increase_order", e.what());
      text += std::string("oracle: ") + e.what() + "\n";
    }
  }
  return emit(cfg, out, text, all_checks(r) ? 0 : 1);
}

int run_polytope(const Config& cfg) {
  const EquivariantComplex x = ingest_file(cfg.input);
  const Polytope p = polytope_arg(cfg);
  check_rank(x, p);
  const BettiReport r = polytope_betti(x, face_arg(cfg, p));
  return emit(cfg, to_json(r), report_text(r), all_checks(r) ? 0 : 1);
}

int run_main_check(const Config& cfg) {
  const EquivariantComplex x = ingest_file(cfg.input);
  const Polytope p = polytope_arg(cfg);
  check_rank(x, p);
  const auto wa = weights_arg(cfg.a_weights, "--a");
  const auto wb = weights_arg(cfg.b_weights, "--b");
  const MainTheoremReport r = main_theorem_check(x, face_arg(cfg, p), wa, wb, cfg.seed, cfg.seed_b);
  std::string text = "full: " + list_text(r.full_from_a.betti) + " | " + list_text(r.full_from_b.betti) +
                     "\nrestricted: " + list_text(r.restricted_from_a.betti) + " | " +
                     list_text(r.restricted_from_b.betti) + "\n";
  for (const auto& [k, v] : r.checks) text += "check " + k + ": " + (v ? "ok" : "FAILED") + "\n";
  return emit(cfg, to_json(r), text, r.passed() ? 0 : 1);
}

int run_morse(const Config& cfg) {
  const EquivariantComplex x = ingest_file(cfg.input);
  MatchingStrategy strategy;
  if (cfg.strategy == "greedy")
    strategy = MatchingStrategy::Greedy;
  else if (cfg.strategy == "none")
    strategy = MatchingStrategy::None;
  else
    throw InputError("--strategy must be greedy or none");
  const Matching m = acyclic_matching(x, cfg.seed, strategy);
  validate_matching(x, m);
  const EquivariantComplex reduced = vpath_boundary(x, m);
  const MorseReduction elimination = reduce_by_elimination(x, m);
  const CohomologyClass a = cfg.class_text.empty() ? CohomologyClass::zero(x.rank()) : class_arg(cfg, x.rank());
  const BettiReport cellular = novikov_betti(x, a);
  const BettiReport morse = novikov_betti(reduced, a);

  std::map<std::string, bool> checks{{"betti_invariant", cellular.betti == morse.betti},
                                     {"elimination_agrees", elimination.reduced == reduced},
                                     {"euler", reduced.euler_characteristic() == x.euler_characteristic()}};
  bool ok = true;
  for (const auto& [k, v] : checks) ok = ok && v;

  Json pairs = Json::array();
  for (const auto& p : m.pairs()) pairs.push_back(Json{{"degree", p.degree}, {"lower", p.lower}, {"upper", p.upper}});
  Json out{{"seed", cfg.seed}, {"matching", pairs}, {"reduced", to_json(reduced)}, {"betti", morse.betti},
           {"cellular_betti", cellular.betti}};
  Json check_json = Json::object();
  for (const auto& [k, v] : checks) check_json[k] = v;
  out["checks"] = check_json;

  std::string text = "matched pairs: " + std::to_string(m.size()) + "\ncritical cells:";
  for (Index i = 0; i <= reduced.top_degree(); ++i) text += " " + std::to_string(reduced.cell_count(i));
  text += "\nbetti: " + list_text(morse.betti) + "\n";
  for (const auto& [k, v] : checks) text += "check " + k + ": " + (v ? "ok" : "FAILED") + "\n";
  return emit(cfg, out, text, ok ? 0 : 1);
}

int run_approx(const Config& cfg) {
  if (cfg.class_text.empty()) throw InputError("--class is required");
  const CohomologyClass u(parse_rational_list(cfg.class_text));
  const ApproximationFamily f = rational_approximation(u, parse_rational(cfg.eps), u.rank());
  std::string text = "image rank: " + std::to_string(f.image_rank) + "\n";
  for (const auto& b : f.classes) text += "  " + to_json(b).dump() + "\n";
  text += std::string("semi-regular: ") + (f.semi_regular() ? "yes" : "no") + "\n";
  return emit(cfg, to_json(f), text, f.semi_regular() ? 0 : 1);
}

int run_demo(const Config& cfg) {
  const auto results = run_acceptance();
  Json out = Json::array();
  std::string text;
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    out.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    text += std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(r.id) + " " + r.name + ": " + r.detail + "\n";
  }
  return emit(cfg, out, text, ok ? 0 : 1);
}

int run_export(const Config& cfg) {
  for (const auto& e : corpus::entries())
    if (e.name == cfg.example) {
      std::cout << to_json(e.complex).dump(2) << "\n";
      return 0;
    }
  throw InputError("unknown example " + cfg.example);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Novikov homology of equivariant CW complexes over group rings"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto input = [&cfg](CLI::App* sub) { sub->add_option("input", cfg.input, "complex JSON file")->required(); };
  auto classes = [&cfg](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--class", cfg.class_text, "class periods, e.g. 1,1/2");
    if (required) opt->required();
  };
  auto polytope = [&cfg](CLI::App* sub) {
    sub->add_option("--vertices", cfg.vertices, "vertices, e.g. \"1,0;0,1\"");
    sub->add_option("--polytope", cfg.polytope_file, "polytope JSON file");
    sub->add_option("--restrict", cfg.restrict_text, "vertex indices of the subpolytope, e.g. 0,2");
  };

  auto* validate = app.add_subcommand("validate", "check d^2 = 0 over the group ring");
  input(validate);
  auto* betti = app.add_subcommand("betti", "ordinary Betti numbers (class 0)");
  input(betti);
  auto* novikov = app.add_subcommand("novikov", "Novikov Betti numbers of one class, with oracle cross-check");
  input(novikov);
  classes(novikov, true);
  novikov->add_option("--order", cfg.order, "truncation order of the oracle");
  auto* poly = app.add_subcommand("polytope", "polytope Novikov Betti numbers");
  input(poly);
  polytope(poly);
  auto* main_check = app.add_subcommand("main-check", "verify the comparison square for two classes of a polytope");
  input(main_check);
  polytope(main_check);
  main_check->add_option("--a", cfg.a_weights, "convex weights of a")->required();
  main_check->add_option("--b", cfg.b_weights, "convex weights of b")->required();
  main_check->add_option("--seed", cfg.seed, "matching seed for a");
  main_check->add_option("--seed-b", cfg.seed_b, "matching seed for b");
  auto* morse = app.add_subcommand("morse", "acyclic matching, Morse complex and invariance check");
  input(morse);
  classes(morse, false);
  morse->add_option("--seed", cfg.seed, "matching seed");
  morse->add_option("--strategy", cfg.strategy, "greedy or none");
  auto* approx = app.add_subcommand("approx", "rational approximation family of a class");
  classes(approx, true);
  approx->add_option("--eps", cfg.eps, "tolerance, e.g. 1/10");
  auto* demo = app.add_subcommand("demo", "run every acceptance check on the built-in corpus");
  auto* exporter = app.add_subcommand("export", "print a built-in example complex as JSON");
  exporter->add_option("name", cfg.example, "example name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json("usage", e.what()).dump() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) return run_validate(cfg);
    if (betti->parsed()) return run_betti(cfg);
    if (novikov->parsed()) return run_novikov(cfg);
    if (poly->parsed()) return run_polytope(cfg);
    if (main_check->parsed()) return run_main_check(cfg);
    if (morse->parsed()) return run_morse(cfg);
    if (approx->parsed()) return run_approx(cfg);
    if (demo->parsed()) return run_demo(cfg);
    if (exporter->parsed()) return run_export(cfg);
  } catch (const ValidationError& e) {
    Json err = error_json("validation", e.what());
    err["degree"] = e.degree;
    err["row"] = e.row;
    err["col"] = e.col;
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const MorseCycleError& e) {
    std::cerr << error_json("morse_cycle", e.what()).dump() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << error_json("input", e.what()).dump() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << error_json("input", e.what()).dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << error_json("internal", e.what()).dump() << "\n";
    return 2;
  }
  return 2;
}
