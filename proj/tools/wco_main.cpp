// Command-line front end: analysis of weighted composition systems on
// finite discrete measure spaces, matrix-oracle cross checks, invariant
// subspace search, tree shifts, the continuous linear-map example and the
// property fuzzer.
//
// Exit codes: 0 success (verdicts are data, not errors), 1 fuzz battery
// failure, 2 bad input.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wco/demos.hpp"
#include "wco/fuzz.hpp"
#include "wco/gaussian.hpp"
#include "wco/invariant.hpp"
#include "wco/json_io.hpp"
#include "wco/oracle.hpp"
#include "wco/properties.hpp"
#include "wco/reports.hpp"
#include "wco/transforms.hpp"
#include "wco/tree.hpp"

namespace {

using namespace wco;

struct RunConfig {
  double tol = kDefaultTol;
  bool json_out = false;
  std::uint64_t seed = 42;
  int max_atoms = 8;
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string fmt(const cplx& z) {
  if (z.imag() == 0.0) return fmt(z.real());
  std::ostringstream os;
  os << fmt(z.real()) << (z.imag() < 0.0 ? "-" : "+") << fmt(std::abs(z.imag()))
     << "i";
  return os.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_report(const PropertyReport& r) {
  std::cout << "  " << std::left << std::setw(28) << property_name(r.property);
  if (!r.applicable)
    std::cout << "n/a    " << r.witness;
  else if (r.verdict)
    std::cout << "true" << (r.witness.empty() ? "" : "   " + r.witness);
  else
    std::cout << "false  " << r.witness;
  std::cout << "\n";
}

constexpr double kAluthgeAlphas[] = {0.25, 0.5, 1.0};

void print_analysis(const WcoSystem& sys, double tol) {
  const MeasureSpace& sp = sys.space();
  std::cout << "system: " << sys.size() << (sys.size() == 1 ? " atom" : " atoms")
            << ", total mass " << fmt(sp.total_mass()) << "\n"
            << "operator norm: " << fmt(operator_norm(sys)) << "\n\n";
  Density eh = conditional_expectation(sys, sys.h_field());
  PolarData pd = polar(sys);
  std::size_t idw = 4;
  for (const Atom& a : sp.atoms()) idw = std::max(idw, a.id.size());
  std::cout << std::left << std::setw(idw + 2) << "atom" << std::setw(10)
            << "mass" << std::setw(idw + 2) << "phi" << std::setw(16) << "w"
            << std::setw(12) << "h" << std::setw(12) << "E(h)"
            << "phase w~\n";
  for (std::size_t i = 0; i < sys.size(); ++i)
    std::cout << std::left << std::setw(idw + 2) << sp.id(i) << std::setw(10)
              << fmt(sp.mass(i)) << std::setw(idw + 2) << sp.id(sys.phi(i))
              << std::setw(16) << fmt(sys.w(i)) << std::setw(12)
              << fmt(sys.h(i)) << std::setw(12) << fmt(eh[i])
              << fmt(pd.phase_weight[i]) << "\n";
  std::cout << "\nproperties (tol " << tol << "):\n";
  for (const PropertyReport& r : analyze_properties(sys, tol))
    print_report(r);
  std::cout << "\ngeneralized polar weights:\n"
            << std::left << std::setw(idw + 2) << "atom";
  for (double alpha : kAluthgeAlphas) {
    std::ostringstream head;
    head << "w_" << alpha;
    std::cout << std::setw(16) << head.str();
  }
  std::cout << "\n";
  std::vector<AluthgeWeights> aws;
  for (double alpha : kAluthgeAlphas) aws.push_back(aluthge_weight(sys, alpha));
  for (std::size_t i = 0; i < sys.size(); ++i) {
    std::cout << std::left << std::setw(idw + 2) << sp.id(i);
    for (const AluthgeWeights& aw : aws)
      std::cout << std::setw(16) << fmt(aw.w_alpha[i]);
    std::cout << "\n";
  }
}

int cmd_analyze(const std::string& path, const RunConfig& cfg) {
  WcoSystem sys = load_system(path);
  if (cfg.json_out) {
    emit(analysis_report(sys, cfg.tol));
  } else {
    print_analysis(sys, cfg.tol);
  }
  return 0;
}

int cmd_oracle(const std::string& path, bool dump_matrix,
               const RunConfig& cfg) {
  WcoSystem sys = load_system(path);
  json rep = oracle_report(sys, cfg.tol, dump_matrix);
  if (cfg.json_out) {
    emit(rep);
    return 0;
  }
  const json& m = rep["metrics"];
  std::cout << "norm: closed " << fmt(rep["norm"]["closed"].get<double>())
            << ", svd " << fmt(rep["norm"]["svd"].get<double>())
            << "\n\nscaled metrics:\n"
            << "  weak-centered commutator      "
            << fmt(m["weak_centered_commutator"].get<double>()) << "\n"
            << "  quasinormal commutator        "
            << fmt(m["quasinormal_commutator"].get<double>()) << "\n"
            << "  moduli commutator             "
            << fmt(m["moduli_commutator"].get<double>()) << "\n"
            << "  centered commutator (depth 3) "
            << fmt(m["centered_commutator"].get<double>()) << "\n"
            << "  phase quasinormal commutator  "
            << fmt(m["phase_quasinormal_commutator"].get<double>()) << "\n"
            << "  hyponormality floor           "
            << fmt(m["hyponormal_floor"].get<double>()) << "\n"
            << "  cohyponormality floor         "
            << fmt(m["cohyponormal_floor"].get<double>())
            << "\n\nclosed form vs matrix (tol " << cfg.tol << "):\n";
  for (const json& r : rep["agreements"]) {
    bool closed = r["closed"].get<bool>(), matrix = r["matrix"].get<bool>();
    std::cout << "  " << std::left << std::setw(20)
              << r["name"].get<std::string>() << (closed ? "true " : "false")
              << "  vs  " << (matrix ? "true " : "false")
              << (closed == matrix ? "   agree" : "   DISAGREE") << "\n";
  }
  if (dump_matrix)
    std::cout << "\nmatrix:\n" << rep["matrix"].dump() << "\n";
  return 0;
}

int cmd_invariant(const std::string& path, const RunConfig& cfg) {
  WcoSystem sys = load_system(path);
  if (cfg.json_out) {
    emit(invariant_report(sys, cfg.tol));
    return 0;
  }
  InvariantSearch found = find_invariant(sys, cfg.tol);
  if (!found.subspace) {
    std::cout << "no subspace: " << found.note << "\n";
    return 0;
  }
  std::cout << "subspace kind: " << subspace_kind_name(found.subspace->kind)
            << "\natoms:";
  for (std::size_t i : found.subspace->atoms)
    std::cout << " '" << sys.space().id(i) << "'";
  std::cout << "\n";
  if (found.subspace->threshold)
    std::cout << "density threshold: " << fmt(*found.subspace->threshold)
              << "\n";
  if (!found.note.empty()) std::cout << "note: " << found.note << "\n";
  PropertyReport ver = verify_invariant(sys, *found.subspace);
  std::cout << "verification: " << (ver.verdict ? "invariant" : "NOT invariant")
            << (ver.witness.empty() ? "" : " (" + ver.witness + ")") << "\n";
  return 0;
}

int cmd_tree(const std::string& path, bool interior_only,
             const RunConfig& cfg) {
  TreeShift shift = load_tree(path);
  if (cfg.json_out) {
    emit(tree_report(shift, interior_only, cfg.tol));
    return 0;
  }
  const DirectedTree& t = shift.tree();
  std::cout << "tree: " << t.size() << " vertices, root '"
            << (t.root() ? t.id(*t.root()) : std::string("-")) << "'"
            << (interior_only ? ", truncated vertices skipped" : "") << "\n\n";
  print_report(tree_weakly_centered(shift, interior_only, cfg.tol));
  print_report(unweighted_tree_criterion(t, interior_only));
  WcoSystem sys = tree_to_wco(shift);
  print_report(is_weakly_centered(sys, cfg.tol));
  std::cout << "  matrix commutator           "
            << fmt(weak_centered_commutator(to_matrix(sys))) << "\n";
  print_report(phase_is_unitary(shift, cfg.tol));
  return 0;
}

std::vector<double> parse_coeffs(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      double v = std::stod(item, &used);
      while (used < item.size() &&
             std::isspace(static_cast<unsigned char>(item[used])))
        ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("cannot parse coefficient '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("coefficient list is empty");
  return out;
}

int cmd_gauss(const GaussRequest& req, const std::string& coeff_text,
              const RunConfig& cfg) {
  json rep = gauss_report(req, cfg.tol);
  if (cfg.json_out) {
    emit(rep);
    return 0;
  }
  std::cout << "map: " << fmt(req.alpha) << " * identity on R^" << req.dim
            << ", profile coefficients ascending (" << coeff_text << ")"
            << (req.entire ? ", entire-series mode" : ", polynomial mode")
            << "\n"
            << "inverse map norm: "
            << fmt(rep["inverse_operator_norm"].get<double>()) << "\n\n";
  SeriesDensity rho = SeriesDensity::make(req.coeffs, req.entire);
  LinearSystem sys(req.dim, req.alpha);
  print_report(is_bounded(sys, rho));
  print_report(weakly_centered_flag(sys, rho));
  print_report(log_convex_along_map(sys, rho, req.samples, req.seed,
                                    req.box_half_width, cfg.tol));
  if (rep.contains("reduction_worst_mismatch"))
    std::cout << "  affine reduction mismatch   "
              << fmt(rep["reduction_worst_mismatch"].get<double>()) << "\n";
  return 0;
}

int cmd_rudy(int n_max, const RunConfig& cfg) {
  if (cfg.json_out) {
    emit(rudy_report(n_max));
    return 0;
  }
  std::vector<double> r = phase_scale_gap(n_max);
  std::cout << "n,r\n";
  for (int n = 1; n <= n_max; ++n)
    std::cout << n << "," << fmt(r[n - 1]) << "\n";
  return 0;
}

int cmd_demo(const std::string& name, double alpha, int depth,
             const RunConfig& cfg) {
  if (cfg.json_out) {
    emit(demo_report(name, alpha, depth, cfg.tol, cfg.seed));
    return 0;
  }
  if (name == "gauss1d") {
    GaussRequest req;  // the continuous demo: alpha 2, profile 1 + z
    req.seed = cfg.seed;
    std::cout << "demo gauss1d: doubling map against the profile 1 + z\n\n";
    cmd_gauss(req, "1,1", cfg);
    return 0;
  }
  DemoBuild demo = build_demo(name, alpha, depth);
  std::cout << "demo " << name << ": " << demo.description << "\n\n";
  if (demo.shift) {
    print_report(tree_weakly_centered(*demo.shift, true, cfg.tol));
    print_report(unweighted_tree_criterion(demo.shift->tree(), true));
    print_report(phase_is_unitary(*demo.shift, cfg.tol));
    std::cout << "\n";
  }
  print_analysis(demo.system, cfg.tol);
  std::cout << "\ninvariant subspace:\n";
  InvariantSearch found = find_invariant(demo.system, cfg.tol);
  if (!found.subspace) {
    std::cout << "  none: " << found.note << "\n";
  } else {
    std::cout << "  " << subspace_kind_name(found.subspace->kind) << " on";
    for (std::size_t i : found.subspace->atoms)
      std::cout << " '" << demo.system.space().id(i) << "'";
    PropertyReport ver = verify_invariant(demo.system, *found.subspace);
    std::cout << " -> " << (ver.verdict ? "verified" : "NOT invariant")
              << "\n";
  }
  return 0;
}

int cmd_fuzz(int count, bool inject_bug, const RunConfig& cfg) {
  FuzzConfig fc;
  fc.seed = cfg.seed;
  fc.count = count;
  fc.max_atoms = cfg.max_atoms;
  fc.tol = cfg.tol;
  fc.inject_bug = inject_bug;
  if (cfg.json_out) {
    json out = fuzz_report(fc);
    emit(out);
    return out["failures"].empty() ? 0 : 1;
  }
  FuzzSummary summary = run_fuzz(fc);
  std::cout << "fuzz: seed " << cfg.seed << ", count " << count
            << ", max atoms " << cfg.max_atoms << ", tol " << cfg.tol
            << "\n\n  check                         passes\n";
  for (const auto& [name, n] : summary.passes)
    std::cout << "  " << std::left << std::setw(30) << name << n << "\n";
  std::cout << "\n";
  for (const FuzzFailure& f : summary.failures) {
    std::cout << "failure [" << f.check << "] at index " << f.index << ": "
              << f.detail << "\n  minimized system: "
              << system_to_json(f.system).dump() << "\n";
  }
  std::cout << summary.failures.size() << " failure"
            << (summary.failures.size() == 1 ? "" : "s") << " in "
            << summary.systems << " systems\n";
  return summary.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "weighted composition systems on finite discrete measure spaces: "
      "closed-form operator criteria with dense-matrix cross checks"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "comparison tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--json", cfg.json_out, "emit JSON instead of tables");
  app.add_option("--seed", cfg.seed, "seed for randomized commands")
      ->capture_default_str();
  app.add_option("--max-atoms", cfg.max_atoms,
                 "largest random system size (fuzz)")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();

  std::string path;
  bool dump_matrix = false;
  bool interior_only = false;
  double g_alpha = 2.0;
  std::string g_coeffs = "1,1";
  int g_dim = 1;
  int g_samples = 1000;
  bool g_entire = false;
  double g_box = 10.0;
  int n_max = 20;
  std::string demo_name;
  double demo_alpha = 1.0;
  int demo_depth = 4;
  int fuzz_count = 1000;
  bool inject_bug = false;

  CLI::App* analyze =
      app.add_subcommand("analyze", "full report on a system file");
  analyze->add_option("file", path, "system JSON file")->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle", "matrix metrics and closed-form agreement for a system file");
  oracle->add_option("file", path, "system JSON file")->required();
  oracle->add_flag("--dump-matrix", dump_matrix,
                   "also emit the operator matrix (row-major [re,im] pairs)");

  CLI::App* invariant = app.add_subcommand(
      "invariant", "invariant subspace search for a system file");
  invariant->add_option("file", path, "system JSON file")->required();

  CLI::App* tree =
      app.add_subcommand("tree", "criteria for a weighted tree shift file");
  tree->add_option("file", path, "tree JSON file")->required();
  tree->add_flag("--interior-only", interior_only,
                 "skip vertices marked truncated");

  CLI::App* gauss = app.add_subcommand(
      "gauss", "scaling map against a radial series density on R^d");
  gauss->add_option("--alpha", g_alpha, "scale factor of the map")
      ->capture_default_str();
  gauss->add_option("--coeffs", g_coeffs,
                    "ascending series coefficients, comma separated")
      ->capture_default_str();
  gauss->add_option("--dim", g_dim, "dimension")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  gauss->add_option("--samples", g_samples, "sample count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gauss->add_flag("--entire", g_entire,
                  "treat the coefficients as a truncated entire series");
  gauss->add_option("--box", g_box, "half width of the sampling box")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* rudy = app.add_subcommand(
      "rudy", "growth table of the phase scale gap on the backward slide");
  rudy->add_option("--n", n_max, "window parameter")->capture_default_str();

  CLI::App* demo = app.add_subcommand("demo", "built-in example systems");
  demo->add_option("name", demo_name, "one of: blackblack, blackblackplus, "
                                      "rudy, gauss1d, kernel2")
      ->required();
  demo->add_option("--alpha", demo_alpha, "adjustable weight (blackblack)")
      ->capture_default_str();
  demo->add_option("--depth", demo_depth, "tree window depth")
      ->capture_default_str();

  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "randomized closed-form vs matrix equivalence battery");
  fuzz->add_option("--count", fuzz_count, "number of systems")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  fuzz->add_flag("--inject-bug", inject_bug,
                 "self test: corrupt the closed-form density and expect the "
                 "battery to notice");

  // let --tol/--json/--seed/--max-atoms appear after the subcommand too
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(path, cfg);
    if (*oracle) return cmd_oracle(path, dump_matrix, cfg);
    if (*invariant) return cmd_invariant(path, cfg);
    if (*tree) return cmd_tree(path, interior_only, cfg);
    if (*gauss) {
      GaussRequest req;
      req.alpha = g_alpha;
      req.coeffs = parse_coeffs(g_coeffs);
      req.dim = g_dim;
      req.samples = g_samples;
      req.entire = g_entire;
      req.box_half_width = g_box;
      req.seed = cfg.seed;
      return cmd_gauss(req, g_coeffs, cfg);
    }
    if (*rudy) return cmd_rudy(n_max, cfg);
    if (*demo) return cmd_demo(demo_name, demo_alpha, demo_depth, cfg);
    if (*fuzz) return cmd_fuzz(fuzz_count, inject_bug, cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
