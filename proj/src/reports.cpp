#include "wco/reports.hpp"

#include <algorithm>
#include <cmath>

#include "wco/demos.hpp"
#include "wco/gaussian.hpp"
#include "wco/invariant.hpp"
#include "wco/oracle.hpp"
#include "wco/properties.hpp"
#include "wco/transforms.hpp"

namespace wco {

namespace {
constexpr double kAluthgeAlphas[] = {0.25, 0.5, 1.0};
}

json analysis_report(const WcoSystem& sys, double tol) {
  json props = json::array();
  for (const PropertyReport& r : analyze_properties(sys, tol))
    props.push_back(report_to_json(r));
  PolarData pd = polar(sys);
  json alu = json::array();
  for (double alpha : kAluthgeAlphas) {
    AluthgeWeights aw = aluthge_weight(sys, alpha);
    alu.push_back({{"alpha", alpha},
                   {"w_alpha", field_to_json(sys.space(), aw.w_alpha)},
                   {"phase_alpha", field_to_json(sys.space(), aw.phase_alpha)}});
  }
  return {{"command", "analyze"},
          {"tolerance", tol},
          {"system", system_to_json(sys)},
          {"norm", operator_norm(sys)},
          {"h", density_to_json(sys.space(), sys.h_field())},
          {"cond_exp_h",
           density_to_json(sys.space(),
                           conditional_expectation(sys, sys.h_field()))},
          {"properties", std::move(props)},
          {"polar",
           {{"phase_weight", field_to_json(sys.space(), pd.phase_weight)},
            {"modulus_density",
             density_to_json(sys.space(), pd.modulus_density)}}},
          {"aluthge", std::move(alu)}};
}

json oracle_report(const WcoSystem& sys, double tol, bool dump_matrix) {
  Matrix t = to_matrix(sys);
  double scale2 = std::max(1.0, spectral_norm(t));
  scale2 *= scale2;
  Matrix a = t * t.adjoint();
  Matrix b = t.adjoint() * t;
  double phase_gap = quasinormal_commutator(to_matrix(phase_system(sys)));
  double hypo_floor = smallest_eigenvalue(b - a) / scale2;
  double cohypo_floor = smallest_eigenvalue(a - b) / scale2;
  json agreements = json::array();
  auto row = [&](const char* name, bool closed, bool matrix) {
    agreements.push_back({{"name", name},
                          {"closed", closed},
                          {"matrix", matrix},
                          {"agree", closed == matrix}});
  };
  row("weakly_centered", is_weakly_centered(sys, tol).verdict,
      weak_centered_commutator(t) <= tol);
  row("quasinormal", is_quasinormal(sys, tol).verdict,
      quasinormal_commutator(t) <= tol);
  row("hyponormal", is_hyponormal(sys, tol).verdict, hypo_floor >= -tol);
  row("cohyponormal", is_cohyponormal(sys, tol).verdict,
      cohypo_floor >= -tol);
  row("phase_quasinormal", is_quasinormal(phase_system(sys), tol).verdict,
      phase_gap <= tol);
  json out = {{"command", "oracle"},
              {"tolerance", tol},
              {"norm",
               {{"closed", operator_norm(sys)}, {"svd", spectral_norm(t)}}},
              {"metrics",
               {{"weak_centered_commutator", weak_centered_commutator(t)},
                {"quasinormal_commutator", quasinormal_commutator(t)},
                {"moduli_commutator", moduli_commutator(t)},
                {"centered_commutator", centered_commutator(t, 3)},
                {"phase_quasinormal_commutator", phase_gap},
                {"hyponormal_floor", hypo_floor},
                {"cohyponormal_floor", cohypo_floor}}},
              {"agreements", std::move(agreements)}};
  if (dump_matrix) {
    json jm = json::array();
    for (Eigen::Index y = 0; y < t.rows(); ++y) {
      json jrow = json::array();
      for (Eigen::Index x = 0; x < t.cols(); ++x)
        jrow.push_back(complex_to_json(t(y, x)));
      jm.push_back(std::move(jrow));
    }
    out["matrix"] = std::move(jm);
  }
  return out;
}

json invariant_report(const WcoSystem& sys, double tol) {
  InvariantSearch found = find_invariant(sys, tol);
  json out = {{"command", "invariant"}, {"tolerance", tol},
              {"note", found.note}};
  if (found.subspace) {
    out["subspace"] = subspace_to_json(sys.space(), *found.subspace);
    out["verification"] = report_to_json(verify_invariant(sys, *found.subspace));
  } else {
    out["subspace"] = nullptr;
    out["verification"] = nullptr;
  }
  return out;
}

json tree_report(const TreeShift& shift, bool interior_only, double tol) {
  WcoSystem sys = tree_to_wco(shift);
  return {{"command", "tree"},
          {"tolerance", tol},
          {"vertices", shift.tree().size()},
          {"root", shift.tree().root()
                       ? json(shift.tree().id(*shift.tree().root()))
                       : json(nullptr)},
          {"interior_only", interior_only},
          {"tree_weakly_centered",
           report_to_json(tree_weakly_centered(shift, interior_only, tol))},
          {"unweighted_criterion",
           report_to_json(
               unweighted_tree_criterion(shift.tree(), interior_only))},
          {"system_weakly_centered",
           report_to_json(is_weakly_centered(sys, tol))},
          {"matrix_commutator", weak_centered_commutator(to_matrix(sys))},
          {"phase_unitary", report_to_json(phase_is_unitary(shift, tol))}};
}

json gauss_report(const GaussRequest& req, double tol) {
  SeriesDensity rho = SeriesDensity::make(req.coeffs, req.entire);
  LinearSystem sys(req.dim, req.alpha);
  json out = {{"command", "gauss"},
              {"tolerance", tol},
              {"alpha", req.alpha},
              {"dim", req.dim},
              {"coeffs", rho.coeffs},
              {"entire", rho.entire},
              {"samples", req.samples},
              {"seed", req.seed},
              {"inverse_operator_norm", sys.inverse_operator_norm()},
              {"bounded", report_to_json(is_bounded(sys, rho))},
              {"weakly_centered",
               report_to_json(weakly_centered_flag(sys, rho))},
              {"log_convex",
               report_to_json(log_convex_along_map(sys, rho, req.samples,
                                                   req.seed,
                                                   req.box_half_width, tol))}};
  if (req.dim == 1 && rho.coeffs.size() == 2) {
    // affine profile: the inequality gap has the closed form
    // a1*a0*t*(alpha^2 + alpha^-2 - 2); report the worst mismatch between
    // the evaluated gap and that form over the sample
    double worst = 0.0;
    double a0 = rho.coeffs[0], a1 = rho.coeffs[1], al = req.alpha;
    for (const Eigen::VectorXd& x :
         sample_points(1, req.samples, req.seed, req.box_half_width)) {
      double t2 = x[0] * x[0];
      double gap = affine_profile_gap(a0, a1, al, t2);
      double closed = a1 * a0 * t2 * (al * al + 1.0 / (al * al) - 2.0);
      worst = std::max(worst, std::abs(gap - closed) /
                                  std::max({1.0, std::abs(gap),
                                            std::abs(closed)}));
    }
    out["reduction_worst_mismatch"] = worst;
  }
  return out;
}

json rudy_report(int n_max) {
  std::vector<double> r = phase_scale_gap(n_max);
  json rows = json::array();
  for (int n = 1; n <= n_max; ++n)
    rows.push_back({{"n", n}, {"r", r[n - 1]}});
  return {{"command", "rudy"}, {"n_max", n_max}, {"rows", std::move(rows)}};
}

json demo_report(const std::string& name, double alpha, int depth, double tol,
                 std::uint64_t seed) {
  if (name == "gauss1d") {
    GaussRequest req;  // the continuous example: scale 2, profile 1 + z
    req.seed = seed;
    json out = gauss_report(req, tol);
    out["command"] = "demo";
    out["name"] = name;
    return out;
  }
  DemoBuild demo = build_demo(name, alpha, depth);
  json out = analysis_report(demo.system, tol);
  out["command"] = "demo";
  out["name"] = name;
  out["description"] = demo.description;
  out["invariant"] = invariant_report(demo.system, tol);
  if (demo.shift) out["tree"] = tree_report(*demo.shift, true, tol);
  return out;
}

json fuzz_report(const FuzzConfig& config) {
  FuzzSummary summary = run_fuzz(config);
  json passes = json::array();
  for (const auto& [name, n] : summary.passes)
    passes.push_back({{"check", name}, {"passes", n}});
  json failures = json::array();
  for (const FuzzFailure& f : summary.failures)
    failures.push_back({{"index", f.index},
                        {"check", f.check},
                        {"detail", f.detail},
                        {"system", system_to_json(f.system)}});
  return {{"command", "fuzz"},
          {"seed", config.seed},
          {"count", config.count},
          {"max_atoms", config.max_atoms},
          {"tolerance", config.tol},
          {"systems", summary.systems},
          {"passes", std::move(passes)},
          {"failures", std::move(failures)}};
}

}  // namespace wco
