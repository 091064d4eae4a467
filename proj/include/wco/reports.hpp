#pragma once

#include "wco/fuzz.hpp"
#include "wco/json_io.hpp"

namespace wco {

/// JSON report builders shared by the CLI and the python bindings. Every
/// builder is deterministic given (input, seed, tolerance) and every
/// document identifies itself with a "command" key, so the two surfaces
/// emit the same bytes for the same request.

/// Full analysis: density, conditional expectation, property table, polar
/// weights and the generalized polar weights for alpha in {1/4, 1/2, 1}.
json analysis_report(const WcoSystem& sys, double tol = kDefaultTol);

/// Matrix metrics plus closed-form vs matrix verdict agreement. With
/// `dump_matrix` the operator matrix is included, row-major [re, im] pairs.
json oracle_report(const WcoSystem& sys, double tol = kDefaultTol,
                   bool dump_matrix = false);

/// Invariant subspace search result and its verification.
json invariant_report(const WcoSystem& sys, double tol = kDefaultTol);

/// Tree-shift criteria: weighted and unweighted junction tests, the system
/// route, the raw matrix commutator and phase unitarity.
json tree_report(const TreeShift& shift, bool interior_only = false,
                 double tol = kDefaultTol);

struct GaussRequest {
  double alpha = 2.0;
  std::vector<double> coeffs = {1.0, 1.0};  // ascending
  int dim = 1;
  int samples = 1000;
  bool entire = false;
  double box_half_width = 10.0;
  std::uint64_t seed = 42;
};

/// Scaling-map report: boundedness, the structural weak-centering flag,
/// the sampled log-convexity inequality, and (for one-variable affine
/// profiles) the worst mismatch against the closed-form inequality gap.
json gauss_report(const GaussRequest& req, double tol = kDefaultTol);

/// Growth table of the backward-slide phase scale gaps r(3n), n = 1..n_max.
json rudy_report(int n_max);

/// Named example: analysis plus invariant search, the tree criteria when
/// the example is a tree shift, or the scaling-map report for "gauss1d".
json demo_report(const std::string& name, double alpha = 1.0, int depth = 4,
                 double tol = kDefaultTol, std::uint64_t seed = 42);

/// Differential battery run: per-check pass counts and minimized failures.
json fuzz_report(const FuzzConfig& config);

}  // namespace wco
