#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "wco/system.hpp"

namespace wco {

struct FuzzConfig {
  std::uint64_t seed = 42;
  int count = 1000;
  int max_atoms = 8;
  double tol = kDefaultTol;
  bool inject_bug = false;  // self-test: corrupt the closed-form density
};

/// One named equivalence check; `failure` holds the explanation when the
/// closed form and the matrix route disagreed.
struct CheckResult {
  std::string name;
  std::optional<std::string> failure;
};

/// Every closed-form-vs-matrix equivalence on one system. With
/// `inject_bug` the closed-form side of the first check works from a
/// deliberately corrupted density; the battery is expected to notice.
std::vector<CheckResult> run_checks(const WcoSystem& sys, double tol,
                                    bool inject_bug = false);

struct FuzzFailure {
  int index;
  std::string check;
  std::string detail;
  WcoSystem system;  // shrunk counterexample
};

struct FuzzSummary {
  int systems = 0;
  std::vector<std::pair<std::string, int>> passes;  // per check, run order
  std::vector<FuzzFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// The `index`-th system of the stream for `seed`: mixes generic random
/// systems (uniform map, masses log-uniform in [0.1, 10], weights zero
/// with probability 1/4) with structured ones (two-branch merges whose
/// heads see matched densities, weighted permutations with cycle-constant
/// density, diagonal systems) so that the conditional branches of the
/// battery keep getting exercised. Deterministic in (seed, index,
/// max_atoms).
WcoSystem random_system(std::uint64_t seed, int index, int max_atoms);

/// Greedily remove atoms while `still_fails` keeps holding; only atoms
/// nothing else maps into are candidates, so the map stays total.
WcoSystem shrink_system(const WcoSystem& sys,
                        const std::function<bool(const WcoSystem&)>& still_fails);

FuzzSummary run_fuzz(const FuzzConfig& config);

}  // namespace wco
