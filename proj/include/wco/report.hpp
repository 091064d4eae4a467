#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wco/types.hpp"

namespace wco {

enum class Property {
  weakly_centered,
  weakly_centered_alpha,
  quasinormal,
  hyponormal,
  cohyponormal,
  centered,
  isometry_multiple,
  // verdicts produced by other parts of the library
  phase_unitary,
  tree_weakly_centered,
  unweighted_tree_criterion,
  invariant_subspace,
  olson_order,
  spectral_intertwining,
  bounded,
  log_convex_density,
};

std::string_view property_name(Property p);

/// Outcome of a single check. When `applicable` is false the hypotheses of
/// the check were not met and `verdict` carries no information; the witness
/// then explains which hypothesis failed. When `verdict` is false the
/// witness names the offending atoms and the values that disagree.
struct PropertyReport {
  Property property;
  bool verdict = false;
  bool applicable = true;
  double tolerance = kDefaultTol;
  std::string witness;
  std::vector<std::string> witness_atoms;
  std::vector<double> witness_values;

  static PropertyReport pass(Property p, double tol) {
    return {p, true, true, tol, {}, {}, {}};
  }
  static PropertyReport fail(Property p, double tol, std::string why) {
    return {p, false, true, tol, std::move(why), {}, {}};
  }
  static PropertyReport not_applicable(Property p, double tol,
                                       std::string why) {
    return {p, false, false, tol, std::move(why), {}, {}};
  }
};

}  // namespace wco
