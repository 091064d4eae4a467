#pragma once

#include <optional>

#include "wco/system.hpp"
#include "wco/tree.hpp"

namespace wco {

/// Built-in example systems for the CLI and the tests. "blackblack" and
/// "blackblackplus" are the two tree-shift examples (the first takes a
/// branch weight alpha), "rudy" the backward slide on the integer window,
/// "gauss1d" lives in the continuous module and has no system here, and
/// "kernel2" the two-atom system whose operator has a one-dimensional
/// kernel.
std::vector<std::string> demo_names();

struct DemoBuild {
  WcoSystem system;
  std::optional<TreeShift> shift;  // present for the tree demos
  std::string description;
};

/// Build a demo by name; alpha and depth feed the tree demos.
DemoBuild build_demo(const std::string& name, cplx alpha = 2.0, int depth = 4);

/// The two-atom kernel example: both atoms map to the first, only the
/// first carries weight.
WcoSystem build_kernel_pair();

/// Identity map with unit weights on `n` atoms: everything is true, h = 1.
WcoSystem build_identity(std::size_t n);

}  // namespace wco
