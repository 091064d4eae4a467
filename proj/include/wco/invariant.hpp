#pragma once

#include <optional>

#include "wco/report.hpp"
#include "wco/system.hpp"

namespace wco {

enum class SubspaceKind { kernel, level_set, range_closure };

std::string_view subspace_kind_name(SubspaceKind k);

/// A closed subspace of the form { f : f = 0 off `atoms` }, i.e.
/// indicator-cut L^2 of a subset. `threshold` records the h-level cut when
/// the subset is a level set { h > threshold }.
struct SubspaceDescriptor {
  SubspaceKind kind;
  std::vector<std::size_t> atoms;
  std::optional<double> threshold;
};

struct InvariantSearch {
  std::optional<SubspaceDescriptor> subspace;
  std::string note;  // why nothing was produced, when subspace is empty
};

/// For a weakly centered hyponormal system that is not a scalar multiple
/// of an isometry, produce a proper nontrivial invariant subspace:
///   - {h = 0} nonempty: the kernel of the operator, indicator-cut by
///     {h = 0};
///   - otherwise h takes at least two values: the level set {h > t0} with
///     t0 between the top two levels.
/// Scalar multiples of isometries are reported without a descriptor (every
/// indicator cut fails; the hypotheses give nothing there), as are systems
/// that break the hypotheses.
InvariantSearch find_invariant(const WcoSystem& sys, double tol = kDefaultTol);

/// Check T(M) subset of M for the indicator-cut subspace M through the
/// matrix realization: columns of T at atoms of M must vanish off M.
/// Also confirms the subspace is proper and nonzero.
PropertyReport verify_invariant(const WcoSystem& sys,
                                const SubspaceDescriptor& sub,
                                double matrix_tol = 1e-10);

/// The backward-slide system on a window of the integers: phi(n) = n - 1,
/// weights 1 everywhere except w(3n+1) = n^2 and w(3n+2) = 1/n^2 for
/// n >= 1. The window is [-3, 3*n_max + 2]; the left edge sticks to
/// itself with weight 0 so the finite cut stays weakly centered.
WcoSystem build_backward_slide(int n_max);

/// The scale gap of the phase route at the atoms 3n, n = 1 .. n_max:
///   r(3n) = sqrt(h(3n)) / (1 + g(3n) * sqrt(h(3n)))
/// where g is the fiber average of sqrt(h) pushed down to the target atom.
/// Grows like n^2 / 2, which is the point: no uniform bound.
std::vector<double> phase_scale_gap(int n_max);

}  // namespace wco
