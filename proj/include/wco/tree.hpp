#pragma once

#include <map>
#include <optional>

#include "wco/report.hpp"
#include "wco/system.hpp"

namespace wco {

/// A finite directed tree: every vertex except at most one root has a
/// parent, edges point child -> parent, and the graph is connected and
/// acyclic. Vertices carry a `truncated` flag for children sets that were
/// cut off when a finite window was taken out of an infinite tree; checks
/// that quantify over full children sets can skip those vertices.
class DirectedTree {
 public:
  DirectedTree(std::vector<std::string> vertices,
               const std::map<std::string, std::string>& parent,
               const std::optional<std::string>& root_id,
               std::vector<char> truncated = {});

  std::size_t size() const { return ids_.size(); }
  const std::string& id(std::size_t v) const { return ids_[v]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;

  std::optional<std::size_t> parent(std::size_t v) const;
  const std::vector<std::size_t>& children(std::size_t v) const {
    return children_[v];
  }
  std::optional<std::size_t> root() const { return root_; }
  bool truncated(std::size_t v) const { return truncated_[v] != 0; }

  /// A vertex with at least two children.
  bool is_branching(std::size_t v) const { return children_[v].size() >= 2; }

 private:
  std::vector<std::string> ids_;
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::optional<std::size_t> root_;
  std::vector<char> truncated_;
};

/// A weighted shift on a directed tree: basis vector at v is sent to the
/// weighted sum of the basis vectors at the children of v. The weight
/// lambda lives on vertices; the root entry is ignored.
class TreeShift {
 public:
  TreeShift(DirectedTree tree, Field lambda);

  const DirectedTree& tree() const { return tree_; }
  cplx lambda(std::size_t v) const { return lambda_[v]; }
  const Field& lambdas() const { return lambda_; }

  /// sum over the children u of v of |lambda(u)|^2; equals the
  /// Radon-Nikodym derivative of the associated composition system at v.
  double child_weight_sum(std::size_t v) const;

 private:
  DirectedTree tree_;
  Field lambda_;
};

/// The shift as a weighted composition system over counting measure:
/// phi = parent (the root, if present, is sent to itself with weight 0),
/// w(v) = lambda(v). A rootless finite tree cannot occur (finiteness
/// forces a root), so phi is total.
WcoSystem tree_to_wco(const TreeShift& shift);

/// Weak centeredness read off the tree: at every vertex u, the child
/// weight sums of any two children v1, v2 of u with
/// lambda(v1) * lambda(v2) != 0 agree. With `interior_only` vertices whose
/// children sets were truncated are skipped (their sums are not the real
/// ones).
PropertyReport tree_weakly_centered(const TreeShift& shift,
                                    bool interior_only = true,
                                    double tol = kDefaultTol);

/// The unweighted specialization: all lambda = 1, sums become child
/// counts. At every vertex u, any two children of u have the same number
/// of children.
PropertyReport unweighted_tree_criterion(const DirectedTree& tree,
                                         bool interior_only = true);

/// Unitarity of the phase of the shift, decided on the matrix polar
/// factors; finite windows always fail it (the zero weight at the window
/// root or any branching breaks surjectivity of the phase).
PropertyReport phase_is_unitary(const TreeShift& shift,
                                double tol = kDefaultTol);

/// The rootless tree with one degree-2 branching vertex: a trunk
/// ... -> -1 -> 0 that splits at 0 into two infinite paths (1,j) and
/// (2,j). All weights are 1 except the one adjustable weight alpha on the
/// vertex (2,2). The finite window keeps `depth` trunk vertices below 0
/// and `depth` levels of each branch; the window root -depth and the two
/// deepest branch vertices are marked truncated. Vertex ids: "-2", "0",
/// "1,1", "2,2", ...
TreeShift build_two_branch(cplx alpha, int depth);

/// The trunk continues to a junction 1 whose children head the paths
/// (1,j) and (2,j); a single childless extra vertex (3,2) hangs off (2,1)
/// with weight 0. Sibling child counts under the junction are 1 and 2, so
/// the unweighted criterion fails, while the zero weight hides (3,2) from
/// the weighted one, which passes.
TreeShift build_branch_fork(int depth);

}  // namespace wco
