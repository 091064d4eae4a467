#include "wco/tree.hpp"

#include <cmath>
#include <sstream>

#include "wco/oracle.hpp"

namespace wco {

DirectedTree::DirectedTree(std::vector<std::string> vertices,
                           const std::map<std::string, std::string>& parent,
                           const std::optional<std::string>& root_id,
                           std::vector<char> truncated)
    : ids_(std::move(vertices)) {
  const std::size_t n = ids_.size();
  if (n == 0) throw InputError("tree needs at least one vertex");
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < n; ++v) {
    if (!index.emplace(ids_[v], v).second)
      throw InputError("duplicate vertex id '" + ids_[v] + "'");
  }
  parent_.assign(n, std::nullopt);
  children_.assign(n, {});
  for (const auto& [child, par] : parent) {
    auto ci = index.find(child), pi = index.find(par);
    if (ci == index.end())
      throw InputError("parent map names unknown vertex '" + child + "'");
    if (pi == index.end())
      throw InputError("parent map names unknown vertex '" + par + "'");
    parent_[ci->second] = pi->second;
    children_[pi->second].push_back(ci->second);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (parent_[v]) continue;
    if (root_) throw InputError("two vertices without a parent: '" +
                                ids_[*root_] + "' and '" + ids_[v] + "'");
    root_ = v;
  }
  if (!root_)
    throw InputError("every vertex has a parent; a finite tree needs a root");
  if (root_id && *root_id != ids_[*root_])
    throw InputError("declared root '" + *root_id +
                     "' is not the parentless vertex '" + ids_[*root_] + "'");
  // walk up from every vertex; must reach the root without revisiting
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<char> seen(n, 0);
    std::size_t cur = v;
    while (parent_[cur]) {
      if (seen[cur]) throw InputError("parent map contains a cycle");
      seen[cur] = 1;
      cur = *parent_[cur];
    }
    if (cur != *root_) throw InputError("tree is not connected");
  }
  if (truncated.empty()) truncated.assign(n, 0);
  if (truncated.size() != n)
    throw InputError("truncation flags must cover every vertex");
  truncated_ = std::move(truncated);
}

std::optional<std::size_t> DirectedTree::find(std::string_view id) const {
  for (std::size_t v = 0; v < ids_.size(); ++v)
    if (ids_[v] == id) return v;
  return std::nullopt;
}

std::size_t DirectedTree::index_of(std::string_view id) const {
  auto v = find(id);
  if (!v) throw InputError("unknown vertex id '" + std::string(id) + "'");
  return *v;
}

std::optional<std::size_t> DirectedTree::parent(std::size_t v) const {
  return parent_[v];
}

TreeShift::TreeShift(DirectedTree tree, Field lambda)
    : tree_(std::move(tree)), lambda_(std::move(lambda)) {
  if (lambda_.size() != tree_.size())
    throw InputError("lambda must be defined on every vertex");
  if (auto r = tree_.root()) lambda_[*r] = 0.0;  // never used by the shift
}

double TreeShift::child_weight_sum(std::size_t v) const {
  double s = 0.0;
  for (std::size_t u : tree_.children(v)) s += std::norm(lambda_[u]);
  return s;
}

WcoSystem tree_to_wco(const TreeShift& shift) {
  const DirectedTree& t = shift.tree();
  std::vector<Atom> atoms;
  atoms.reserve(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) atoms.push_back({t.id(v), 1.0});
  std::vector<std::size_t> phi(t.size());
  Field w(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) {
    phi[v] = t.parent(v) ? *t.parent(v) : v;  // root sticks to itself
    w[v] = shift.lambda(v);
  }
  return WcoSystem(MeasureSpace(std::move(atoms)), std::move(phi),
                   std::move(w));
}

namespace {

bool skip_vertex(const DirectedTree& t, std::size_t v, bool interior_only) {
  return interior_only && t.truncated(v);
}

}  // namespace

PropertyReport tree_weakly_centered(const TreeShift& shift, bool interior_only,
                                    double tol) {
  const DirectedTree& t = shift.tree();
  for (std::size_t u = 0; u < t.size(); ++u) {
    if (skip_vertex(t, u, interior_only)) continue;
    const auto& kids = t.children(u);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        std::size_t v1 = kids[i], v2 = kids[j];
        if (shift.lambda(v1) * shift.lambda(v2) == cplx(0.0)) continue;
        if (skip_vertex(t, v1, interior_only) ||
            skip_vertex(t, v2, interior_only))
          continue;  // their sums are not the real ones
        double s1 = shift.child_weight_sum(v1);
        double s2 = shift.child_weight_sum(v2);
        if (!close(s1, s2, tol)) {
          std::ostringstream os;
          os << "children '" << t.id(v1) << "' and '" << t.id(v2) << "' of '"
             << t.id(u) << "' both carry weight but their child weight sums are "
             << s1 << " and " << s2;
          PropertyReport r =
              PropertyReport::fail(Property::tree_weakly_centered, tol, os.str());
          r.witness_atoms = {t.id(u), t.id(v1), t.id(v2)};
          r.witness_values = {s1, s2};
          return r;
        }
      }
    }
  }
  return PropertyReport::pass(Property::tree_weakly_centered, tol);
}

PropertyReport unweighted_tree_criterion(const DirectedTree& t,
                                         bool interior_only) {
  for (std::size_t u = 0; u < t.size(); ++u) {
    if (skip_vertex(t, u, interior_only)) continue;
    const auto& kids = t.children(u);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        std::size_t v1 = kids[i], v2 = kids[j];
        if (skip_vertex(t, v1, interior_only) ||
            skip_vertex(t, v2, interior_only))
          continue;
        std::size_t c1 = t.children(v1).size(), c2 = t.children(v2).size();
        if (c1 != c2) {
          std::ostringstream os;
          os << "children '" << t.id(v1) << "' and '" << t.id(v2) << "' of '"
             << t.id(u) << "' have " << c1 << " and " << c2 << " children";
          PropertyReport r = PropertyReport::fail(
              Property::unweighted_tree_criterion, 0.0, os.str());
          r.witness_atoms = {t.id(u), t.id(v1), t.id(v2)};
          r.witness_values = {static_cast<double>(c1), static_cast<double>(c2)};
          return r;
        }
      }
    }
  }
  return PropertyReport::pass(Property::unweighted_tree_criterion, 0.0);
}

PropertyReport phase_is_unitary(const TreeShift& shift, double tol) {
  Matrix u = svd_polar(to_matrix(tree_to_wco(shift))).phase;
  Matrix id = Matrix::Identity(u.rows(), u.cols());
  double gap = std::max(spectral_norm(Matrix(u.adjoint() * u - id)),
                        spectral_norm(Matrix(u * u.adjoint() - id)));
  if (gap <= tol) return PropertyReport::pass(Property::phase_unitary, tol);
  std::ostringstream os;
  os << "the phase is a proper partial isometry (unitarity gap " << gap << ")";
  PropertyReport r = PropertyReport::fail(Property::phase_unitary, tol, os.str());
  r.witness_values = {gap};
  return r;
}

namespace {

std::string pair_id(int branch, int level) {
  return std::to_string(branch) + "," + std::to_string(level);
}

// Trunk -depth -> ... -> `top`, all weights 1; the window root -depth is
// marked truncated (its own parent was cut away with the rest of the tail).
void add_trunk(int depth, int top, std::vector<std::string>& ids,
               std::map<std::string, std::string>& parent,
               std::vector<char>& trunc, Field& lambda) {
  for (int k = -depth; k <= top; ++k) {
    ids.push_back(std::to_string(k));
    if (k > -depth) parent[ids.back()] = std::to_string(k - 1);
    trunc.push_back(k == -depth ? 1 : 0);
    lambda.push_back(1.0);
  }
}

}  // namespace

TreeShift build_two_branch(cplx alpha, int depth) {
  if (depth < 3)
    throw InputError(
        "two-branch window needs depth >= 3: the junction criterion looks "
        "two levels below the junction");
  std::vector<std::string> ids;
  std::map<std::string, std::string> parent;
  std::vector<char> trunc;
  Field lambda;
  add_trunk(depth, 0, ids, parent, trunc, lambda);
  for (int b = 1; b <= 2; ++b) {
    for (int j = 1; j <= depth; ++j) {
      ids.push_back(pair_id(b, j));
      parent[ids.back()] = j == 1 ? "0" : pair_id(b, j - 1);
      trunc.push_back(j == depth ? 1 : 0);
      lambda.push_back(b == 2 && j == 2 ? alpha : cplx(1.0));
    }
  }
  return TreeShift(DirectedTree(std::move(ids), parent, std::to_string(-depth),
                                std::move(trunc)),
                   std::move(lambda));
}

TreeShift build_branch_fork(int depth) {
  if (depth < 3) throw InputError("fork window needs depth >= 3");
  std::vector<std::string> ids;
  std::map<std::string, std::string> parent;
  std::vector<char> trunc;
  Field lambda;
  add_trunk(depth, 1, ids, parent, trunc, lambda);
  for (int b = 1; b <= 2; ++b) {
    for (int j = 1; j <= depth; ++j) {
      ids.push_back(pair_id(b, j));
      parent[ids.back()] = j == 1 ? "1" : pair_id(b, j - 1);
      trunc.push_back(j == depth ? 1 : 0);
      lambda.push_back(1.0);
    }
  }
  // the second prong of the fork: a single childless vertex with weight
  // zero, which the weighted criterion ignores but the child count sees
  ids.push_back(pair_id(3, 2));
  parent[ids.back()] = pair_id(2, 1);
  trunc.push_back(0);
  lambda.push_back(0.0);
  return TreeShift(DirectedTree(std::move(ids), parent, std::to_string(-depth),
                                std::move(trunc)),
                   std::move(lambda));
}

}  // namespace wco
