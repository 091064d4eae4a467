#include "wco/invariant.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wco/oracle.hpp"
#include "wco/properties.hpp"

namespace wco {

std::string_view subspace_kind_name(SubspaceKind k) {
  switch (k) {
    case SubspaceKind::kernel: return "kernel";
    case SubspaceKind::level_set: return "level_set";
    case SubspaceKind::range_closure: return "range_closure";
  }
  return "unknown";
}

InvariantSearch find_invariant(const WcoSystem& sys, double tol) {
  InvariantSearch out;
  if (!is_weakly_centered(sys, tol).verdict || !is_hyponormal(sys, tol).verdict) {
    out.note = "not applicable: needs a weakly centered hyponormal system";
    return out;
  }
  // zero weights are exact, so {h = 0} - the support of the kernel - is exact
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (sys.h(i) == 0.0) zeros.push_back(i);
  if (zeros.size() == sys.size()) {
    out.note = "not applicable: the operator is zero, every subspace is invariant";
    return out;
  }
  if (!zeros.empty()) {
    out.subspace = SubspaceDescriptor{SubspaceKind::kernel, std::move(zeros),
                                      std::nullopt};
    out.note = "kernel of the operator: functions supported on {h = 0}";
    return out;
  }
  // From here h > 0 everywhere, so every atom has a carried preimage;
  // counting those preimages forces phi bijective and w nowhere zero, and
  // the adjoint kernel (the closed-range complement) is trivial: no
  // range-closure case exists at finite scale.
  if (is_isometry_multiple(sys, tol).verdict) {
    std::ostringstream os;
    os << "not applicable: scalar multiple of an isometry (scale "
       << std::sqrt(sys.h(0)) << "); no indicator cut is invariant and proper";
    out.note = os.str();
    return out;
  }
  // h nonconstant: cut between the top two levels
  std::vector<double> levels;
  for (std::size_t i = 0; i < sys.size(); ++i) levels.push_back(sys.h(i));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end(),
                           [&](double a, double b) { return close(a, b, tol); }),
               levels.end());
  if (levels.size() < 2) {  // chain-close values can collapse to one level
    out.note = "not applicable: h has no separated levels to cut between";
    return out;
  }
  double top = levels[levels.size() - 1];
  double second = levels[levels.size() - 2];
  double t0 = (top + second) / 2.0;
  std::vector<std::size_t> cut;
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (sys.h(i) > t0) cut.push_back(i);
  out.subspace = SubspaceDescriptor{SubspaceKind::level_set, std::move(cut), t0};
  std::ostringstream os;
  os << "level set {h > " << t0 << "}";
  out.note = os.str();
  return out;
}

PropertyReport verify_invariant(const WcoSystem& sys,
                                const SubspaceDescriptor& sub,
                                double matrix_tol) {
  if (sub.atoms.empty())
    return PropertyReport::fail(Property::invariant_subspace, matrix_tol,
                                "subspace is zero");
  if (sub.atoms.size() >= sys.size())
    return PropertyReport::fail(Property::invariant_subspace, matrix_tol,
                                "subspace is the whole space");
  std::vector<char> in(sys.size(), 0);
  for (std::size_t i : sub.atoms) {
    if (i >= sys.size())
      throw InputError("subspace names an atom outside the space");
    in[i] = 1;
  }
  // combinatorial route, exact: a carried atom whose target lies in the
  // cut must lie in the cut itself
  for (std::size_t y = 0; y < sys.size(); ++y) {
    if (sys.w(y) == cplx(0.0) || !in[sys.phi(y)] || in[y]) continue;
    std::ostringstream os;
    os << "atom '" << sys.space().id(y) << "' carries weight into the cut "
       << "through '" << sys.space().id(sys.phi(y)) << "' but is not a member";
    PropertyReport r = PropertyReport::fail(Property::invariant_subspace,
                                            matrix_tol, os.str());
    r.witness_atoms = {sys.space().id(y), sys.space().id(sys.phi(y))};
    return r;
  }
  Matrix t = to_matrix(sys);
  double scale = std::max(1.0, spectral_norm(t));
  for (std::size_t x = 0; x < sys.size(); ++x) {
    if (!in[x]) continue;
    for (std::size_t y = 0; y < sys.size(); ++y) {
      if (in[y]) continue;
      double leak = std::abs(t(static_cast<Eigen::Index>(y),
                               static_cast<Eigen::Index>(x))) /
                    scale;
      if (leak > matrix_tol) {
        std::ostringstream os;
        os << "the image of the basis vector at '" << sys.space().id(x)
           << "' leaks onto '" << sys.space().id(y) << "' (entry " << leak
           << ")";
        PropertyReport r = PropertyReport::fail(Property::invariant_subspace,
                                                matrix_tol, os.str());
        r.witness_atoms = {sys.space().id(x), sys.space().id(y)};
        r.witness_values = {leak};
        return r;
      }
    }
  }
  return PropertyReport::pass(Property::invariant_subspace, matrix_tol);
}

namespace {

cplx slide_weight(int k) {
  if (k <= 2) return 1.0;  // the two smallest positive atoms stay at 1
  double n = k / 3;
  switch (k % 3) {
    case 0: return 1.0;
    case 1: return n * n;
    default: return 1.0 / (n * n);
  }
}

}  // namespace

WcoSystem build_backward_slide(int n_max) {
  if (n_max < 1) throw InputError("backward slide needs n_max >= 1");
  const int lo = -3, hi = 3 * n_max + 2;
  std::vector<Atom> atoms;
  std::vector<std::size_t> phi;
  Field w;
  for (int k = lo; k <= hi; ++k) {
    atoms.push_back({std::to_string(k), 1.0});
    phi.push_back(static_cast<std::size_t>(k == lo ? 0 : (k - lo) - 1));
    w.push_back(k == lo ? cplx(0.0) : slide_weight(k));
  }
  return WcoSystem(MeasureSpace(std::move(atoms)), std::move(phi),
                   std::move(w));
}

std::vector<double> phase_scale_gap(int n_max) {
  if (n_max < 2) throw InputError("the growth table needs n_max >= 2");
  WcoSystem sys = build_backward_slide(n_max);
  Density sqrt_h(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) sqrt_h[i] = std::sqrt(sys.h(i));
  Density g = cond_exp_pushdown(sys, sqrt_h);
  std::vector<double> out;
  for (int n = 1; n <= n_max; ++n) {
    std::size_t i = sys.space().index_of(std::to_string(3 * n));
    out.push_back(sqrt_h[i] / (1.0 + g[i] * sqrt_h[i]));
  }
  return out;
}

}  // namespace wco
