#include "wco/demos.hpp"

#include "wco/invariant.hpp"

namespace wco {

std::vector<std::string> demo_names() {
  return {"blackblack", "blackblackplus", "rudy", "gauss1d", "kernel2"};
}

WcoSystem build_kernel_pair() {
  MeasureSpace space({{"1", 1.0}, {"2", 1.0}});
  return WcoSystem(std::move(space), {0, 0}, {cplx(1.0), cplx(0.0)});
}

WcoSystem build_identity(std::size_t n) {
  std::vector<Atom> atoms;
  std::vector<std::size_t> phi;
  for (std::size_t i = 0; i < n; ++i) {
    atoms.push_back({std::to_string(i + 1), 1.0});
    phi.push_back(i);
  }
  return WcoSystem(MeasureSpace(std::move(atoms)), std::move(phi),
                   Field(n, 1.0));
}

DemoBuild build_demo(const std::string& name, cplx alpha, int depth) {
  if (name == "blackblack") {
    TreeShift shift = build_two_branch(alpha, depth);
    WcoSystem sys = tree_to_wco(shift);
    return {std::move(sys), std::move(shift),
            "two-branch tree shift with one adjustable weight alpha below "
            "the junction"};
  }
  if (name == "blackblackplus") {
    TreeShift shift = build_branch_fork(depth);
    WcoSystem sys = tree_to_wco(shift);
    return {std::move(sys), std::move(shift),
            "forked tree shift whose weighted and unweighted centering "
            "criteria disagree"};
  }
  if (name == "rudy") {
    return {build_backward_slide(20), std::nullopt,
            "backward slide on an integer window with polynomially split weights"};
  }
  if (name == "kernel2") {
    return {build_kernel_pair(), std::nullopt,
            "two atoms collapsing onto one; the operator kills the second"};
  }
  if (name == "gauss1d") {
    throw InputError(
        "the 'gauss1d' demo is continuous; run the gauss command instead "
        "(e.g. gauss --alpha 2 --coeffs 1,1)");
  }
  std::string names;
  for (const std::string& n : demo_names())
    names += (names.empty() ? "" : ", ") + n;
  throw InputError("unknown demo '" + name + "'; available: " + names);
}

}  // namespace wco
