#include "wco/measure_space.hpp"

#include <cmath>
#include <unordered_set>

namespace wco {

MeasureSpace::MeasureSpace(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw InputError("measure space needs at least one atom");
  index_.reserve(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    if (a.id.empty()) throw InputError("atom id must be nonempty");
    if (!(a.mass > 0.0) || !std::isfinite(a.mass))
      throw InputError("atom '" + a.id + "' has nonpositive or nonfinite mass");
    if (!index_.emplace(a.id, i).second)
      throw InputError("duplicate atom id '" + a.id + "'");
  }
}

std::optional<std::size_t> MeasureSpace::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MeasureSpace::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) throw InputError("unknown atom id '" + std::string(id) + "'");
  return *i;
}

double MeasureSpace::total_mass() const {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.mass;
  return m;
}

cplx integrate(const MeasureSpace& space, const Field& f,
               const std::vector<std::size_t>& subset) {
  if (f.size() != space.size())
    throw InputError("field size does not match the measure space");
  cplx s = 0.0;
  for (std::size_t i : subset) {
    if (i >= space.size()) throw InputError("atom index out of range");
    s += f[i] * space.mass(i);
  }
  return s;
}

cplx integrate(const MeasureSpace& space, const Field& f,
               const std::vector<std::string>& subset_ids) {
  return integrate(space, f, resolve_subset(space, subset_ids));
}

std::vector<std::size_t> resolve_subset(const MeasureSpace& space,
                                        const std::vector<std::string>& ids) {
  std::vector<std::size_t> out;
  out.reserve(ids.size());
  std::unordered_set<std::size_t> seen;
  for (const std::string& id : ids) {
    std::size_t i = space.index_of(id);
    if (!seen.insert(i).second)
      throw InputError("duplicate atom id '" + id + "' in subset");
    out.push_back(i);
  }
  return out;
}

double push_forward_measure(const MeasureSpace& space,
                            const std::vector<std::size_t>& phi, const Field& w,
                            const std::vector<std::size_t>& target) {
  if (phi.size() != space.size() || w.size() != space.size())
    throw InputError("phi/w size does not match the measure space");
  std::vector<char> in_target(space.size(), 0);
  for (std::size_t i : target) {
    if (i >= space.size()) throw InputError("atom index out of range");
    in_target[i] = 1;
  }
  double m = 0.0;
  for (std::size_t y = 0; y < space.size(); ++y) {
    if (phi[y] >= space.size()) throw InputError("phi maps outside the space");
    if (in_target[phi[y]]) m += std::norm(w[y]) * space.mass(y);
  }
  return m;
}

AeContext::AeContext(std::vector<double> weights)
    : weights_(std::move(weights)) {
  for (double v : weights_)
    if (v < 0.0 || !std::isfinite(v))
      throw InputError("reference weights must be finite and nonnegative");
}

bool AeContext::equal(const Field& f, const Field& g, double tol) const {
  if (f.size() != weights_.size() || g.size() != weights_.size())
    throw InputError("field size does not match the reference measure");
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (carries(i) && !close(f[i], g[i], tol)) return false;
  return true;
}

bool AeContext::equal(const Density& f, const Density& g, double tol) const {
  return !first_mismatch(f, g, tol).has_value();
}

std::optional<std::size_t> AeContext::first_mismatch(const Density& f,
                                                     const Density& g,
                                                     double tol) const {
  if (f.size() != weights_.size() || g.size() != weights_.size())
    throw InputError("field size does not match the reference measure");
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (carries(i) && !close(f[i], g[i], tol)) return i;
  return std::nullopt;
}

}  // namespace wco
