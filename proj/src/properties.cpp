#include "wco/properties.hpp"

#include <cmath>
#include <sstream>

#include "wco/oracle.hpp"

namespace wco {

std::string_view property_name(Property p) {
  switch (p) {
    case Property::weakly_centered: return "weakly_centered";
    case Property::weakly_centered_alpha: return "weakly_centered_alpha";
    case Property::quasinormal: return "quasinormal";
    case Property::hyponormal: return "hyponormal";
    case Property::cohyponormal: return "cohyponormal";
    case Property::centered: return "centered";
    case Property::isometry_multiple: return "isometry_multiple";
    case Property::phase_unitary: return "phase_unitary";
    case Property::tree_weakly_centered: return "tree_weakly_centered";
    case Property::unweighted_tree_criterion: return "unweighted_tree_criterion";
    case Property::invariant_subspace: return "invariant_subspace";
    case Property::olson_order: return "olson_order";
    case Property::spectral_intertwining: return "spectral_intertwining";
    case Property::bounded: return "bounded";
    case Property::log_convex_density: return "log_convex_density";
  }
  return "unknown";
}

namespace {

std::string atom_list(const MeasureSpace& s, std::initializer_list<std::size_t> idx) {
  std::string out;
  for (std::size_t i : idx) {
    if (!out.empty()) out += ", ";
    out += "'" + s.id(i) + "'";
  }
  return out;
}

// Fiber-constancy of a density on the mu_w-carried part of every fiber.
// On failure the witness names the fiber atom and the first disagreeing pair.
PropertyReport fiber_constant(const WcoSystem& sys, const Density& p,
                              Property prop, const char* what, double tol) {
  for (std::size_t z = 0; z < sys.size(); ++z) {
    const auto& fiber = sys.fiber(z);
    std::size_t ref = sys.size();  // first mu_w-carried member
    for (std::size_t y : fiber) {
      if (!sys.mu_w_carries(y)) continue;
      if (ref == sys.size()) {
        ref = y;
        continue;
      }
      if (!close(p[y], p[ref], tol)) {
        std::ostringstream os;
        os << what << " is not constant on the carried part of the fiber of '"
           << sys.space().id(z) << "': " << atom_list(sys.space(), {ref, y})
           << " carry values " << p[ref] << " and " << p[y];
        PropertyReport r = PropertyReport::fail(prop, tol, os.str());
        r.witness_atoms = {sys.space().id(z), sys.space().id(ref),
                           sys.space().id(y)};
        r.witness_values = {p[ref], p[y]};
        return r;
      }
    }
  }
  return PropertyReport::pass(prop, tol);
}

}  // namespace

PropertyReport is_weakly_centered(const WcoSystem& sys, double tol) {
  return fiber_constant(sys, sys.h_field(), Property::weakly_centered, "h",
                        tol);
}

PropertyReport is_weakly_centered_alpha(const WcoSystem& sys, double alpha,
                                        double tol) {
  if (alpha == 0.0 || !std::isfinite(alpha))
    throw InputError("power exponent must be a finite nonzero real");
  Density p(sys.size(), 0.0);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (sys.h(i) > 0.0) {
      p[i] = std::pow(sys.h(i), alpha);
    } else if (alpha < 0.0 && sys.mu_w_carries(i)) {
      std::ostringstream os;
      os << "negative power of h is undefined at carried atom '"
         << sys.space().id(i) << "' where h = 0";
      PropertyReport r = PropertyReport::not_applicable(
          Property::weakly_centered_alpha, tol, os.str());
      r.witness_atoms = {sys.space().id(i)};
      return r;
    }
  }
  std::ostringstream label;
  label << "h^" << alpha;
  std::string name = label.str();
  return fiber_constant(sys, p, Property::weakly_centered_alpha, name.c_str(),
                        tol);
}

PropertyReport is_quasinormal(const WcoSystem& sys, double tol) {
  for (std::size_t y = 0; y < sys.size(); ++y) {
    if (!sys.mu_w_carries(y)) continue;
    double at = sys.h(y), pulled = sys.h(sys.phi(y));
    if (!close(at, pulled, tol)) {
      std::ostringstream os;
      os << "h o phi differs from h at carried atom '" << sys.space().id(y)
         << "': h('" << sys.space().id(sys.phi(y)) << "') = " << pulled
         << " but h('" << sys.space().id(y) << "') = " << at;
      PropertyReport r = PropertyReport::fail(Property::quasinormal, tol, os.str());
      r.witness_atoms = {sys.space().id(y), sys.space().id(sys.phi(y))};
      r.witness_values = {at, pulled};
      return r;
    }
  }
  return PropertyReport::pass(Property::quasinormal, tol);
}

PropertyReport is_hyponormal(const WcoSystem& sys, double tol) {
  for (std::size_t y = 0; y < sys.size(); ++y) {
    if (!sys.mu_w_carries(y)) continue;
    double at = sys.h(y), pulled = sys.h(sys.phi(y));
    double scale = std::max({1.0, at, pulled});
    if (pulled > at + tol * scale) {
      std::ostringstream os;
      os << "h o phi exceeds h at carried atom '" << sys.space().id(y)
         << "': " << pulled << " > " << at;
      PropertyReport r = PropertyReport::fail(Property::hyponormal, tol, os.str());
      r.witness_atoms = {sys.space().id(y), sys.space().id(sys.phi(y))};
      r.witness_values = {at, pulled};
      return r;
    }
  }
  return PropertyReport::pass(Property::hyponormal, tol);
}

PropertyReport is_cohyponormal(const WcoSystem& sys, double tol) {
  // No usable closed form here; decided through the matrix realization.
  Matrix t = to_matrix(sys);
  Matrix gap = t.adjoint() * t - t * t.adjoint();  // TT* >= T*T wanted
  double scale = std::max(1.0, spectral_norm(t));
  double top = largest_eigenvalue(gap) / (scale * scale);
  if (top > tol) {
    std::ostringstream os;
    os << "T*T - TT* has a positive direction: scaled top eigenvalue " << top;
    return PropertyReport::fail(Property::cohyponormal, tol, os.str());
  }
  return PropertyReport::pass(Property::cohyponormal, tol);
}

PropertyReport is_centered(const WcoSystem& sys, int depth, double tol) {
  if (depth < 1) throw InputError("centered check needs depth >= 1");
  Matrix t = to_matrix(sys);
  double gap = centered_commutator(t, depth);
  if (gap > tol) {
    std::ostringstream os;
    os << "the power string does not commute: scaled commutator " << gap
       << " at depth " << depth;
    return PropertyReport::fail(Property::centered, tol, os.str());
  }
  return PropertyReport::pass(Property::centered, tol);
}

PropertyReport is_isometry_multiple(const WcoSystem& sys, double tol) {
  double ref = sys.h(0);
  for (std::size_t i = 1; i < sys.size(); ++i) {
    if (!close(sys.h(i), ref, tol)) {
      std::ostringstream os;
      os << "h is not constant: h('" << sys.space().id(0) << "') = " << ref
         << " but h('" << sys.space().id(i) << "') = " << sys.h(i);
      PropertyReport r =
          PropertyReport::fail(Property::isometry_multiple, tol, os.str());
      r.witness_atoms = {sys.space().id(0), sys.space().id(i)};
      r.witness_values = {ref, sys.h(i)};
      return r;
    }
  }
  PropertyReport r = PropertyReport::pass(Property::isometry_multiple, tol);
  r.witness_values = {std::sqrt(ref)};  // the scalar
  return r;
}

std::vector<PropertyReport> analyze_properties(const WcoSystem& sys,
                                               double tol) {
  std::vector<PropertyReport> out;
  out.push_back(is_weakly_centered(sys, tol));
  out.push_back(is_weakly_centered_alpha(sys, 2.0, tol));
  out.push_back(is_quasinormal(sys, tol));
  out.push_back(is_hyponormal(sys, tol));
  out.push_back(is_cohyponormal(sys, tol));
  out.push_back(is_centered(sys, 3, tol));
  out.push_back(is_isometry_multiple(sys, tol));
  return out;
}

}  // namespace wco
