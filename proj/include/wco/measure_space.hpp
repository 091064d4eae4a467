#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wco/types.hpp"

namespace wco {

struct Atom {
  std::string id;
  double mass = 1.0;
};

/// A finite measure space: ordered atoms with strictly positive masses.
/// The declared order is the canonical indexing; every field, map and matrix
/// in the library is indexed by position in that order.
class MeasureSpace {
 public:
  explicit MeasureSpace(std::vector<Atom> atoms);

  std::size_t size() const { return atoms_.size(); }
  const std::string& id(std::size_t i) const { return atoms_[i].id; }
  double mass(std::size_t i) const { return atoms_[i].mass; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  std::optional<std::size_t> find(std::string_view id) const;

  /// Index of an id that must exist; throws InputError otherwise.
  std::size_t index_of(std::string_view id) const;

  double total_mass() const;

 private:
  std::vector<Atom> atoms_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Integral of f over a subset of atoms (sum of f * mass).
cplx integrate(const MeasureSpace& space, const Field& f,
               const std::vector<std::size_t>& subset);

/// Same, with the subset given by atom ids (duplicates rejected).
cplx integrate(const MeasureSpace& space, const Field& f,
               const std::vector<std::string>& subset_ids);

/// Resolve a list of atom ids into indices; rejects unknowns and duplicates.
std::vector<std::size_t> resolve_subset(const MeasureSpace& space,
                                        const std::vector<std::string>& ids);

/// mu_w(phi^{-1}(target)): mass of the preimage of `target` under phi,
/// taken with respect to the reweighted measure d(mu_w) = |w|^2 d(mu).
/// Computed straight from the definition by scanning all atoms; this is the
/// independent reference the derived-density code is checked against.
double push_forward_measure(const MeasureSpace& space,
                            const std::vector<std::size_t>& phi, const Field& w,
                            const std::vector<std::size_t>& target);

/// Almost-everywhere comparison relative to a fixed reference measure:
/// atoms of zero reference weight are ignored.
class AeContext {
 public:
  explicit AeContext(std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  bool carries(std::size_t i) const { return weights_[i] > 0.0; }
  const std::vector<double>& weights() const { return weights_; }

  bool equal(const Field& f, const Field& g, double tol = kDefaultTol) const;
  bool equal(const Density& f, const Density& g,
             double tol = kDefaultTol) const;

  /// First carried index where f and g differ, if any.
  std::optional<std::size_t> first_mismatch(const Density& f, const Density& g,
                                            double tol = kDefaultTol) const;

 private:
  std::vector<double> weights_;
};

}  // namespace wco
