#pragma once

#include "wco/measure_space.hpp"

namespace wco {

/// The partition of the space into preimages: fibers[z] = phi^{-1}({z}),
/// indices in declared atom order. Empty fibers are kept (as empty vectors)
/// so the partition always has one entry per atom.
struct FiberPartition {
  std::vector<std::vector<std::size_t>> fibers;
};

/// h together with its support, for callers that need both.
struct RadonNikodymData {
  Density h;
  std::vector<std::size_t> support;  // atoms with h > 0
};

/// A weighted composition system (X, mu, phi, w): the data behind the
/// operator f -> w * (f o phi) on L^2(mu). Immutable; fibers, the
/// reweighted atom masses and the Radon-Nikodym derivative h are computed
/// once at construction.
///
/// h(x) = mu_w(phi^{-1}({x})) / mu({x})   with d(mu_w) = |w|^2 d(mu).
class WcoSystem {
 public:
  WcoSystem(MeasureSpace space, std::vector<std::size_t> phi, Field w);

  const MeasureSpace& space() const { return space_; }
  std::size_t size() const { return space_.size(); }

  std::size_t phi(std::size_t i) const { return phi_[i]; }
  const std::vector<std::size_t>& phi_map() const { return phi_; }
  const cplx& w(std::size_t i) const { return w_[i]; }
  const Field& weight() const { return w_; }

  /// Atom mass under mu_w: |w(i)|^2 * mu({i}).
  double mu_w(std::size_t i) const { return mu_w_[i]; }
  bool mu_w_carries(std::size_t i) const { return mu_w_[i] > 0.0; }

  const FiberPartition& fibers() const { return fibers_; }
  const std::vector<std::size_t>& fiber(std::size_t z) const {
    return fibers_.fibers[z];
  }

  double h(std::size_t i) const { return h_[i]; }
  const Density& h_field() const { return h_; }

  /// Comparison context "almost everywhere with respect to mu_w".
  AeContext ae_mu_w() const { return AeContext(mu_w_); }
  /// Comparison context "almost everywhere with respect to mu" (everywhere).
  AeContext ae_mu() const;

 private:
  MeasureSpace space_;
  std::vector<std::size_t> phi_;
  Field w_;
  std::vector<double> mu_w_;
  FiberPartition fibers_;
  Density h_;
};

/// h recomputed against push_forward_measure atom by atom, with its support.
RadonNikodymData radon_nikodym(const WcoSystem& sys);

/// Conditional expectation onto phi-measurable functions, taken in L^2(mu_w):
/// E(f)(y) is the mu_w-average of f over the fiber of phi(y); atoms whose
/// fiber has mu_w-measure zero get the value 0.
Field conditional_expectation(const WcoSystem& sys, const Field& f);
Density conditional_expectation(const WcoSystem& sys, const Density& f);

/// The phi-pushforward representative of E(f): the function g with
/// E(f) = g o phi, g = 0 off the support of h. Entry z is the mu_w-average
/// of f over phi^{-1}({z}).
Field cond_exp_pushdown(const WcoSystem& sys, const Field& f);
Density cond_exp_pushdown(const WcoSystem& sys, const Density& f);

/// Operator norm of the system, sqrt(max h); finite systems are always
/// bounded.
double operator_norm(const WcoSystem& sys);

/// The system of the squared operator: (phi o phi, w * (w o phi)).
WcoSystem compose_square(const WcoSystem& sys);

/// f_w = f / w where w != 0, zero elsewhere.
Field weight_quotient(const WcoSystem& sys, const Field& f);

}  // namespace wco
