#pragma once

#include "wco/system.hpp"

namespace wco {

/// Closed-form polar data of the operator: the modulus is multiplication by
/// sqrt(h), and the phase is the composition system with weight
/// w~ = w / sqrt(h o phi) (zero where w vanishes; h o phi > 0 wherever
/// w does not vanish, so the quotient is well defined).
struct PolarData {
  Field phase_weight;       // w~
  Density modulus_density;  // sqrt(h)
};

PolarData polar(const WcoSystem& sys);

/// The phase as a system in its own right: (X, mu, phi, w~). Its own
/// Radon-Nikodym derivative is exactly the indicator of {h > 0}.
WcoSystem phase_system(const WcoSystem& sys);

/// Weight of the generalized Aluthge transform, alpha in (0, 1]:
///   w_alpha = w * (h / (h o phi))^(alpha/2)   on {w != 0},
/// using h(phi(y)) > 0 there; atoms with h(y) = 0 take the factor 0^(alpha/2) = 0.
struct AluthgeWeights {
  double alpha;
  Field w_alpha;        // weight of the transformed system
  Field phase_alpha;    // w~ * (h^alpha / E(h^alpha))^(1/2), phase route
};

AluthgeWeights aluthge_weight(const WcoSystem& sys, double alpha);

/// The transformed system (X, mu, phi, w_alpha).
WcoSystem aluthge_system(const WcoSystem& sys, double alpha);

/// P f = w * E(f / w): the orthogonal projection onto the closed range of
/// the operator.
Field range_projection(const WcoSystem& sys, const Field& f);

}  // namespace wco
