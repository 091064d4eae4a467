#include "wco/transforms.hpp"

#include <cmath>

namespace wco {

PolarData polar(const WcoSystem& sys) {
  PolarData out;
  out.modulus_density.resize(sys.size());
  out.phase_weight.assign(sys.size(), 0.0);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    out.modulus_density[i] = std::sqrt(sys.h(i));
    if (sys.w(i) != cplx(0.0)) {
      // w(i) != 0 puts mu_w-mass into the fiber of phi(i), so h(phi(i)) > 0
      out.phase_weight[i] = sys.w(i) / std::sqrt(sys.h(sys.phi(i)));
    }
  }
  return out;
}

WcoSystem phase_system(const WcoSystem& sys) {
  return WcoSystem(sys.space(), sys.phi_map(), polar(sys).phase_weight);
}

AluthgeWeights aluthge_weight(const WcoSystem& sys, double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw InputError("aluthge exponent must lie in (0, 1]");
  AluthgeWeights out;
  out.alpha = alpha;
  out.w_alpha.assign(sys.size(), 0.0);
  out.phase_alpha.assign(sys.size(), 0.0);

  Density h_pow(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i)
    h_pow[i] = sys.h(i) > 0.0 ? std::pow(sys.h(i), alpha) : 0.0;
  Density e_pow = conditional_expectation(sys, h_pow);
  Field phase = polar(sys).phase_weight;

  for (std::size_t y = 0; y < sys.size(); ++y) {
    if (sys.w(y) == cplx(0.0)) continue;
    double ratio = sys.h(y) / sys.h(sys.phi(y));
    out.w_alpha[y] = sys.w(y) * std::pow(ratio, alpha / 2.0);
    if (h_pow[y] > 0.0 && e_pow[y] > 0.0)
      out.phase_alpha[y] = phase[y] * std::sqrt(h_pow[y] / e_pow[y]);
  }
  return out;
}

WcoSystem aluthge_system(const WcoSystem& sys, double alpha) {
  return WcoSystem(sys.space(), sys.phi_map(),
                   aluthge_weight(sys, alpha).w_alpha);
}

Field range_projection(const WcoSystem& sys, const Field& f) {
  Field quotient = weight_quotient(sys, f);
  Field averaged = conditional_expectation(sys, quotient);
  Field out(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) out[i] = sys.w(i) * averaged[i];
  return out;
}

}  // namespace wco
