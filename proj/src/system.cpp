#include "wco/system.hpp"

#include <cmath>

namespace wco {

WcoSystem::WcoSystem(MeasureSpace space, std::vector<std::size_t> phi, Field w)
    : space_(std::move(space)), phi_(std::move(phi)), w_(std::move(w)) {
  const std::size_t n = space_.size();
  if (phi_.size() != n) throw InputError("phi must be defined on every atom");
  if (w_.size() != n) throw InputError("w must be defined on every atom");
  for (std::size_t i = 0; i < n; ++i) {
    if (phi_[i] >= n) throw InputError("phi maps outside the space");
    if (!std::isfinite(w_[i].real()) || !std::isfinite(w_[i].imag()))
      throw InputError("weight must be finite");
  }
  mu_w_.resize(n);
  for (std::size_t i = 0; i < n; ++i) mu_w_[i] = std::norm(w_[i]) * space_.mass(i);
  fibers_.fibers.assign(n, {});
  for (std::size_t y = 0; y < n; ++y) fibers_.fibers[phi_[y]].push_back(y);
  h_.resize(n);
  for (std::size_t z = 0; z < n; ++z) {
    double m = 0.0;
    for (std::size_t y : fibers_.fibers[z]) m += mu_w_[y];
    h_[z] = m / space_.mass(z);
  }
}

AeContext WcoSystem::ae_mu() const {
  std::vector<double> masses(size());
  for (std::size_t i = 0; i < size(); ++i) masses[i] = space_.mass(i);
  return AeContext(std::move(masses));
}

RadonNikodymData radon_nikodym(const WcoSystem& sys) {
  RadonNikodymData out;
  out.h.resize(sys.size());
  for (std::size_t z = 0; z < sys.size(); ++z) {
    double m = push_forward_measure(sys.space(), sys.phi_map(), sys.weight(), {z});
    out.h[z] = m / sys.space().mass(z);
    if (out.h[z] > 0.0) out.support.push_back(z);
  }
  return out;
}

namespace {

template <typename T>
std::vector<T> pushdown_impl(const WcoSystem& sys, const std::vector<T>& f) {
  if (f.size() != sys.size())
    throw InputError("field size does not match the system");
  std::vector<T> g(sys.size(), T{});
  for (std::size_t z = 0; z < sys.size(); ++z) {
    double m = 0.0;
    T s{};
    for (std::size_t y : sys.fiber(z)) {
      m += sys.mu_w(y);
      s += f[y] * sys.mu_w(y);
    }
    if (m > 0.0) g[z] = s / m;
  }
  return g;
}

template <typename T>
std::vector<T> cond_exp_impl(const WcoSystem& sys, const std::vector<T>& f) {
  std::vector<T> g = pushdown_impl(sys, f);
  std::vector<T> e(sys.size());
  for (std::size_t y = 0; y < sys.size(); ++y) e[y] = g[sys.phi(y)];
  return e;
}

}  // namespace

Field conditional_expectation(const WcoSystem& sys, const Field& f) {
  return cond_exp_impl(sys, f);
}

Density conditional_expectation(const WcoSystem& sys, const Density& f) {
  return cond_exp_impl(sys, f);
}

Field cond_exp_pushdown(const WcoSystem& sys, const Field& f) {
  return pushdown_impl(sys, f);
}

Density cond_exp_pushdown(const WcoSystem& sys, const Density& f) {
  return pushdown_impl(sys, f);
}

double operator_norm(const WcoSystem& sys) {
  double hmax = 0.0;
  for (std::size_t i = 0; i < sys.size(); ++i) hmax = std::max(hmax, sys.h(i));
  return std::sqrt(hmax);
}

WcoSystem compose_square(const WcoSystem& sys) {
  const std::size_t n = sys.size();
  std::vector<std::size_t> phi2(n);
  Field w2(n);
  for (std::size_t i = 0; i < n; ++i) {
    phi2[i] = sys.phi(sys.phi(i));
    w2[i] = sys.w(i) * sys.w(sys.phi(i));
  }
  return WcoSystem(sys.space(), std::move(phi2), std::move(w2));
}

Field weight_quotient(const WcoSystem& sys, const Field& f) {
  if (f.size() != sys.size())
    throw InputError("field size does not match the system");
  Field out(sys.size(), 0.0);
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (sys.w(i) != cplx(0.0)) out[i] = f[i] / sys.w(i);
  return out;
}

}  // namespace wco
