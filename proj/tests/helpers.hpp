#pragma once

// Builders shared by the test files. Systems are specified by atom id so
// the tests read like the definitions they exercise.

#include <string>
#include <utility>
#include <vector>

#include "wco/system.hpp"

namespace wco_test {

using wco::cplx;

inline wco::WcoSystem make_system(
    std::vector<wco::Atom> atoms,
    const std::vector<std::pair<std::string, std::string>>& phi_pairs,
    const std::vector<std::pair<std::string, cplx>>& weights) {
  wco::MeasureSpace space(std::move(atoms));
  std::vector<std::size_t> phi(space.size(), space.size());
  for (const auto& [from, to] : phi_pairs)
    phi[space.index_of(from)] = space.index_of(to);
  wco::Field w(space.size(), 0.0);
  for (const auto& [id, v] : weights) w[space.index_of(id)] = v;
  return wco::WcoSystem(std::move(space), std::move(phi), std::move(w));
}

// w(1) e_1 <-> w(2) e_2 on two atoms: the cycle used by several criteria.
inline wco::WcoSystem two_cycle(double m1, double m2, cplx w1, cplx w2) {
  return make_system({{"1", m1}, {"2", m2}}, {{"1", "2"}, {"2", "1"}},
                     {{"1", w1}, {"2", w2}});
}

}  // namespace wco_test
