#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace wco {

using cplx = std::complex<double>;

/// One complex value per atom, in declared atom order.
using Field = std::vector<cplx>;

/// One nonnegative real value per atom (densities, Radon-Nikodym data).
using Density = std::vector<double>;

/// Thrown for malformed inputs: bad JSON, unknown atom ids, nonpositive
/// masses, out-of-range parameters. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTol = 1e-9;

/// Mixed absolute/relative comparison: |a-b| <= tol * max(1, |a|, |b|).
inline bool close(double a, double b, double tol = kDefaultTol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool close(const cplx& a, const cplx& b, double tol = kDefaultTol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace wco
