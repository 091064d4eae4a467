#pragma once

#include <Eigen/Dense>

#include "wco/report.hpp"
#include "wco/system.hpp"

namespace wco {

using Matrix = Eigen::MatrixXcd;

/// Matrix of the operator f -> w * (f o phi) in the orthonormal basis
/// e_x = indicator(x) / sqrt(mu({x})):
///   entry(y, x) = w(y) * [phi(y) = x] * sqrt(mu({y}) / mu({x})).
/// Everything in this header works on such dense matrices and never looks
/// at h, fibers or conditional expectations, so it can serve as an
/// independent referee for the closed-form criteria.
Matrix to_matrix(const WcoSystem& sys);

/// Matrix of multiplication by a real field g (diagonal in the atom basis).
Matrix multiplication_matrix(const WcoSystem& sys, const Density& g);

/// Matrix of the projection f -> w * E(f / w) onto the closed range.
Matrix projection_matrix(const WcoSystem& sys);

double spectral_norm(const Matrix& m);
double largest_eigenvalue(const Matrix& hermitian);
double smallest_eigenvalue(const Matrix& hermitian);

/// || T T* T* T - T* T T T* || / max(1, ||T||^4): zero (up to noise) exactly
/// for weakly centered operators.
double weak_centered_commutator(const Matrix& t);

/// || T (T*T) - (T*T) T || / max(1, ||T||^3).
double quasinormal_commutator(const Matrix& t);

/// || |T| |T*| - |T*| |T| || / max(1, ||T||^2) with the moduli from the
/// polar decompositions of T and T*.
double moduli_commutator(const Matrix& t);

/// Largest scaled pairwise commutator of the string
/// ..., T^2 (T^2)*, T T*, T* T, (T^2)* T^2, ... up to the given power.
double centered_commutator(const Matrix& t, int depth);

struct PolarFactors {
  Matrix phase;    // partial isometry, zero on the kernel
  Matrix modulus;  // |T| = (T*T)^{1/2}
};

/// Polar decomposition through the SVD; singular values below
/// rel_threshold * sigma_max are treated as kernel directions.
PolarFactors svd_polar(const Matrix& t, double rel_threshold = 1e-12);

/// f(M) for Hermitian M with f(x) = x^exponent, using 0^exponent = 0.
/// Small negative eigenvalues (roundoff) are clamped to zero first.
Matrix hermitian_power(const Matrix& hermitian, double exponent);

/// |T|^alpha U |T|^(1-alpha) with U from svd_polar: the matrix route to the
/// generalized Aluthge transform.
Matrix aluthge_matrix(const Matrix& t, double alpha);

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // distinct, ascending
  std::vector<Matrix> projectors;   // orthogonal, summing to I
};

/// Eigenprojector decomposition of a Hermitian matrix; eigenvalues closer
/// than cluster_rel * max(1, spread) are merged into one cluster.
SpectralDecomposition spectral_decomposition(const Matrix& hermitian,
                                             double cluster_rel = 1e-8);

/// A finite union of intervals, optionally complemented. Enough Borel sets
/// to exercise spectral measures.
struct Interval {
  double lo = 0.0, hi = 0.0;
  bool lo_closed = true, hi_closed = true;
  bool contains(double x) const;
  static Interval point(double v) { return {v, v, true, true}; }
  static Interval at_most(double t);
  static Interval all();
};

struct RealSet {
  std::vector<Interval> parts;
  bool complement = false;
  bool contains(double x) const;
  static RealSet of(Interval i) { return {{i}, false}; }
};

/// Sum of the eigenprojectors of `hermitian` with eigenvalue in `s`:
/// the brute-force spectral measure.
Matrix eigenprojector_sum(const SpectralDecomposition& d, const RealSet& s);

/// Closed-form spectral measure of B = T*T = M_h: multiplication by the
/// indicator of {h in s}.
Matrix spectral_measure_B(const WcoSystem& sys, const RealSet& s);

/// Closed-form spectral measure of A = T T* = M_{h o phi} P:
///   E_A(s) = M_{indicator of (h o phi)^{-1}(s)} P + [0 in s] (I - P).
Matrix spectral_measure_A(const WcoSystem& sys, const RealSet& s);

/// Olson order F_B(t) <= F_A(t) for all t, i.e. F_A(t) - F_B(t) psd at
/// every spectral threshold of A and B (F_M(t) = E_M((-inf, t])).
/// Applicable when the system is weakly centered and hyponormal.
PropertyReport olson_order_check(const WcoSystem& sys,
                                 double tol = kDefaultTol);

/// E_A(s) T = T E_B(s) for a family of threshold sets; applicable when T*
/// has trivial kernel (w nowhere zero and phi a bijection).
PropertyReport intertwining_check(const WcoSystem& sys,
                                  double tol = kDefaultTol);

}  // namespace wco
