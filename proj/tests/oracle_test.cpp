#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "wco/demos.hpp"
#include "wco/fuzz.hpp"
#include "wco/oracle.hpp"
#include "wco/properties.hpp"
#include "wco/tree.hpp"

using namespace wco;
using wco_test::make_system;

namespace {

double matrix_gap(const Matrix& a, const Matrix& b) {
  return spectral_norm(Matrix(a - b));
}

}  // namespace

TEST_CASE("matrix of the kernel pair") {
  Matrix t = to_matrix(build_kernel_pair());
  REQUIRE(t.rows() == 2);
  CHECK(t(0, 0) == cplx(1.0));
  CHECK(t(0, 1) == cplx(0.0));
  CHECK(t(1, 0) == cplx(0.0));
  CHECK(t(1, 1) == cplx(0.0));
}

TEST_CASE("matrix entries carry the mass ratio") {
  WcoSystem sys = make_system({{"a", 4.0}, {"b", 1.0}},
                              {{"a", "a"}, {"b", "a"}},
                              {{"a", 1.0}, {"b", cplx(0.0, 3.0)}});
  Matrix t = to_matrix(sys);
  CHECK(t(1, 0) == cplx(0.0, 1.5));  // 3i * sqrt(1 / 4)
  // T*T is multiplication by h in this basis, exactly
  CHECK(matrix_gap(Matrix(t.adjoint() * t),
                   multiplication_matrix(sys, sys.h_field())) == 0.0);
}

TEST_CASE("commutator metrics vanish exactly where they should") {
  WcoSystem id = build_identity(3);
  Matrix t = to_matrix(id);
  CHECK(weak_centered_commutator(t) <= 1e-14);
  CHECK(quasinormal_commutator(t) <= 1e-14);
  CHECK(moduli_commutator(t) <= 1e-12);
  CHECK(centered_commutator(t, 3) <= 1e-12);
  CHECK_THROWS_AS(centered_commutator(t, 0), InputError);
}

TEST_CASE("frozen commutator of the two-branch window with alpha 2") {
  // the junction sees child weight sums 1 and |alpha|^2 = 4; the scaled
  // commutator of the depth-4 window is exactly 3/16
  TreeShift shift = build_two_branch(cplx(2.0), 4);
  Matrix t = to_matrix(tree_to_wco(shift));
  CHECK(weak_centered_commutator(t) == doctest::Approx(0.1875).epsilon(1e-9));
  // the same number at depth 3: the window size does not matter
  Matrix t3 = to_matrix(tree_to_wco(build_two_branch(cplx(2.0), 3)));
  CHECK(weak_centered_commutator(t3) == doctest::Approx(0.1875).epsilon(1e-9));
}

TEST_CASE("svd polar factors recompose and form a partial isometry") {
  for (int index = 0; index < 40; ++index) {
    WcoSystem sys = random_system(43, index, 7);
    Matrix t = to_matrix(sys);
    PolarFactors pf = svd_polar(t);
    CAPTURE(index);
    CHECK(matrix_gap(t, Matrix(pf.phase * pf.modulus)) <= 1e-10);
    // U U* U = U characterizes partial isometries
    CHECK(matrix_gap(Matrix(pf.phase * pf.phase.adjoint() * pf.phase),
                     pf.phase) <= 1e-10);
    // the modulus is psd with the singular values of t
    CHECK(smallest_eigenvalue(pf.modulus) >= -1e-10);
  }
}

TEST_CASE("hermitian power acts on the spectrum with zero fixed") {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 4.0;
  m(1, 1) = 1.0;
  m(2, 2) = 0.0;
  Matrix root = hermitian_power(m, 0.5);
  CHECK(root(0, 0).real() == doctest::Approx(2.0));
  CHECK(root(1, 1).real() == doctest::Approx(1.0));
  CHECK(std::abs(root(2, 2)) <= 1e-14);
  // negative exponents leave the kernel alone instead of blowing up
  Matrix inv = hermitian_power(m, -1.0);
  CHECK(inv(0, 0).real() == doctest::Approx(0.25));
  CHECK(std::abs(inv(2, 2)) <= 1e-14);
  // a tiny negative eigenvalue from roundoff is clamped, not NaN-ed
  m(2, 2) = -1e-15;
  Matrix r2 = hermitian_power(m, 0.5);
  CHECK(std::isfinite(r2(2, 2).real()));
}

TEST_CASE("spectral decomposition resolves the identity") {
  for (int index = 0; index < 25; ++index) {
    WcoSystem sys = random_system(47, index, 7);
    Matrix t = to_matrix(sys);
    Matrix b = t.adjoint() * t;
    SpectralDecomposition d = spectral_decomposition(b);
    CAPTURE(index);
    Matrix sum = Matrix::Zero(b.rows(), b.cols());
    Matrix recon = Matrix::Zero(b.rows(), b.cols());
    for (std::size_t k = 0; k < d.projectors.size(); ++k) {
      const Matrix& p = d.projectors[k];
      CHECK(matrix_gap(p, p.adjoint()) <= 1e-10);
      CHECK(matrix_gap(p, Matrix(p * p)) <= 1e-9);
      if (k + 1 < d.eigenvalues.size())
        CHECK(d.eigenvalues[k] < d.eigenvalues[k + 1]);
      sum += p;
      recon += d.eigenvalues[k] * p;
    }
    CHECK(matrix_gap(sum, Matrix::Identity(b.rows(), b.cols())) <= 1e-9);
    CHECK(matrix_gap(recon, b) <= 1e-7 * std::max(1.0, spectral_norm(b)));
  }
}

TEST_CASE("interval and set membership") {
  Interval half_open{0.0, 1.0, true, false};
  CHECK(half_open.contains(0.0));
  CHECK(half_open.contains(0.5));
  CHECK_FALSE(half_open.contains(1.0));
  CHECK(Interval::point(2.0).contains(2.0));
  CHECK_FALSE(Interval::point(2.0).contains(2.0 + 1e-12));
  CHECK(Interval::at_most(3.0).contains(3.0));
  CHECK(Interval::at_most(3.0).contains(-1e300));
  CHECK_FALSE(Interval::at_most(3.0).contains(3.5));
  CHECK(Interval::all().contains(0.0));
  RealSet comp = {{Interval::point(1.0)}, true};
  CHECK(comp.contains(0.0));
  CHECK_FALSE(comp.contains(1.0));
}

TEST_CASE("spectral measure of B on the kernel pair") {
  WcoSystem sys = build_kernel_pair();  // h = (1, 0)
  Matrix whole = spectral_measure_B(sys, RealSet::of(Interval::all()));
  CHECK(matrix_gap(whole, Matrix::Identity(2, 2)) == 0.0);
  Matrix at_zero = spectral_measure_B(sys, RealSet::of(Interval::point(0.0)));
  CHECK(at_zero(0, 0) == cplx(0.0));
  CHECK(at_zero(1, 1) == cplx(1.0));
  Matrix at_one = spectral_measure_B(sys, RealSet::of(Interval::point(1.0)));
  CHECK(at_one(0, 0) == cplx(1.0));
  CHECK(at_one(1, 1) == cplx(0.0));
}

TEST_CASE("spectral measure of A includes the adjoint kernel at zero") {
  WcoSystem sys = build_kernel_pair();
  // range of T is the span of the first basis vector
  Matrix away = spectral_measure_A(sys, RealSet{{Interval::point(0.0)}, true});
  CHECK(away(0, 0) == cplx(1.0));
  CHECK(away(1, 1) == cplx(0.0));
  Matrix at_zero = spectral_measure_A(sys, RealSet::of(Interval::point(0.0)));
  CHECK(at_zero(0, 0) == cplx(0.0));
  CHECK(at_zero(1, 1) == cplx(1.0));
  // the two add up to the identity
  CHECK(matrix_gap(Matrix(away + at_zero), Matrix::Identity(2, 2)) <= 1e-12);
}

TEST_CASE("closed-form spectral measures match eigenprojector sums") {
  for (int index = 0; index < 30; ++index) {
    WcoSystem sys = random_system(53, index, 6);
    Matrix t = to_matrix(sys);
    SpectralDecomposition da = spectral_decomposition(Matrix(t * t.adjoint()));
    SpectralDecomposition db = spectral_decomposition(Matrix(t.adjoint() * t));
    CAPTURE(index);
    // boundaries buffered away from the spectrum so eigensolver noise
    // cannot flip a classification
    std::vector<RealSet> sets;
    sets.push_back(RealSet::of(Interval{-1e-7, 1e-7, true, true}));
    sets.push_back({{Interval{-1e-7, 1e-7, true, true}}, true});
    for (std::size_t i = 0; i < sys.size(); ++i) {
      sets.push_back(RealSet::of(Interval::at_most(sys.h(i) + 1e-7)));
      sets.push_back(RealSet::of(Interval::at_most(sys.h(i) - 1e-7)));
    }
    for (const RealSet& s : sets) {
      CHECK(matrix_gap(spectral_measure_B(sys, s),
                       eigenprojector_sum(db, s)) <= 1e-7);
      CHECK(matrix_gap(spectral_measure_A(sys, s),
                       eigenprojector_sum(da, s)) <= 1e-7);
    }
  }
}

TEST_CASE("olson order check on weakly centered hyponormal systems") {
  CHECK(olson_order_check(build_kernel_pair()).verdict);
  CHECK(olson_order_check(build_identity(3)).verdict);
  // a merge with h o phi > h somewhere is not hyponormal: not applicable
  WcoSystem merge = make_system({{"z", 1.0}, {"a", 1.0}},
                                {{"z", "z"}, {"a", "z"}},
                                {{"z", 1.0}, {"a", 1.0}});
  PropertyReport r = olson_order_check(merge);
  CHECK_FALSE(r.applicable);
}

TEST_CASE("intertwining holds when the adjoint has trivial kernel") {
  // a weighted 3-cycle with nowhere-zero weight is bijective and carried
  WcoSystem cyc = make_system(
      {{"a", 1.0}, {"b", 2.0}, {"c", 0.5}},
      {{"a", "b"}, {"b", "c"}, {"c", "a"}},
      {{"a", cplx(1.0, 1.0)}, {"b", 0.5}, {"c", cplx(0.0, 2.0)}});
  CHECK(intertwining_check(cyc).verdict);
  // the kernel pair has a nontrivial adjoint kernel: not applicable
  PropertyReport r = intertwining_check(build_kernel_pair());
  CHECK_FALSE(r.applicable);
  CHECK(r.witness.find("bijection") != std::string::npos);
}

TEST_CASE("aluthge matrix fixes quasinormal operators") {
  WcoSystem sys = wco_test::two_cycle(1.0, 1.0, cplx(2.0), cplx(0.0, 2.0));
  REQUIRE(is_quasinormal(sys).verdict);
  Matrix t = to_matrix(sys);
  for (double alpha : {0.25, 0.5, 1.0})
    CHECK(matrix_gap(aluthge_matrix(t, alpha), t) <= 1e-10);
  CHECK_THROWS_AS(aluthge_matrix(t, 0.0), InputError);
  CHECK_THROWS_AS(aluthge_matrix(t, 2.0), InputError);
}

TEST_CASE("adjoint consistency of the matrix realization") {
  // <T f, g> = <f, T* g> for a batch of random vectors
  WcoSystem sys = random_system(59, 2, 8);
  Matrix t = to_matrix(sys);
  const auto n = t.rows();
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    Eigen::VectorXcd f(n), g(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      f(i) = cplx(unif(rng), unif(rng));
      g(i) = cplx(unif(rng), unif(rng));
    }
    cplx lhs = (t * f).dot(g);
    cplx rhs = f.dot(t.adjoint() * g);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}
