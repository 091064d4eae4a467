#include "wco/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

#include "wco/properties.hpp"
#include "wco/transforms.hpp"

namespace wco {

Matrix to_matrix(const WcoSystem& sys) {
  const auto n = static_cast<Eigen::Index>(sys.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index y = 0; y < n; ++y) {
    auto x = static_cast<Eigen::Index>(sys.phi(y));
    m(y, x) = sys.w(y) * std::sqrt(sys.space().mass(y) / sys.space().mass(x));
  }
  return m;
}

Matrix multiplication_matrix(const WcoSystem& sys, const Density& g) {
  if (g.size() != sys.size())
    throw InputError("field size does not match the system");
  const auto n = static_cast<Eigen::Index>(sys.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = g[i];
  return m;
}

Matrix projection_matrix(const WcoSystem& sys) {
  const auto n = static_cast<Eigen::Index>(sys.size());
  Matrix m = Matrix::Zero(n, n);
  // column x of the projection = P applied to the basis vector e_x
  for (Eigen::Index x = 0; x < n; ++x) {
    Field e(sys.size(), 0.0);
    e[static_cast<std::size_t>(x)] =
        1.0 / std::sqrt(sys.space().mass(static_cast<std::size_t>(x)));
    Field pe = range_projection(sys, e);
    for (Eigen::Index y = 0; y < n; ++y)
      m(y, x) = pe[static_cast<std::size_t>(y)] *
                std::sqrt(sys.space().mass(static_cast<std::size_t>(y)));
  }
  return m;
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double largest_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double smallest_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double weak_centered_commutator(const Matrix& t) {
  Matrix a = t * t.adjoint();
  Matrix b = t.adjoint() * t;
  double s = spectral_norm(t);
  return spectral_norm(a * b - b * a) / std::max(1.0, s * s * s * s);
}

double quasinormal_commutator(const Matrix& t) {
  Matrix b = t.adjoint() * t;
  double s = spectral_norm(t);
  return spectral_norm(t * b - b * t) / std::max(1.0, s * s * s);
}

double moduli_commutator(const Matrix& t) {
  Matrix mod = svd_polar(t).modulus;
  Matrix mod_adj = svd_polar(Matrix(t.adjoint())).modulus;
  double s = spectral_norm(t);
  return spectral_norm(mod * mod_adj - mod_adj * mod) / std::max(1.0, s * s);
}

double centered_commutator(const Matrix& t, int depth) {
  if (depth < 1) throw InputError("centered check needs depth >= 1");
  std::vector<Matrix> string;
  Matrix p = t;
  for (int k = 1; k <= depth; ++k) {
    string.push_back(p * p.adjoint());
    string.push_back(p.adjoint() * p);
    p = p * t;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < string.size(); ++i)
    for (std::size_t j = i + 1; j < string.size(); ++j) {
      double scale = std::max(
          1.0, spectral_norm(string[i]) * spectral_norm(string[j]));
      worst = std::max(worst, spectral_norm(string[i] * string[j] -
                                            string[j] * string[i]) /
                                  scale);
    }
  return worst;
}

PolarFactors svd_polar(const Matrix& t, double rel_threshold) {
  Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cut = sv.size() ? sv(0) * rel_threshold : 0.0;
  Matrix sigma = Matrix::Zero(t.rows(), t.cols());
  Matrix sigma_mask = Matrix::Zero(t.rows(), t.cols());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    sigma(i, i) = sv(i);
    sigma_mask(i, i) = sv(i) > cut ? 1.0 : 0.0;  // kill kernel directions
  }
  PolarFactors out;
  out.phase = svd.matrixU() * sigma_mask * svd.matrixV().adjoint();
  out.modulus = svd.matrixV() * sigma * svd.matrixV().adjoint();
  return out;
}

Matrix hermitian_power(const Matrix& hermitian, double exponent) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  Eigen::VectorXd ev = es.eigenvalues();
  Eigen::VectorXd powed(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    double v = std::max(ev(i), 0.0);
    powed(i) = v > 0.0 ? std::pow(v, exponent) : 0.0;
  }
  return es.eigenvectors() * powed.asDiagonal().toDenseMatrix().cast<cplx>() *
         es.eigenvectors().adjoint();
}

Matrix aluthge_matrix(const Matrix& t, double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw InputError("aluthge exponent must lie in (0, 1]");
  PolarFactors pf = svd_polar(t);
  Matrix tsta = t.adjoint() * t;
  return hermitian_power(tsta, alpha / 2.0) * pf.phase *
         hermitian_power(tsta, (1.0 - alpha) / 2.0);
}

SpectralDecomposition spectral_decomposition(const Matrix& hermitian,
                                             double cluster_rel) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  Eigen::VectorXd ev = es.eigenvalues();
  const Matrix& vec = es.eigenvectors();
  double spread = ev.size() ? ev(ev.size() - 1) - ev(0) : 0.0;
  double gap = cluster_rel * std::max(1.0, std::abs(spread));
  SpectralDecomposition out;
  Eigen::Index i = 0;
  while (i < ev.size()) {
    Eigen::Index j = i;
    while (j + 1 < ev.size() && ev(j + 1) - ev(j) <= gap) ++j;
    Matrix proj = Matrix::Zero(hermitian.rows(), hermitian.cols());
    double sum = 0.0;
    for (Eigen::Index k = i; k <= j; ++k) {
      proj += vec.col(k) * vec.col(k).adjoint();
      sum += ev(k);
    }
    out.eigenvalues.push_back(sum / static_cast<double>(j - i + 1));
    out.projectors.push_back(std::move(proj));
    i = j + 1;
  }
  return out;
}

bool Interval::contains(double x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

Interval Interval::at_most(double t) {
  return {-std::numeric_limits<double>::infinity(), t, false, true};
}

Interval Interval::all() {
  return {-std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity(), false, false};
}

bool RealSet::contains(double x) const {
  bool in = false;
  for (const Interval& p : parts)
    if (p.contains(x)) {
      in = true;
      break;
    }
  return complement ? !in : in;
}

Matrix eigenprojector_sum(const SpectralDecomposition& d, const RealSet& s) {
  if (d.projectors.empty()) throw InputError("empty spectral decomposition");
  Matrix out = Matrix::Zero(d.projectors[0].rows(), d.projectors[0].cols());
  for (std::size_t i = 0; i < d.eigenvalues.size(); ++i)
    if (s.contains(d.eigenvalues[i])) out += d.projectors[i];
  return out;
}

Matrix spectral_measure_B(const WcoSystem& sys, const RealSet& s) {
  Density ind(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i)
    ind[i] = s.contains(sys.h(i)) ? 1.0 : 0.0;
  return multiplication_matrix(sys, ind);
}

Matrix spectral_measure_A(const WcoSystem& sys, const RealSet& s) {
  Density ind(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i)
    ind[i] = s.contains(sys.h(sys.phi(i))) ? 1.0 : 0.0;
  Matrix p = projection_matrix(sys);
  Matrix e = multiplication_matrix(sys, ind) * p;
  if (s.contains(0.0))
    e += Matrix::Identity(p.rows(), p.cols()) - p;
  return e;
}

PropertyReport olson_order_check(const WcoSystem& sys, double tol) {
  PropertyReport wc = is_weakly_centered(sys, tol);
  PropertyReport hypo = is_hyponormal(sys, tol);
  if (!wc.verdict || !hypo.verdict)
    return PropertyReport::not_applicable(
        Property::olson_order, tol,
        "needs a weakly centered hyponormal system");
  Matrix t = to_matrix(sys);
  SpectralDecomposition da = spectral_decomposition(t * t.adjoint());
  SpectralDecomposition db = spectral_decomposition(t.adjoint() * t);
  std::vector<double> thresholds;
  for (double v : da.eigenvalues) thresholds.push_back(v);
  for (double v : db.eigenvalues) thresholds.push_back(v);
  for (double u : thresholds) {
    RealSet below = RealSet::of(Interval::at_most(u + 1e-12));
    Matrix gap = eigenprojector_sum(da, below) - eigenprojector_sum(db, below);
    double worst = smallest_eigenvalue((gap + gap.adjoint()) / 2.0);
    if (worst < -tol) {
      std::ostringstream os;
      os << "F_A - F_B has eigenvalue " << worst << " at threshold " << u;
      PropertyReport r = PropertyReport::fail(Property::olson_order, tol, os.str());
      r.witness_values = {u, worst};
      return r;
    }
  }
  return PropertyReport::pass(Property::olson_order, tol);
}

PropertyReport intertwining_check(const WcoSystem& sys, double tol) {
  bool bijective = true;
  for (const auto& fiber : sys.fibers().fibers)
    if (fiber.size() != 1) bijective = false;
  bool carried_everywhere = true;
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (!sys.mu_w_carries(i)) carried_everywhere = false;
  if (!bijective || !carried_everywhere)
    return PropertyReport::not_applicable(
        Property::spectral_intertwining, tol,
        "adjoint kernel is nontrivial (needs w nowhere zero and phi a bijection)");
  Matrix t = to_matrix(sys);
  double scale = std::max(1.0, spectral_norm(t));
  // thresholds straddling every h value hit both sides of each jump
  std::vector<double> cuts{-1.0};
  for (std::size_t i = 0; i < sys.size(); ++i) {
    cuts.push_back(sys.h(i));
    cuts.push_back(sys.h(i) + 1e-6);
    cuts.push_back(sys.h(i) - 1e-6);
  }
  for (double u : cuts) {
    RealSet s = RealSet::of(Interval::at_most(u));
    Matrix lhs = spectral_measure_A(sys, s) * t;
    Matrix rhs = t * spectral_measure_B(sys, s);
    double gap = spectral_norm(lhs - rhs) / scale;
    if (gap > tol) {
      std::ostringstream os;
      os << "E_A(s) T != T E_B(s) at threshold " << u << ": scaled gap " << gap;
      PropertyReport r =
          PropertyReport::fail(Property::spectral_intertwining, tol, os.str());
      r.witness_values = {u, gap};
      return r;
    }
  }
  return PropertyReport::pass(Property::spectral_intertwining, tol);
}

}  // namespace wco
