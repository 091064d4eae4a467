#include "wco/gaussian.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace wco {

double SeriesDensity::eval(double z) const {
  double acc = 0.0;
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * z + coeffs[j];
  return acc;
}

SeriesDensity SeriesDensity::make(std::vector<double> coeffs, bool entire) {
  if (coeffs.empty()) throw InputError("density profile needs coefficients");
  bool grows = false;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] < 0.0 || !std::isfinite(coeffs[j]))
      throw InputError("density profile coefficients must be nonnegative");
    if (j >= 1 && coeffs[j] > 0.0) grows = true;
  }
  if (!grows)
    throw InputError("density profile must have a positive higher coefficient");
  return {std::move(coeffs), entire};
}

LinearSystem::LinearSystem(Eigen::MatrixXd map, Eigen::MatrixXd gram)
    : map_(std::move(map)), gram_(std::move(gram)) {
  if (map_.rows() != map_.cols() || gram_.rows() != gram_.cols() ||
      map_.rows() != gram_.rows() || map_.rows() == 0)
    throw InputError("map and inner product must be square of equal size");
  if (!gram_.isApprox(gram_.transpose(), 1e-12))
    throw InputError("inner product matrix must be symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(gram_);
  if (llt.info() != Eigen::Success)
    throw InputError("inner product matrix must be positive definite");
  chol_ = llt.matrixL();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(map_);
  if (!lu.isInvertible()) throw InputError("the map must be invertible");
  inv_ = lu.inverse();
  abs_det_ = std::abs(lu.determinant());
}

LinearSystem::LinearSystem(int dim, double scale)
    : LinearSystem(scale * Eigen::MatrixXd::Identity(dim, dim),
                   Eigen::MatrixXd::Identity(dim, dim)) {}

double LinearSystem::squared_norm(const Eigen::VectorXd& x) const {
  return x.dot(gram_ * x);
}

double LinearSystem::inverse_operator_norm() const {
  Eigen::MatrixXd conj =
      chol_.transpose() * inv_ *
      chol_.transpose().fullPivLu().inverse();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(conj);
  return svd.singularValues()(0);
}

double composition_density(const LinearSystem& sys, const SeriesDensity& rho,
                           const Eigen::VectorXd& x) {
  double num = rho.eval(sys.squared_norm(sys.inverse() * x));
  double den = rho.eval(sys.squared_norm(x));
  if (den == 0.0)  // only at x = 0 with a vanishing constant coefficient
    throw InputError("the density vanishes at the requested point");
  return num / (sys.abs_det() * den);
}

PropertyReport is_bounded(const LinearSystem& sys, const SeriesDensity& rho) {
  if (!rho.entire)
    return PropertyReport::pass(Property::bounded, 0.0);
  double nrm = sys.inverse_operator_norm();
  if (nrm <= 1.0 + 1e-12) {
    PropertyReport r = PropertyReport::pass(Property::bounded, 0.0);
    r.witness_values = {nrm};
    return r;
  }
  std::ostringstream os;
  os << "inverse map has norm " << nrm
     << " > 1, and the profile grows faster than any polynomial";
  PropertyReport r = PropertyReport::fail(Property::bounded, 0.0, os.str());
  r.witness_values = {nrm};
  return r;
}

PropertyReport weakly_centered_flag(const LinearSystem& sys,
                                    const SeriesDensity& rho) {
  PropertyReport r = PropertyReport::pass(Property::weakly_centered, 0.0);
  std::ostringstream os;
  os << "phi is invertible, so conditioning on phi-preimages changes "
        "nothing and the operator is weakly centered; |phi^-1| = "
     << sys.inverse_operator_norm() << ", "
     << (is_bounded(sys, rho).verdict ? "bounded" : "unbounded");
  r.witness = os.str();
  r.witness_values = {sys.inverse_operator_norm()};
  return r;
}

std::vector<Eigen::VectorXd> sample_points(int dim, int samples,
                                           std::uint64_t seed,
                                           double half_width) {
  if (dim < 1) throw InputError("need at least one variable");
  if (samples < 1) throw InputError("need at least one sample point");
  // additive lattice directions from the root of x^(dim+1) = x + 1
  double root = 1.5;
  for (int it = 0; it < 64; ++it)
    root = std::pow(1.0 + root, 1.0 / (dim + 1));
  std::vector<double> step(dim), at(dim);
  for (int j = 0; j < dim; ++j) step[j] = std::pow(1.0 / root, j + 1);
  // splitmix64 for the starting offsets
  std::uint64_t s = seed;
  for (int j = 0; j < dim; ++j) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    at[j] = static_cast<double>(z >> 11) * 0x1.0p-53;
  }
  std::vector<Eigen::VectorXd> out;
  out.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    Eigen::VectorXd x(dim);
    for (int j = 0; j < dim; ++j) {
      at[j] += step[j];
      at[j] -= std::floor(at[j]);
      x(j) = (2.0 * at[j] - 1.0) * half_width;
    }
    out.push_back(std::move(x));
  }
  return out;
}

PropertyReport log_convex_along_map(const LinearSystem& sys,
                                    const SeriesDensity& rho, int samples,
                                    std::uint64_t seed, double box_half_width,
                                    double tol) {
  auto points = sample_points(sys.dim(), samples, seed, box_half_width);
  double worst = std::numeric_limits<double>::infinity();
  Eigen::VectorXd worst_at;
  for (const auto& x : points) {
    double lhs = rho.eval(sys.squared_norm(x));
    lhs *= lhs;
    double rhs = rho.eval(sys.squared_norm(sys.inverse() * x)) *
                 rho.eval(sys.squared_norm(sys.map() * x));
    double margin = (rhs - lhs) / std::max({1.0, lhs, rhs});
    if (margin < worst) {
      worst = margin;
      worst_at = x;
    }
  }
  PropertyReport r = worst >= -tol
                         ? PropertyReport::pass(Property::log_convex_density, tol)
                         : PropertyReport::fail(Property::log_convex_density,
                                                tol, "");
  r.witness_values = {worst};
  for (int j = 0; j < worst_at.size(); ++j)
    r.witness_values.push_back(worst_at(j));
  if (!r.verdict) {
    std::ostringstream os;
    os << "the squared profile exceeds the two-sided product at "
       << worst_at.transpose() << " (scaled margin " << worst << ")";
    r.witness = os.str();
  }
  return r;
}

double affine_profile_gap(double a0, double a1, double alpha, double t) {
  if (alpha == 0.0) throw InputError("the scale must be nonzero");
  SeriesDensity rho = SeriesDensity::make({a0, a1});
  double a2 = alpha * alpha;
  return rho.eval(t / a2) * rho.eval(a2 * t) - rho.eval(t) * rho.eval(t);
}

}  // namespace wco
