#include "wco/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "wco/invariant.hpp"
#include "wco/oracle.hpp"
#include "wco/properties.hpp"
#include "wco/transforms.hpp"

namespace wco {

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Draw {
  std::mt19937_64 eng;
  explicit Draw(std::uint64_t s) : eng(s) {}
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng); }
  double log_uniform(double lo, double hi) {
    return std::exp(std::uniform_real_distribution<double>(std::log(lo),
                                                           std::log(hi))(eng));
  }
  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng);
  }
  cplx weight() {
    if (unit() < 0.25) return 0.0;
    double mag = log_uniform(0.3, 3.0);
    if (unit() < 0.5) return mag;
    double th = unit() * 2.0 * M_PI;
    return cplx(mag * std::cos(th), mag * std::sin(th));
  }
};

std::vector<Atom> random_atoms(Draw& d, std::size_t n) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < n; ++i)
    atoms.push_back({"a" + std::to_string(i + 1), d.log_uniform(0.1, 10.0)});
  return atoms;
}

WcoSystem generic_system(Draw& d, std::size_t n) {
  std::vector<Atom> atoms = random_atoms(d, n);
  std::vector<std::size_t> phi(n);
  Field w(n);
  for (std::size_t i = 0; i < n; ++i) {
    phi[i] = d.below(n);
    w[i] = d.weight();
  }
  return WcoSystem(MeasureSpace(std::move(atoms)), std::move(phi),
                   std::move(w));
}

// Weighted permutation with the density constant along each cycle: weakly
// centered, hyponormal, everything carried. Optionally one extra silent
// atom (weight zero) hanging off the permutation, which opens the kernel
// branch of the invariant search.
WcoSystem cycle_system(Draw& d, std::size_t n) {
  std::vector<Atom> atoms = random_atoms(d, n);
  std::vector<std::size_t> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  std::shuffle(phi.begin(), phi.end(), d.eng);
  std::vector<std::size_t> cycle_of(n, n);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cycle_of[i] != n) continue;
    for (std::size_t j = i; cycle_of[j] == n; j = phi[j]) cycle_of[j] = cycles;
    ++cycles;
  }
  std::vector<double> level(cycles);
  for (double& c : level) c = d.log_uniform(0.2, 5.0);
  Field w(n);
  for (std::size_t y = 0; y < n; ++y) {
    double mag = std::sqrt(level[cycle_of[y]] * atoms[phi[y]].mass /
                           atoms[y].mass);
    double th = d.unit() * 2.0 * M_PI;
    w[y] = cplx(mag * std::cos(th), mag * std::sin(th));
  }
  bool silent = d.unit() < 1.0 / 3.0;
  if (silent) {
    atoms.push_back({"a" + std::to_string(n + 1), d.log_uniform(0.1, 10.0)});
    phi.push_back(d.below(n));
    w.push_back(0.0);
  }
  return WcoSystem(MeasureSpace(std::move(atoms)), std::move(phi),
                   std::move(w));
}

WcoSystem diagonal_system(Draw& d, std::size_t n) {
  std::vector<Atom> atoms = random_atoms(d, n);
  std::vector<std::size_t> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  Field w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = d.weight();
  return WcoSystem(MeasureSpace(std::move(atoms)), std::move(phi),
                   std::move(w));
}

// Two branches merging into a silent root, leaves feeding the branch heads.
// The leaf weights on each branch are rescaled so both heads see the same
// density, giving a fiber with several carried atoms whose constancy is not
// vacuous (most weights are usually rescaled away from it by the generic
// mode).  A third of the time the rescale is skipped on one branch, which
// breaks constancy on the merge fiber.
WcoSystem merge_system(Draw& d, std::size_t n) {
  if (n < 5) return cycle_system(d, n);
  std::vector<Atom> atoms = random_atoms(d, n);
  std::vector<std::size_t> phi(n, 0);
  Field w(n, 0.0);
  for (std::size_t b : {std::size_t{1}, std::size_t{2}}) {
    phi[b] = 0;
    double mag = d.log_uniform(0.3, 3.0);
    double th = d.unit() * 2.0 * M_PI;
    w[b] = cplx(mag * std::cos(th), mag * std::sin(th));
  }
  double level = d.log_uniform(0.2, 5.0);
  bool lopsided = d.unit() < 1.0 / 3.0;
  for (std::size_t b : {std::size_t{1}, std::size_t{2}}) {
    double raw = 0.0;
    for (std::size_t c = 3 + (b - 1); c < n; c += 2) {
      phi[c] = b;
      w[c] = d.log_uniform(0.3, 3.0);
      raw += std::norm(w[c]) * atoms[c].mass / atoms[b].mass;
    }
    if (raw == 0.0) continue;
    double target = (lopsided && b == 2) ? level * d.log_uniform(2.0, 8.0)
                                         : level;
    for (std::size_t c = 3 + (b - 1); c < n; c += 2)
      w[c] *= std::sqrt(target / raw);
  }
  return WcoSystem(MeasureSpace(std::move(atoms)), std::move(phi),
                   std::move(w));
}

// Fiber-constancy of an arbitrary density over the carried fiber parts;
// the closed-form side of the first battery check, parameterized so the
// self-test can feed it a corrupted density.
bool carried_fiber_constant(const WcoSystem& sys, const Density& p,
                            double tol) {
  for (std::size_t z = 0; z < sys.size(); ++z) {
    std::size_t ref = sys.size();
    for (std::size_t y : sys.fiber(z)) {
      if (!sys.mu_w_carries(y)) continue;
      if (ref == sys.size())
        ref = y;
      else if (!close(p[y], p[ref], tol))
        return false;
    }
  }
  return true;
}

Density corrupted_h(const WcoSystem& sys) {
  Density bad = sys.h_field();
  for (std::size_t z = 0; z < sys.size(); ++z) {
    // sign bug: the first contribution to each fiber mass enters negated
    for (std::size_t y : sys.fiber(z)) {
      if (sys.mu_w(y) > 0.0) {
        bad[z] -= 2.0 * sys.mu_w(y) / sys.space().mass(z);
        break;
      }
    }
  }
  return bad;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

using Check = std::pair<const char*,
                        std::function<std::optional<std::string>(
                            const WcoSystem&, const Matrix&, double, bool)>>;

std::optional<std::string> check_density_vs_commutator(const WcoSystem& sys,
                                                       const Matrix& t,
                                                       double tol,
                                                       bool inject_bug) {
  bool closed = inject_bug
                    ? carried_fiber_constant(sys, corrupted_h(sys), tol)
                    : is_weakly_centered(sys, tol).verdict;
  double gap = weak_centered_commutator(t);
  if (closed != (gap <= tol))
    return "closed form says " + std::string(closed ? "constant" : "varying") +
           " but the four-factor commutator is " + fmt(gap);
  return std::nullopt;
}

std::optional<std::string> check_density_vs_moduli(const WcoSystem& sys,
                                                   const Matrix& t, double tol,
                                                   bool) {
  bool closed = is_weakly_centered(sys, tol).verdict;
  double gap = moduli_commutator(t);
  if (closed != (gap <= tol))
    return "closed form disagrees with the moduli commutator " + fmt(gap);
  return std::nullopt;
}

std::optional<std::string> check_power_family(const WcoSystem& sys,
                                              const Matrix&, double tol,
                                              bool) {
  bool base = is_weakly_centered(sys, tol).verdict;
  for (double alpha : {0.5, 2.0, -1.0}) {
    PropertyReport r = is_weakly_centered_alpha(sys, alpha, tol);
    if (!r.applicable) continue;  // negative power undefined on {h=0}
    if (r.verdict != base)
      return "power " + fmt(alpha) + " verdict " +
             (r.verdict ? "true" : "false") + " but base verdict " +
             (base ? "true" : "false");
  }
  return std::nullopt;
}

std::optional<std::string> check_phase_density(const WcoSystem& sys,
                                               const Matrix&, double, bool) {
  WcoSystem ph = phase_system(sys);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    double want = sys.h(i) > 0.0 ? 1.0 : 0.0;
    if (std::abs(ph.h(i) - want) > 1e-12)
      return "phase density at '" + sys.space().id(i) + "' is " +
             fmt(ph.h(i)) + ", expected " + fmt(want);
  }
  return std::nullopt;
}

// The phase is quasinormal exactly when the density is positive at every
// carried atom.  Sufficiency needs no centering assumption; necessity holds
// because the phase density pulled back along the map is identically one on
// carried atoms.  Weak centering by itself does not suffice: a truncated
// backward shift is weakly centered (all fibers are singletons) yet carries
// an atom outside the range of the map, where the density vanishes and the
// phase fails quasinormality.  So the check fuzzes the full equivalence.
std::optional<std::string> check_phase_quasinormal(const WcoSystem& sys,
                                                   const Matrix&, double tol,
                                                   bool) {
  bool positive = true;
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (sys.mu_w_carries(i) && sys.h(i) <= 0.0) positive = false;
  WcoSystem ph = phase_system(sys);
  bool closed = is_quasinormal(ph, tol).verdict;
  bool matrix = quasinormal_commutator(to_matrix(ph)) <= tol;
  if (closed != matrix)
    return std::string("phase closed form says ") +
           (closed ? "quasinormal" : "not quasinormal") +
           " but the matrix commutator disagrees";
  if (closed != positive)
    return std::string("phase ") +
           (closed ? "quasinormal despite a null-density carried atom"
                   : "not quasinormal despite a positive density");
  return std::nullopt;
}

std::optional<std::string> check_cohypo_implies(const WcoSystem& sys,
                                                const Matrix& t, double tol,
                                                bool) {
  double scale = std::max(1.0, spectral_norm(t));
  Matrix gap = t.adjoint() * t - t * t.adjoint();
  if (largest_eigenvalue(gap) / (scale * scale) > tol) return std::nullopt;
  if (!is_weakly_centered(sys, tol).verdict)
    return "matrix is cohyponormal but the density is not fiber-constant";
  return std::nullopt;
}

std::optional<std::string> check_aluthge(const WcoSystem& sys, const Matrix& t,
                                         double, bool) {
  double scale = std::max(1.0, spectral_norm(t));
  for (double alpha : {0.25, 0.5, 1.0}) {
    Matrix via_weights = to_matrix(aluthge_system(sys, alpha));
    Matrix via_svd = aluthge_matrix(t, alpha);
    double gap = spectral_norm(via_weights - via_svd) / scale;
    if (gap > 1e-8)
      return "transform mismatch " + fmt(gap) + " at exponent " + fmt(alpha);
  }
  return std::nullopt;
}

std::optional<std::string> check_spectral_measures(const WcoSystem& sys,
                                                   const Matrix& t, double tol,
                                                   bool) {
  Matrix a = t * t.adjoint();
  Matrix b = t.adjoint() * t;
  SpectralDecomposition da = spectral_decomposition(a);
  SpectralDecomposition db = spectral_decomposition(b);
  // Set boundaries are buffered 1e-7 away from the spectrum: the eigensolver
  // returns the exact eigenvalues only up to roundoff, so a boundary sitting
  // on an eigenvalue (0 in particular) would classify it by noise.
  std::vector<RealSet> sets;
  sets.push_back(RealSet::of(Interval{-1e-7, 1e-7, true, true}));
  sets.push_back({{Interval{-1e-7, 1e-7, true, true}}, true});  // complement
  sets.push_back(RealSet::of(Interval::all()));
  for (std::size_t i = 0; i < sys.size(); ++i) {
    sets.push_back(RealSet::of(Interval::at_most(sys.h(i) + 1e-7)));
    sets.push_back(RealSet::of(Interval::at_most(sys.h(i) - 1e-7)));
    sets.push_back(RealSet::of(Interval::at_most(sys.h(sys.phi(i)) + 1e-7)));
  }
  for (const RealSet& s : sets) {
    double gap_b =
        spectral_norm(spectral_measure_B(sys, s) - eigenprojector_sum(db, s));
    if (gap_b > tol) return "B-measure mismatch " + fmt(gap_b);
    double gap_a =
        spectral_norm(spectral_measure_A(sys, s) - eigenprojector_sum(da, s));
    if (gap_a > tol) return "A-measure mismatch " + fmt(gap_a);
  }
  return std::nullopt;
}

std::optional<std::string> check_order_and_intertwining(const WcoSystem& sys,
                                                        const Matrix&,
                                                        double tol, bool) {
  PropertyReport olson = olson_order_check(sys, tol);
  if (olson.applicable && !olson.verdict)
    return "distribution order failed: " + olson.witness;
  PropertyReport inter = intertwining_check(sys, tol);
  if (inter.applicable && !inter.verdict)
    return "intertwining failed: " + inter.witness;
  return std::nullopt;
}

std::optional<std::string> check_invariant_search(const WcoSystem& sys,
                                                  const Matrix&, double tol,
                                                  bool) {
  InvariantSearch found = find_invariant(sys, tol);
  if (found.subspace) {
    PropertyReport ver = verify_invariant(sys, *found.subspace, 1e-10);
    if (!ver.verdict)
      return "returned subspace is not invariant: " + ver.witness;
    return std::nullopt;
  }
  if (found.note.find("isometry") != std::string::npos &&
      !is_isometry_multiple(sys, tol).verdict)
    return "isometry note on a system with nonconstant density";
  return std::nullopt;
}

std::optional<std::string> check_radon_nikodym_subsets(const WcoSystem& sys,
                                                       const Matrix&, double,
                                                       bool) {
  const std::size_t n = sys.size();
  std::vector<std::vector<std::size_t>> subsets;
  if (n <= 12) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(i);
      subsets.push_back(std::move(sub));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) subsets.push_back({i});
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    subsets.push_back(std::move(all));
  }
  for (const auto& sub : subsets) {
    double direct =
        push_forward_measure(sys.space(), sys.phi_map(), sys.weight(), sub);
    double via_h = 0.0;
    for (std::size_t x : sub) via_h += sys.h(x) * sys.space().mass(x);
    if (std::abs(direct - via_h) >
        1e-10 * std::max({1.0, direct, via_h}))
      return "preimage mass " + fmt(direct) + " vs density sum " + fmt(via_h);
  }
  return std::nullopt;
}

std::optional<std::string> check_square_density(const WcoSystem& sys,
                                                const Matrix&, double tol,
                                                bool) {
  WcoSystem sq = compose_square(sys);
  Density eh = conditional_expectation(sys, sys.h_field());
  for (std::size_t y = 0; y < sys.size(); ++y) {
    if (!sys.mu_w_carries(y)) continue;
    double lhs = sq.h(sys.phi(y));
    double rhs = eh[y] * sys.h(sys.phi(y));
    if (std::abs(lhs - rhs) > 1e-12 * std::max({1.0, lhs, rhs}))
      return "squared density at '" + sys.space().id(y) + "': " + fmt(lhs) +
             " vs " + fmt(rhs);
  }
  if (is_weakly_centered(sys, tol).verdict &&
      is_hyponormal(sys, tol).verdict) {
    for (std::size_t y = 0; y < sys.size(); ++y) {
      if (!sys.mu_w_carries(y)) continue;
      double lhs = sq.h(sys.phi(y));
      double rhs = sys.h(y) * sys.h(y);
      if (lhs > rhs + tol * std::max({1.0, lhs, rhs}))
        return "squared density exceeds h^2 at '" + sys.space().id(y) + "'";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_norm(const WcoSystem& sys, const Matrix& t,
                                      double tol, bool) {
  double via_h = operator_norm(sys);
  double via_svd = spectral_norm(t);
  if (std::abs(via_h - via_svd) > tol * std::max({1.0, via_h, via_svd}))
    return "norm " + fmt(via_h) + " vs largest singular value " + fmt(via_svd);
  return std::nullopt;
}

std::optional<std::string> check_factorization(const WcoSystem& sys,
                                               const Matrix& t, double tol,
                                               bool) {
  Matrix p = projection_matrix(sys);
  double idem = spectral_norm(p * p - p);
  double herm = spectral_norm(Matrix(p - p.adjoint()));
  if (idem > tol || herm > tol)
    return "range projection not an orthogonal projection (" + fmt(idem) +
           ", " + fmt(herm) + ")";
  Density h_pull(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) h_pull[i] = sys.h(sys.phi(i));
  double scale = std::max(1.0, spectral_norm(t));
  double gap_a = spectral_norm(t * t.adjoint() -
                               multiplication_matrix(sys, h_pull) * p) /
                 (scale * scale);
  if (gap_a > tol) return "TT* differs from the multiplier form: " + fmt(gap_a);
  Matrix b = t.adjoint() * t;
  Matrix diag_h = multiplication_matrix(sys, sys.h_field());
  double gap_b = spectral_norm(b - diag_h) / (scale * scale);
  if (gap_b > 1e-12) return "T*T is not the density multiplier: " + fmt(gap_b);
  Matrix u = to_matrix(phase_system(sys));
  Density sqrt_h(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i)
    sqrt_h[i] = std::sqrt(sys.h(i));
  double gap_polar =
      spectral_norm(t - u * multiplication_matrix(sys, sqrt_h)) / scale;
  if (gap_polar > tol)
    return "phase times modulus misses the operator: " + fmt(gap_polar);
  Matrix mod = svd_polar(t).modulus;
  double gap_mod =
      spectral_norm(mod - multiplication_matrix(sys, sqrt_h)) / scale;
  if (gap_mod > tol)
    return "svd modulus differs from the density multiplier: " + fmt(gap_mod);
  return std::nullopt;
}

const std::vector<Check>& check_list() {
  static const std::vector<Check> checks = {
      {"density_vs_commutator", check_density_vs_commutator},
      {"density_vs_moduli", check_density_vs_moduli},
      {"power_family", check_power_family},
      {"phase_density", check_phase_density},
      {"phase_quasinormal", check_phase_quasinormal},
      {"cohypo_implies_wc", check_cohypo_implies},
      {"aluthge_match", check_aluthge},
      {"spectral_measures", check_spectral_measures},
      {"order_and_intertwining", check_order_and_intertwining},
      {"invariant_search", check_invariant_search},
      {"radon_nikodym_subsets", check_radon_nikodym_subsets},
      {"square_density", check_square_density},
      {"norm_vs_svd", check_norm},
      {"factorization", check_factorization},
  };
  return checks;
}

}  // namespace

std::vector<CheckResult> run_checks(const WcoSystem& sys, double tol,
                                    bool inject_bug) {
  Matrix t = to_matrix(sys);
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : check_list())
    out.push_back({name, fn(sys, t, tol, inject_bug)});
  return out;
}

WcoSystem random_system(std::uint64_t seed, int index, int max_atoms) {
  if (max_atoms < 1 || max_atoms > 64)
    throw InputError("max_atoms must lie in [1, 64]");
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  Draw d(splitmix(s));
  std::size_t n = 1 + d.below(static_cast<std::size_t>(max_atoms));
  switch (index % 4) {
    case 1: return merge_system(d, n);
    case 2: return cycle_system(d, n);
    case 3: return diagonal_system(d, n);
    default: return generic_system(d, n);
  }
}

WcoSystem shrink_system(
    const WcoSystem& sys,
    const std::function<bool(const WcoSystem&)>& still_fails) {
  WcoSystem cur = sys;
  bool progress = true;
  while (progress && cur.size() > 1) {
    progress = false;
    for (std::size_t drop = 0; drop < cur.size(); ++drop) {
      bool leaf = true;  // nothing else maps into it
      for (std::size_t y : cur.fiber(drop))
        if (y != drop) leaf = false;
      if (!leaf) continue;
      std::vector<Atom> atoms;
      std::vector<std::size_t> phi;
      Field w;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (i == drop) continue;
        atoms.push_back(cur.space().atoms()[i]);
        std::size_t target = cur.phi(i);
        phi.push_back(target > drop ? target - 1 : target);
        w.push_back(cur.w(i));
      }
      WcoSystem smaller(MeasureSpace(std::move(atoms)), std::move(phi),
                        std::move(w));
      if (still_fails(smaller)) {
        cur = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

FuzzSummary run_fuzz(const FuzzConfig& config) {
  if (config.count < 0) throw InputError("count must be nonnegative");
  FuzzSummary summary;
  for (const auto& [name, fn] : check_list()) summary.passes.push_back({name, 0});
  for (int i = 0; i < config.count; ++i) {
    WcoSystem sys = random_system(config.seed, i, config.max_atoms);
    auto results = run_checks(sys, config.tol, config.inject_bug);
    ++summary.systems;
    for (std::size_t c = 0; c < results.size(); ++c) {
      if (!results[c].failure) {
        ++summary.passes[c].second;
        continue;
      }
      std::string name = results[c].name;
      auto fails_same = [&](const WcoSystem& candidate) {
        auto rs = run_checks(candidate, config.tol, config.inject_bug);
        for (const auto& r : rs)
          if (r.name == name && r.failure) return true;
        return false;
      };
      WcoSystem shrunk = shrink_system(sys, fails_same);
      summary.failures.push_back(
          {i, std::move(name), *results[c].failure, std::move(shrunk)});
    }
  }
  return summary;
}

}  // namespace wco
