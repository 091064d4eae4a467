#include <doctest.h>

#include <string>
#include <vector>

#include "helpers.hpp"
#include "wco/demos.hpp"
#include "wco/fuzz.hpp"
#include "wco/invariant.hpp"
#include "wco/oracle.hpp"
#include "wco/properties.hpp"
#include "wco/transforms.hpp"
#include "wco/tree.hpp"

using namespace wco;
using wco_test::make_system;

namespace {

const std::vector<std::string> kCheckNames = {
    "density_vs_commutator", "density_vs_moduli",   "power_family",
    "phase_density",         "phase_quasinormal",   "cohypo_implies_wc",
    "aluthge_match",         "spectral_measures",   "order_and_intertwining",
    "invariant_search",      "radon_nikodym_subsets", "square_density",
    "norm_vs_svd",           "factorization"};

int failure_count(const std::vector<CheckResult>& results) {
  int n = 0;
  for (const CheckResult& r : results)
    if (r.failure) ++n;
  return n;
}

}  // namespace

TEST_CASE("the battery runs every named check in order") {
  auto results = run_checks(build_identity(3), kDefaultTol);
  REQUIRE(results.size() == kCheckNames.size());
  for (std::size_t i = 0; i < results.size(); ++i)
    CHECK(results[i].name == kCheckNames[i]);
  CHECK(failure_count(results) == 0);
}

TEST_CASE("known systems pass the whole battery") {
  CHECK(failure_count(run_checks(build_kernel_pair(), kDefaultTol)) == 0);
  CHECK(failure_count(run_checks(build_backward_slide(4), kDefaultTol)) == 0);
  CHECK(failure_count(run_checks(
            tree_to_wco(build_two_branch(cplx(2.0), 3)), kDefaultTol)) == 0);
  CHECK(failure_count(run_checks(
            tree_to_wco(build_branch_fork(3)), kDefaultTol)) == 0);
}

TEST_CASE("three-atom chain: weakly centered with a non-quasinormal phase") {
  // r <- b <- c with weight zero only on the sink: every fiber carries at
  // most one atom, so the density is trivially fiber-constant, yet the
  // final atom is carried with h = 0 and the phase misses quasinormality
  WcoSystem sys = make_system({{"r", 1.0}, {"b", 1.0}, {"c", 1.0}},
                              {{"r", "r"}, {"b", "r"}, {"c", "b"}},
                              {{"b", 1.0}, {"c", 1.0}});
  CHECK(is_weakly_centered(sys).verdict);
  CHECK(weak_centered_commutator(to_matrix(sys)) <= 1e-12);
  WcoSystem ph = phase_system(sys);
  CHECK_FALSE(is_quasinormal(ph).verdict);
  // this particular phase commutator is exactly one
  CHECK(quasinormal_commutator(to_matrix(ph)) == doctest::Approx(1.0));
  // and the battery confirms the equivalence machinery copes with it
  CHECK(failure_count(run_checks(sys, kDefaultTol)) == 0);
}

TEST_CASE("positive density everywhere gives a quasinormal phase") {
  WcoSystem cyc = make_system(
      {{"a", 1.0}, {"b", 2.0}, {"c", 0.5}},
      {{"a", "b"}, {"b", "c"}, {"c", "a"}},
      {{"a", 1.0}, {"b", cplx(0.0, 2.0)}, {"c", 3.0}});
  for (std::size_t i = 0; i < cyc.size(); ++i) CHECK(cyc.h(i) > 0.0);
  WcoSystem ph = phase_system(cyc);
  CHECK(is_quasinormal(ph).verdict);
  CHECK(quasinormal_commutator(to_matrix(ph)) <= 1e-12);
}

TEST_CASE("random systems are deterministic in seed and index") {
  WcoSystem a = random_system(42, 17, 8);
  WcoSystem b = random_system(42, 17, 8);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.space().id(i) == b.space().id(i));
    CHECK(a.space().mass(i) == b.space().mass(i));
    CHECK(a.phi(i) == b.phi(i));
    CHECK(a.w(i) == b.w(i));
  }
  CHECK_THROWS_AS(random_system(42, 0, 0), InputError);
  CHECK_THROWS_AS(random_system(42, 0, 65), InputError);
}

TEST_CASE("the generator mixes structured shapes into the stream") {
  // merge systems put several carried atoms into one fiber; cycles make
  // every atom carried; diagonals stay put. Look for evidence of each.
  bool saw_shared_fiber = false, saw_identity_map = false,
       saw_all_carried = false, saw_kernel_cut = false;
  for (int index = 0; index < 80; ++index) {
    WcoSystem sys = random_system(42, index, 8);
    bool identity = true, carried = true;
    for (std::size_t i = 0; i < sys.size(); ++i) {
      if (sys.phi(i) != i) identity = false;
      if (!sys.mu_w_carries(i)) carried = false;
    }
    saw_identity_map |= identity && sys.size() > 1;
    saw_all_carried |= carried && sys.size() > 1;
    for (std::size_t z = 0; z < sys.size(); ++z) {
      int in_fiber = 0;
      for (std::size_t y : sys.fiber(z))
        if (sys.mu_w_carries(y)) ++in_fiber;
      if (in_fiber >= 2) saw_shared_fiber = true;
    }
    InvariantSearch found = find_invariant(sys);
    if (found.subspace && found.subspace->kind == SubspaceKind::kernel)
      saw_kernel_cut = true;
  }
  CHECK(saw_shared_fiber);
  CHECK(saw_identity_map);
  CHECK(saw_all_carried);
  CHECK(saw_kernel_cut);
}

TEST_CASE("a short clean run has no failures and full pass counts") {
  FuzzConfig cfg;
  cfg.seed = 42;
  cfg.count = 120;
  cfg.max_atoms = 8;
  FuzzSummary summary = run_fuzz(cfg);
  CHECK(summary.ok());
  CHECK(summary.systems == 120);
  REQUIRE(summary.passes.size() == kCheckNames.size());
  for (std::size_t i = 0; i < summary.passes.size(); ++i) {
    CHECK(summary.passes[i].first == kCheckNames[i]);
    CHECK(summary.passes[i].second == 120);
  }
}

TEST_CASE("an injected sign bug is caught and shrunk to a small witness") {
  FuzzConfig cfg;
  cfg.seed = 42;
  cfg.count = 200;
  cfg.max_atoms = 8;
  cfg.inject_bug = true;
  FuzzSummary summary = run_fuzz(cfg);
  REQUIRE_FALSE(summary.ok());
  for (const FuzzFailure& f : summary.failures) {
    CHECK(f.check == "density_vs_commutator");
    CHECK_FALSE(f.detail.empty());
    // the shrunk system still reproduces the same failure
    bool still_fails = false;
    for (const CheckResult& r : run_checks(f.system, cfg.tol, true))
      if (r.name == f.check && r.failure) still_fails = true;
    CHECK(still_fails);
  }
}

TEST_CASE("shrinking removes unreferenced atoms while the predicate holds") {
  WcoSystem chain = make_system(
      {{"1", 1.0}, {"2", 1.0}, {"3", 1.0}, {"4", 1.0}, {"5", 1.0}},
      {{"1", "1"}, {"2", "1"}, {"3", "2"}, {"4", "3"}, {"5", "4"}},
      {{"2", 1.0}, {"3", 1.0}, {"4", 1.0}, {"5", 1.0}});
  WcoSystem small = shrink_system(
      chain, [](const WcoSystem& s) { return s.size() >= 2; });
  CHECK(small.size() == 2);
  CHECK(small.space().id(0) == "1");
  CHECK(small.space().id(1) == "2");
  // a predicate nothing satisfies leaves the system alone
  WcoSystem same =
      shrink_system(chain, [](const WcoSystem&) { return false; });
  CHECK(same.size() == chain.size());
}

TEST_CASE("fuzzing rejects a negative count") {
  FuzzConfig cfg;
  cfg.count = -1;
  CHECK_THROWS_AS(run_fuzz(cfg), InputError);
}
