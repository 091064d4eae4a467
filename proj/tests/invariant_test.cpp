#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "wco/demos.hpp"
#include "wco/fuzz.hpp"
#include "wco/invariant.hpp"
#include "wco/oracle.hpp"
#include "wco/properties.hpp"

using namespace wco;
using wco_test::make_system;

TEST_CASE("kernel cut for a weakly centered hyponormal system with zeros") {
  WcoSystem sys = build_kernel_pair();
  InvariantSearch found = find_invariant(sys);
  REQUIRE(found.subspace.has_value());
  CHECK(found.subspace->kind == SubspaceKind::kernel);
  REQUIRE(found.subspace->atoms.size() == 1);
  CHECK(sys.space().id(found.subspace->atoms[0]) == "2");
  CHECK_FALSE(found.subspace->threshold.has_value());
  CHECK(verify_invariant(sys, *found.subspace).verdict);
}

TEST_CASE("level cut between the top two density levels") {
  WcoSystem sys = make_system({{"1", 1.0}, {"2", 1.0}},
                              {{"1", "1"}, {"2", "2"}},
                              {{"1", 2.0}, {"2", 1.0}});  // h = (4, 1)
  InvariantSearch found = find_invariant(sys);
  REQUIRE(found.subspace.has_value());
  CHECK(found.subspace->kind == SubspaceKind::level_set);
  REQUIRE(found.subspace->threshold.has_value());
  CHECK(*found.subspace->threshold == doctest::Approx(2.5));
  REQUIRE(found.subspace->atoms.size() == 1);
  CHECK(sys.space().id(found.subspace->atoms[0]) == "1");
  CHECK(verify_invariant(sys, *found.subspace).verdict);
}

TEST_CASE("hypothesis failures are reported instead of guessed around") {
  // weakly centered but not hyponormal: nothing to offer
  WcoSystem merge = make_system(
      {{"root", 2.0}, {"left", 1.0}, {"right", 4.0},
       {"l1", 1.0}, {"l2", 2.0}, {"r1", 1.0}},
      {{"root", "root"}, {"left", "root"}, {"right", "root"},
       {"l1", "left"}, {"l2", "left"}, {"r1", "right"}},
      {{"left", 1.0}, {"right", cplx(0.0, 2.0)}, {"l1", 1.0},
       {"l2", 2.0}, {"r1", cplx(0.0, 6.0)}});
  REQUIRE(is_weakly_centered(merge).verdict);
  REQUIRE_FALSE(is_hyponormal(merge).verdict);
  InvariantSearch found = find_invariant(merge);
  CHECK_FALSE(found.subspace.has_value());
  CHECK(found.note.find("weakly centered hyponormal") != std::string::npos);
}

TEST_CASE("scalar multiples of isometries admit no indicator cut") {
  InvariantSearch found = find_invariant(build_identity(3));
  CHECK_FALSE(found.subspace.has_value());
  CHECK(found.note.find("isometry") != std::string::npos);
  CHECK(found.note.find("scale 1") != std::string::npos);
}

TEST_CASE("the zero system is excluded explicitly") {
  WcoSystem zero = make_system({{"a", 1.0}, {"b", 1.0}},
                               {{"a", "b"}, {"b", "a"}}, {});
  InvariantSearch found = find_invariant(zero);
  CHECK_FALSE(found.subspace.has_value());
  CHECK(found.note.find("operator is zero") != std::string::npos);
}

TEST_CASE("verification rejects degenerate and leaking cuts") {
  WcoSystem sys = build_kernel_pair();
  CHECK(verify_invariant(sys, {SubspaceKind::kernel, {}, std::nullopt})
            .witness == "subspace is zero");
  CHECK(verify_invariant(sys, {SubspaceKind::kernel, {0, 1}, std::nullopt})
            .witness == "subspace is the whole space");
  CHECK_THROWS_AS(
      verify_invariant(sys, {SubspaceKind::kernel, {7}, std::nullopt}),
      InputError);
  // a cycle: the cut at one atom leaks through the other
  WcoSystem cyc = wco_test::two_cycle(1.0, 1.0, cplx(1.0), cplx(1.0));
  PropertyReport r =
      verify_invariant(cyc, {SubspaceKind::level_set, {0}, std::nullopt});
  CHECK_FALSE(r.verdict);
  CHECK(r.witness.find("carries weight into the cut") != std::string::npos);
  REQUIRE(r.witness_atoms.size() == 2);
  CHECK(r.witness_atoms[0] == "2");
  CHECK(r.witness_atoms[1] == "1");
}

TEST_CASE("found cuts verify across the random battery when applicable") {
  int produced = 0;
  for (int index = 0; index < 150; ++index) {
    WcoSystem sys = random_system(79, index, 7);
    InvariantSearch found = find_invariant(sys);
    if (!found.subspace) continue;
    ++produced;
    CAPTURE(index);
    CHECK(verify_invariant(sys, *found.subspace).verdict);
  }
  CHECK(produced > 0);
}

TEST_CASE("backward slide density follows the frozen three-step pattern") {
  WcoSystem sys = build_backward_slide(4);
  CHECK(sys.size() == 18);  // [-3, 14]
  auto h_at = [&](int k) { return sys.h(sys.space().index_of(std::to_string(k))); };
  CHECK(h_at(-3) == doctest::Approx(1.0));
  CHECK(h_at(-2) == doctest::Approx(1.0));
  CHECK(h_at(0) == doctest::Approx(1.0));
  for (int n = 1; n <= 4; ++n) {
    double n4 = std::pow(static_cast<double>(n), 4.0);
    CHECK(h_at(3 * n) == doctest::Approx(n4));
    CHECK(h_at(3 * n + 1) == doctest::Approx(1.0 / n4));
    if (3 * n + 2 < 14) CHECK(h_at(3 * n + 2) == doctest::Approx(1.0));
  }
  CHECK(h_at(14) == 0.0);  // right edge: nothing maps in
  CHECK_THROWS_AS(build_backward_slide(0), InputError);
}

TEST_CASE("backward slide is weakly centered but far from hyponormal") {
  WcoSystem sys = build_backward_slide(6);
  CHECK(is_weakly_centered(sys).verdict);
  PropertyReport hypo = is_hyponormal(sys);
  CHECK_FALSE(hypo.verdict);
  // the matrix referee agrees on both counts
  Matrix t = to_matrix(sys);
  CHECK(weak_centered_commutator(t) <= 1e-9);
  CHECK(smallest_eigenvalue(Matrix(t.adjoint() * t - t * t.adjoint())) <
        -0.5);
}

TEST_CASE("phase scale gap grows like half the square") {
  std::vector<double> r = phase_scale_gap(20);
  REQUIRE(r.size() == 20);
  for (int n = 1; n <= 20; ++n)
    CHECK(r[n - 1] == doctest::Approx(0.5 * n * n).epsilon(1e-12));
  for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] > r[i - 1]);
  CHECK(r[19] / r[0] == doctest::Approx(400.0));
  CHECK_THROWS_AS(phase_scale_gap(1), InputError);
}
