#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dynamics.hpp"

using namespace zcross;

namespace {

std::shared_ptr<const DynSystem> three_cycle() { return DynSystem::finite({1, 2, 0}); }

std::shared_ptr<const DynSystem> addpt_system() {
  return DynSystem::finite({1, 2, 3, 4, 0, 5}, {"0", "1", "2", "3", "4", "*"});
}

SubAlgebra full_algebra(std::shared_ptr<const DynSystem> sys) {
  std::vector<QVec> gens;
  for (size_t x = 0; x < sys->size(); ++x) gens.push_back(sys->delta(x));
  return SubAlgebra::closure(std::move(sys), gens);
}

GaussianRational qtorus_zeta() { return {Rational(3, 5), Rational(4, 5)}; }

SubAlgebra full_window(std::shared_ptr<const DynSystem> rot) {
  QVec z = rot->delta(rot->index_of_degree(1));
  QVec zinv = rot->delta(rot->index_of_degree(-1));
  return SubAlgebra::closure(rot, {rot->constant_one(), z, zinv});
}

std::vector<size_t> random_permutation(std::mt19937_64& rng, size_t n) {
  std::vector<size_t> p(n);
  for (size_t i = 0; i < n; ++i) p[i] = i;
  for (size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
  return p;
}

}  // namespace

TEST_CASE("multiplicative closure") {
  SUBCASE("an idempotent indicator closes onto itself") {
    auto sys = DynSystem::finite({0, 1});
    SubAlgebra a = SubAlgebra::closure(sys, {sys->delta(0)});
    CHECK(a.dim() == 1);
    CHECK(a.contains(sys->delta(0)));
  }
  SUBCASE("the sigma-orbit of an indicator spans everything on a cycle") {
    auto sys = three_cycle();
    SubAlgebra a = SubAlgebra::closure(sys, {sys->delta(0)});
    CHECK(a.dim() == 3);
  }
  SUBCASE("rotation window saturates from {1, z, z^-1}") {
    auto rot = DynSystem::rotation(qtorus_zeta(), 4);
    SubAlgebra a = full_window(rot);
    CHECK(a.dim() == 9);
  }
  SUBCASE("generator z alone runs off the window after reaching z^4") {
    auto rot = DynSystem::rotation(qtorus_zeta(), 4);
    QVec z = rot->delta(rot->index_of_degree(1));
    try {
      SubAlgebra::closure(rot, {z});
      FAIL("expected ClosureExceedsWindow");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ClosureExceedsWindow);
    }
  }
  SUBCASE("zero generators are rejected") {
    auto sys = three_cycle();
    CHECK_THROWS_AS(SubAlgebra::closure(sys, {QVec(3, GaussianRational{})}), Error);
  }
}

TEST_CASE("sep and per sets") {
  SUBCASE("full algebra on a 3-cycle") {
    SubAlgebra a = full_algebra(three_cycle());
    SepPer sp3 = sep_sets(a, 3);
    CHECK(sp3.sep.mask_count() == 0);
    CHECK(sp3.per.mask_count() == 3);
    SepPer sp1 = sep_sets(a, 1);
    CHECK(sp1.sep.mask_count() == 3);
  }
  SUBCASE("n = 0 is rejected") {
    SubAlgebra a = full_algebra(three_cycle());
    CHECK_THROWS_AS(sep_sets(a, 0), Error);
    try {
      sep_sets(a, 0);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ZeroIndex);
    }
  }
  SUBCASE("free rotation separates everything") {
    auto rot = DynSystem::rotation(qtorus_zeta(), 4);
    SubAlgebra a = full_window(rot);
    SepPer sp = sep_sets(a, 5);
    CHECK(sp.per.kind() == PointSet::Kind::Empty);
    CHECK(sp.sep.kind() == PointSet::Kind::All);
  }
  SUBCASE("vanishing-at-a-point algebra excludes the fixed point from Sep") {
    auto sys = addpt_system();
    SubAlgebra a = SubAlgebra::closure(sys, {sys->delta(0)});
    CHECK(a.dim() == 5);
    SepPer sp = sep_sets(a, 1);
    const auto& mask = sp.sep.mask();
    CHECK(sp.sep.mask_count() == 5);
    CHECK_FALSE(mask[5]);  // all h vanish at the added point
  }
  SUBCASE("a mixed-eigenspace basis element excludes its circle roots") {
    // zeta = i, D = 8: z^2 + z^6 = z^2 (1 + z^4) spans a sigma-invariant line
    // (eigenvalue -1); the Sep sets away from the period exclude exactly the
    // circle roots of 1 + z^4.
    auto rot = DynSystem::rotation(GaussianRational::i(), 8);
    QVec h(17, GaussianRational{});
    h[rot->index_of_degree(2)] = GaussianRational(1);
    h[rot->index_of_degree(6)] = GaussianRational(1);
    SubAlgebra a = SubAlgebra::from_basis(rot, {h});
    SepPer sp = sep_sets(a, 1);
    REQUIRE(sp.sep.kind() == PointSet::Kind::AllButRoots);
    GPoly expected{GaussianRational(1), GaussianRational(0), GaussianRational(0),
                   GaussianRational(0), GaussianRational(1)};  // 1 + z^4
    CHECK(sp.sep.poly() == expected);
    CHECK(sp.per.kind() == PointSet::Kind::RootsOnly);
    // cofinite sets are domains of uniqueness for Laurent windows
    CHECK(is_domain_of_uniqueness(a, sp.sep));
    // sigma_tilde^2 fixes the eigenvalue, so Sep^2 is empty
    CHECK(sep_sets(a, 2).sep.kind() == PointSet::Kind::Empty);
  }
  SUBCASE("root-of-unity rotations have no aperiodic points") {
    auto rot = DynSystem::rotation(GaussianRational::i(), 4);
    QVec z = rot->delta(rot->index_of_degree(1));
    QVec zinv = rot->delta(rot->index_of_degree(-1));
    SubAlgebra a = SubAlgebra::closure(rot, {rot->constant_one(), z, zinv});
    CHECK(per_infinity(a).kind() == PointSet::Kind::Empty);
  }
  SUBCASE("invariance and symmetry properties") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 25; ++t) {
      size_t n = 2 + rng() % 4;
      auto sys = DynSystem::finite(random_permutation(rng, n));
      SubAlgebra a = SubAlgebra::closure(sys, {sys->delta(rng() % n)});
      long long order = static_cast<long long>(sys->sigma_order());
      for (long long k = 1; k <= order; ++k) {
        SepPer sp = sep_sets(a, k);
        // complement partition
        CHECK(sp.sep.mask_count() + sp.per.mask_count() == n);
        for (size_t x = 0; x < n; ++x) CHECK(sp.sep.mask()[x] != sp.per.mask()[x]);
        // Sep^n = Sep^{-n}
        CHECK(sep_sets(a, -k).sep == sp.sep);
        // Z-invariance of Sep as a set
        const auto& sigma = sys->sigma();
        for (size_t x = 0; x < n; ++x) CHECK(sp.sep.mask()[x] == sp.sep.mask()[sigma[x]]);
        // reduction modulo the order
        long long reduced = k % order == 0 ? order : k % order;
        CHECK(sep_sets(a, k + order).sep == sep_sets(a, reduced).sep);
      }
    }
  }
  SUBCASE("a separating algebra has point-level Sep sets") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
      size_t n = 2 + rng() % 4;
      auto sys = DynSystem::finite(random_permutation(rng, n));
      SubAlgebra a = full_algebra(sys);
      for (long long k = 1; k <= static_cast<long long>(sys->sigma_order()); ++k)
        CHECK(sep_sets(a, k).sep == sep_sets_points(*sys, k).sep);
    }
  }
}

TEST_CASE("per infinity") {
  SUBCASE("every point of a finite cycle is periodic") {
    SubAlgebra a = full_algebra(three_cycle());
    CHECK(per_infinity(a).mask_count() == 0);
  }
  SUBCASE("free rotation is aperiodic everywhere") {
    auto rot = DynSystem::rotation(qtorus_zeta(), 4);
    CHECK(per_infinity(full_window(rot)).kind() == PointSet::Kind::All);
  }
  SUBCASE("cycle plus fixed point") {
    SubAlgebra a = full_algebra(addpt_system());
    CHECK(per_infinity(a).mask_count() == 0);
  }
  SUBCASE("constants see nothing") {
    auto rot = DynSystem::rotation(qtorus_zeta(), 4);
    SubAlgebra consts = SubAlgebra::closure(rot, {rot->constant_one()});
    CHECK(per_infinity(consts).kind() == PointSet::Kind::Empty);
  }
}

TEST_CASE("domains of uniqueness") {
  auto sys = addpt_system();
  SubAlgebra vanishing = SubAlgebra::closure(sys, {sys->delta(0)});
  SUBCASE("the whole space is a domain of uniqueness") {
    CHECK(is_domain_of_uniqueness(vanishing, PointSet::finite_mask(std::vector<bool>(6, true))));
  }
  SUBCASE("the empty set is not") {
    CHECK_FALSE(is_domain_of_uniqueness(vanishing, PointSet::finite_mask(std::vector<bool>(6, false))));
    CHECK_FALSE(is_domain_of_uniqueness(vanishing, PointSet::empty()));
  }
  SUBCASE("the 5-cycle is a domain of uniqueness for the vanishing algebra") {
    std::vector<bool> cycle{true, true, true, true, true, false};
    CHECK(is_domain_of_uniqueness(vanishing, PointSet::finite_mask(cycle)));
  }
  SUBCASE("a too-small set is not") {
    std::vector<bool> one_point{true, false, false, false, false, false};
    CHECK_FALSE(is_domain_of_uniqueness(vanishing, PointSet::finite_mask(one_point)));
  }
  SUBCASE("rotation symbolic sets") {
    auto rot = DynSystem::rotation(qtorus_zeta(), 4);
    SubAlgebra a = full_window(rot);
    CHECK(is_domain_of_uniqueness(a, PointSet::all()));
    CHECK_FALSE(is_domain_of_uniqueness(a, PointSet::empty()));
    // cofinite sets are domains of uniqueness for Laurent windows
    GPoly exclude{GaussianRational(-1), GaussianRational(1)};  // z - 1
    CHECK(is_domain_of_uniqueness(a, PointSet::all_but_roots(exclude)));
    // the single point z = 1 is not: z - 1 vanishes there
    CHECK_FALSE(is_domain_of_uniqueness(a, PointSet::roots_only(exclude)));
    // the pair {1, -1} is not either: z^2 - 1 vanishes on both
    GPoly pair{GaussianRational(-1), GaussianRational(0), GaussianRational(1)};
    CHECK_FALSE(is_domain_of_uniqueness(a, PointSet::roots_only(pair)));
    // but it is for the constants-only algebra, which has no such function
    SubAlgebra consts = SubAlgebra::closure(a.system_ptr(), {a.system().constant_one()});
    CHECK(is_domain_of_uniqueness(consts, PointSet::roots_only(pair)));
  }
}

TEST_CASE("cycle decomposition") {
  SUBCASE("identity on three points") {
    CycleDecomposition cd = cycle_decomposition(*DynSystem::finite({0, 1, 2}));
    CHECK(cd.cycles.size() == 3);
    CHECK(cd.order == 1);
  }
  SUBCASE("a 3-cycle") {
    CycleDecomposition cd = cycle_decomposition(*three_cycle());
    CHECK(cd.cycles.size() == 1);
    CHECK(cd.order == 3);
  }
  SUBCASE("shift by two on Z_6 splits into two 3-cycles") {
    CycleDecomposition cd = cycle_decomposition(*DynSystem::finite({2, 3, 4, 5, 0, 1}));
    CHECK(cd.cycles.size() == 2);
    CHECK(cd.cycles[0] == std::vector<size_t>{0, 2, 4});
    CHECK(cd.cycles[1] == std::vector<size_t>{1, 3, 5});
    CHECK(cd.order == 3);
  }
  SUBCASE("rotation systems are the wrong variant") {
    auto rot = DynSystem::rotation(qtorus_zeta(), 2);
    CHECK_THROWS_AS(cycle_decomposition(*rot), Error);
  }
}

TEST_CASE("invariance checking") {
  SUBCASE("constants are invariant under anything") {
    auto sys = three_cycle();
    CHECK(check_invariance(SubAlgebra::closure(sys, {sys->constant_one()})));
  }
  SUBCASE("a non-invariant span is detected") {
    auto sys = DynSystem::finite({1, 0});
    SubAlgebra bare = SubAlgebra::from_basis(sys, {sys->delta(0)}, /*validate=*/false);
    CHECK_FALSE(check_invariance(bare));
    CHECK_THROWS_AS(SubAlgebra::from_basis(sys, {sys->delta(0)}), Error);
  }
  SUBCASE("the vanishing-at-a-point algebra is invariant") {
    auto sys = addpt_system();
    CHECK(check_invariance(SubAlgebra::closure(sys, {sys->delta(0)})));
  }
}

TEST_CASE("algebra units") {
  SUBCASE("full algebra has the constant one") {
    auto sys = three_cycle();
    SubAlgebra a = full_algebra(sys);
    auto unit = a.unit();
    REQUIRE(unit.has_value());
    CHECK(*unit == sys->constant_one());
  }
  SUBCASE("the vanishing algebra has the cycle indicator as unit") {
    auto sys = addpt_system();
    SubAlgebra a = SubAlgebra::closure(sys, {sys->delta(0)});
    auto unit = a.unit();
    REQUIRE(unit.has_value());
    QVec expected(6, GaussianRational(1));
    expected[5] = GaussianRational{};
    CHECK(*unit == expected);
  }
  SUBCASE("a non-unital span") {
    // span{z} inside window 4 with products tolerated off-window has no unit
    auto rot = DynSystem::rotation(qtorus_zeta(), 4);
    QVec z2 = rot->delta(rot->index_of_degree(2));
    QVec z3 = rot->delta(rot->index_of_degree(3));
    SubAlgebra a = SubAlgebra::from_basis(rot, {z2, z3}, /*validate=*/false);
    CHECK_FALSE(a.unit().has_value());
  }
}
