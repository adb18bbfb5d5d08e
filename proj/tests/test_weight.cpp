#include "doctest.h"
#include "helpers.hpp"
#include "lmhs/centralizer.hpp"
#include "lmhs/errors.hpp"
#include "lmhs/polarization.hpp"
#include "support/instances.hpp"

using namespace lmhs;
using namespace lmhs::testing;

TEST_CASE("W(N) small cases") {
  IncreasingFiltration w0 = monodromy_weight_filtration(GMatrix(3, 3), 2);
  CHECK(w0.at(1).is_zero());
  CHECK(w0.at(2).is_full());

  GMatrix n = GMatrix::unit(2, 1, 0);
  IncreasingFiltration w = monodromy_weight_filtration(n, 1);
  CHECK(w.at(-1).is_zero());
  CHECK(w.at(0) == Subspace::span(e(2, 1)));
  CHECK(w.at(1) == Subspace::span(e(2, 1)));
  CHECK(w.at(2).is_full());
  CHECK(verify_weight_axioms(n, w, 1).ok);
  CHECK_FALSE(verify_weight_axioms(n, w0.at(0).is_zero() ? monodromy_weight_filtration(GMatrix(2, 2), 1) : w, 1).ok);

  CHECK(monodromy_weight_filtration(n * GScalar(Rational(5, 3)), 1) == w);
  CHECK_THROWS_AS(monodromy_weight_filtration(GMatrix::identity(2), 1), InvariantError);
}

TEST_CASE("primitive parts") {
  GMatrix n = GMatrix::unit(2, 1, 0);
  IncreasingFiltration w = monodromy_weight_filtration(n, 1);
  Subspace prim2 = primitive_graded(n, w, 1, 1);
  CHECK(prim2.dim() == 1);
  CHECK(prim2.is_full());
  IncreasingFiltration w0 = monodromy_weight_filtration(GMatrix(2, 2), 1);
  CHECK(primitive_graded(GMatrix(2, 2), w0, 1, 0).dim() == 2);
  CHECK_THROWS_AS(primitive_graded(n, w0, 1, 0), WrongFiltration);
}

TEST_CASE("cone weight filtrations") {
  Instance tb = two_block_instance();
  NilpotentCone cone = tb.cone();
  ConeWeightResult r = cone_weight_filtration(cone, 1, 42);
  CHECK(r.samples.size() == 5);
  CHECK(r.W.at(0).dim() == 2);
  CHECK(r.W.graded_dim(1) == 0);
  CHECK(r.W.at(2).is_full());

  NilpotentCone ray = cone.restrict({0});
  ray.generators.push_back(ray.generators[0] * GScalar(2));
  CHECK(cone_weight_filtration(ray, 1, 1).W == monodromy_weight_filtration(cone.generators[0], 1));

  NilpotentCone bad = cone;
  bad.generators[1] = GMatrix::unit(4, 1, 0) + GMatrix::unit(4, 2, 1);
  CHECK_THROWS_AS(bad.validate(), InvariantError);
}

TEST_CASE("independence violation is detected") {
  // N1 = E21 (e1->e2), N2 = E32 on a 3-dim space: sums with different
  // coefficients share W, so build a genuine failure from unequal Jordan types.
  PolarizedLattice lat;
  lat.dim = 3;
  lat.n = 2;
  lat.Q = mat({{"0", "0", "1"}, {"0", "-1", "0"}, {"1", "0", "0"}});
  GMatrix a = mat({{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}});
  // a preserves Q; a and -a commute but -a is not in the same cone type.
  NilpotentCone cone{lat, {a, a * GScalar(-1)}, {0, 1}, "cancelling"};
  CHECK_THROWS_AS(cone_weight_filtration(cone, 2, 3), IndependenceViolation);
}

TEST_CASE("axiom oracle accepts every corpus filtration") {
  auto corpus = fixture_corpus();
  CHECK(corpus.size() >= 12);
  for (const auto& inst : corpus) {
    INFO(inst.name);
    NilpotentCone cone = inst.cone();
    ConeWeightResult r = cone_weight_filtration(cone, inst.lattice.n, 7);
    CHECK(verify_weight_axioms(cone.interior(), r.W, inst.lattice.n).ok);
    CHECK(r.W == inst.W);
    for (std::size_t i = 0; i < cone.generators.size(); ++i) {
      IncreasingFiltration wi = monodromy_weight_filtration(cone.generators[i], inst.lattice.n);
      CHECK(verify_weight_axioms(cone.generators[i], wi, inst.lattice.n).ok);
    }
  }
}

TEST_CASE("polarization of the dim-2 pair") {
  Instance plus = dim2_instance(1), minus = dim2_instance(-1);
  PolarizationReport rp = polarization_check(plus.W, plus.F, plus.cone(), 1);
  CHECK(rp.verdict);
  CHECK(rp.n_in_g11);
  CHECK(rp.griffiths);
  PolarizationReport rm = polarization_check(minus.W, minus.F, minus.cone(), 1);
  CHECK_FALSE(rm.verdict);
  bool k1_fails = false;
  for (auto& l : rm.levels)
    if (l.k == 1 && !l.hr2) k1_fails = true;
  CHECK(k1_fails);
}

TEST_CASE("corpus instances are polarized") {
  for (const auto& inst : fixture_corpus()) {
    INFO(inst.name);
    PolarizationReport r = polarization_check(inst.W, inst.F, inst.cone(), inst.lattice.n);
    CHECK(r.verdict);
    for (auto& l : r.levels) INFO(l.witness);
  }
}

TEST_CASE("polarization closure over unions of cones") {
  Instance inst = build_instance("closure", 1, {{1, 0, 0, 1, 0}, {1, 0, 0, 2, 1}});
  // Both generators see the same W only through the sum; take I = {0,1}, J = {0,1} with a
  // second generator added from c^{-2}: N2' = N1 + N2.
  NilpotentCone full = inst.cone();
  NilpotentCone shifted{inst.lattice, {full.generators[0] + full.generators[1], full.generators[1]}, {2, 1}, "J"};
  int n = 1;
  auto wi = cone_weight_filtration(full, n, 1).W;
  auto wj = cone_weight_filtration(shifted, n, 1).W;
  NilpotentCone uni{inst.lattice, {full.generators[0], full.generators[1], full.generators[0] + full.generators[1]},
                    {0, 1, 2}, "union"};
  auto wu = cone_weight_filtration(uni, n, 1).W;
  REQUIRE(wi == wj);
  REQUIRE(wi == wu);
  CHECK(polarization_check(wi, inst.F, full, n).verdict);
  CHECK(polarization_check(wj, inst.F, shifted, n).verdict);
  CHECK(polarization_check(wu, inst.F, uni, n).verdict);
}

TEST_CASE("reduced limit formula") {
  Instance pure = build_instance("pure", 1, {{0, 1, 0, 1, 0}});
  MixedHodgeStructure mp = pure.mhs();
  DecreasingFiltration finf = reduced_limit(mp);
  // Only one weight: the formula returns F itself, which is also the limit
  // of exp(iyN)F for N = 0.
  for (int q = 0; q <= 2; ++q) CHECK(finf.at(q) == pure.F.at(q));
  CHECK(finf.at(1) == mp.bigrading().piece(1, 0));

  Instance ht = build_instance("ht", 2, {{2, 0, 0, 1, 0}});
  MixedHodgeStructure mh = ht.mhs();
  DecreasingFiltration fh = reduced_limit(mh);
  for (int q = -1; q <= 3; ++q) CHECK(fh.at(q) == ht.W.at(2 * (2 - q)));
}

TEST_CASE("centralizer filtration and weight compatibility") {
  Instance tb = two_block_instance();
  NilpotentCone cone = tb.cone();
  NilpotentCone first = cone.restrict({0});
  IncreasingFiltration w1 = cone_weight_filtration(first, 1, 1).W;
  CentralizerFiltration cf = centralizer_filtration(first, w1);
  CHECK(cf.at_c(2).contains_vector(cone.generators[0].vec()));
  CHECK(cf.at_c(cf.max_level).is_zero());
  CHECK(cf.at_c(0).contains(cf.at_c(1)));

  EquivalenceReport same = weight_equivalence(first, first, 1, 1);
  CHECK(same.equal);
  CHECK(same.criterion);
  CHECK(same.in_c2.value());

  EquivalenceReport diff = weight_equivalence(first, cone, 1, 1);
  CHECK_FALSE(diff.equal);
  CHECK_FALSE(diff.criterion);
  CHECK(diff.agrees);
}

TEST_CASE("maximal weight sets") {
  Instance tb = two_block_instance();
  NilpotentCone cone = tb.cone();
  NilpotentCone a = cone.restrict({0}), b = cone.restrict({1});
  IncreasingFiltration wa = cone_weight_filtration(a, 1, 1).W;
  MaximalSet ms = maximal_weight_set({a}, wa, 1, 1);
  CHECK(ms.label == std::vector<int>{0});
  CHECK(ms.verified);
  auto classes = weight_classes({a, b, cone}, 1, 1);
  CHECK(classes.size() == 3);
}

TEST_CASE("defs decomposition is a direct sum") {
  for (const auto& inst : fixture_corpus()) {
    INFO(inst.name);
    MixedHodgeStructure mhs = inst.mhs();
    LieBigrading lb = induced_lie_bigrading(mhs);
    DefsDecomposition dd = defs_decomposition(mhs, lb, inst.cone());
    CHECK(dd.direct_sum);
    CHECK(dd.closed);
  }
  Instance ht = build_instance("ht", 2, {{2, 0, 0, 1, 0}});
  MixedHodgeStructure mh = ht.mhs();
  CHECK(defs_decomposition(mh, induced_lie_bigrading(mh), ht.cone()).e.is_zero());
}

#include "support/limits.hpp"

TEST_CASE("reduced limit equals the nilpotent-orbit limit") {
  for (const auto& inst : fixture_corpus()) {
    INFO(inst.name);
    MixedHodgeStructure mhs = inst.mhs();
    DecreasingFiltration finf = reduced_limit(mhs);
    GMatrix N = inst.cone().interior();
    for (int q = inst.F.bottom(); q <= inst.F.top() + 1; ++q)
      CHECK(finf.at(q) == nilpotent_orbit_limit(N, inst.F.at(q)));
  }
}
