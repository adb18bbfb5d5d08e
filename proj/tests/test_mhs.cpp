#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "lmhs/errors.hpp"
#include "lmhs/mhs.hpp"
#include "support/instances.hpp"

using namespace lmhs;
using namespace lmhs::testing;

namespace {

PolarizedLattice symplectic2() {
  PolarizedLattice l;
  l.dim = 2;
  l.n = 1;
  l.Q = mat({{"0", "1"}, {"-1", "0"}});
  return l;
}

IncreasingFiltration trivial_W(std::size_t d, int n) {
  return IncreasingFiltration(d, {{n - 1, Subspace::zero(d)}, {n, Subspace::full(d)}});
}

DecreasingFiltration curve_F(const GMatrix& f1) {
  return DecreasingFiltration(2, {{0, Subspace::full(2)}, {1, Subspace::span(f1)}, {2, Subspace::zero(2)}});
}

void check_recovers(const MixedHodgeStructure& mhs) {
  const Bigrading& b = mhs.bigrading();
  for (int l = mhs.W().bottom() - 1; l <= mhs.W().top(); ++l)
    CHECK(b.sum_where([&](int p, int q) { return p + q <= l; }) == mhs.W().at(l));
  for (int p = mhs.F().bottom(); p <= mhs.F().top() + 1; ++p)
    CHECK(b.sum_where([&](int a, int) { return a >= p; }) == mhs.F().at(p));
}

void check_lie_bigrading(const PolarizedLattice& lat, const LieBigrading& lb) {
  CHECK(lb.complete());
  std::size_t d = lb.dim();
  // Work in the adapted basis, where each g^{p,q} is a coordinate block.
  std::vector<std::pair<PQ, GMatrix>> elems;
  for (auto& [pq, s] : lb.pieces())
    for (auto& x : as_matrices(s, d)) elems.emplace_back(pq, lb.to_adapted(x));
  for (auto& [pq, x] : elems)
    for (auto& [rs, y] : elems) {
      PQ sum{pq.first + rs.first, pq.second + rs.second};
      if (sum.first != 0 || sum.second != 0) CHECK(trace_form(x, y).is_zero());
      CHECK(lb.adapted_in_piece(commutator(x, y), sum.first, sum.second));
    }
  (void)lat;
}

}  // namespace

TEST_CASE("pure weight-one structure") {
  PolarizedLattice l = symplectic2();
  auto F = curve_F(vec({"1", "i"}));
  auto W = trivial_W(2, 1);
  ValidationReport r = validate_mhs(W, F, l);
  CHECK(r.valid);
  MixedHodgeStructure mhs(l, W, F);
  const Bigrading& b = mhs.bigrading();
  CHECK(b.pieces.size() == 2);
  CHECK(b.piece(1, 0) == F.at(1).intersect(F.conjugate().at(0)));
  CHECK(b.piece(1, 0) == Subspace::span(vec({"1", "i"})));
  CHECK(is_r_split(b));
  check_recovers(mhs);
  LieBigrading lb = induced_lie_bigrading(mhs);
  CHECK(lb.g().dim() == 3);
  CHECK(lb.piece(1, -1).dim() == 1);
  CHECK(lb.piece(0, 0).dim() == 1);
  CHECK(lb.piece(-1, 1).dim() == 1);
  check_lie_bigrading(l, lb);
}

TEST_CASE("invalid pure structure lists the failing (l, p)") {
  PolarizedLattice l = symplectic2();
  auto F = curve_F(vec({"1", "0"}));  // real line: F^1 meets its conjugate
  ValidationReport r = validate_mhs(trivial_W(2, 1), F, l);
  CHECK_FALSE(r.valid);
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures[0].first == 1);
  CHECK_THROWS_AS(MixedHodgeStructure(l, trivial_W(2, 1), F), InvalidMHS);
}

TEST_CASE("Hodge-Tate data has only (p,p) pieces") {
  Instance ht = build_instance("ht", 2, {{2, 0, 0, 1, 0}});
  MixedHodgeStructure mhs = ht.mhs();
  for (auto& [pq, s] : mhs.bigrading().pieces) CHECK(pq.first == pq.second);
  CHECK(is_r_split(mhs.bigrading()));
  check_recovers(mhs);
}

TEST_CASE("twisted extension is not R-split") {
  // Extension of Q(-1) by Q(0): W_0 = <e2>, W_2 = V, F^1 = <e1 + i e2>.
  PolarizedLattice l;
  l.dim = 2;
  l.n = 1;
  l.Q = mat({{"0", "1"}, {"-1", "0"}});
  IncreasingFiltration W(2, {{-1, Subspace::zero(2)}, {0, Subspace::span(e(2, 1))}, {2, Subspace::full(2)}});
  DecreasingFiltration F(2, {{0, Subspace::full(2)}, {1, Subspace::span(vec({"1", "i"}))}, {2, Subspace::zero(2)}});
  CHECK(validate_mhs(W, F, l).valid);
  Bigrading b = deligne_bigrading(W, F);
  CHECK_FALSE(is_r_split(b));
  CHECK(b.piece(1, 1) == Subspace::span(vec({"1", "i"})));
  CHECK(b.piece(0, 0) == Subspace::span(e(2, 1)));

  // The same twist inside a weight-one block is R-split: gap one admits no (-1,-1) part.
  GMatrix e3 = e(3, 2);
  IncreasingFiltration W3(3, {{-1, Subspace::zero(3)}, {0, Subspace::span(e3)}, {1, Subspace::full(3)}});
  DecreasingFiltration F3(3, {{0, Subspace::full(3)}, {1, Subspace::span(vec({"1", "i", "1"}))}, {2, Subspace::zero(3)}});
  CHECK(is_r_split(deligne_bigrading(W3, F3)));
}

TEST_CASE("dim-2 degeneration: g and kappa") {
  Instance inst = dim2_instance(1);
  MixedHodgeStructure mhs = inst.mhs();
  LieBigrading lb = induced_lie_bigrading(mhs);
  CHECK(lb.piece(-1, -1).contains_vector(inst.nilpotents[0].vec()));
  check_lie_bigrading(inst.lattice, lb);
  CHECK(trace_form(GMatrix::unit(2, 0, 1), GMatrix::unit(2, 1, 0)) == GScalar(1));
  PolarizedLattice scaled = inst.lattice;
  scaled.kappa_scale = 3;
  CHECK(kappa(scaled, GMatrix::unit(2, 0, 1), GMatrix::unit(2, 1, 0)) == GScalar(3));
}

TEST_CASE("lattice invariants") {
  PolarizedLattice l = symplectic2();
  CHECK_NOTHROW(l.validate());
  l.n = 2;
  CHECK_THROWS_AS(l.validate(), InvariantError);
  l.n = 1;
  l.hodge_numbers = std::vector<int>{1, 2};
  CHECK_THROWS_AS(l.validate(), InvariantError);
  l.hodge_numbers = std::vector<int>{1, 1};
  CHECK_NOTHROW(l.validate());
}

TEST_CASE("corpus bigradings recover W and F and grade g") {
  for (const auto& inst : fixture_corpus()) {
    INFO(inst.name);
    MixedHodgeStructure mhs = inst.mhs();
    check_recovers(mhs);
    LieBigrading lb = induced_lie_bigrading(mhs);
    check_lie_bigrading(inst.lattice, lb);
    CHECK(lb.f().sum(lb.f_perp()) == lb.g());
    for (auto& x : as_matrices(lb.f_perp(), lb.dim())) {
      CHECK(x.is_nilpotent());
      CHECK(log_unipotent(exp_nilpotent(x)) == x);
    }
  }
}
