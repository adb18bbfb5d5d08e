#include "lmhs/genus2.hpp"

#include "lmhs/polarization.hpp"

namespace lmhs {

namespace {

GMatrix E(std::size_t i, std::size_t j) { return GMatrix::unit(4, i - 1, j - 1); }

GMatrix column(std::vector<GScalar> v) { return GMatrix::column_vector(v); }

}  // namespace

GMatrix genus2_gamma(const Rational& a, const Rational& b, const Rational& c) {
  return GMatrix::identity(4) + GScalar(a) * E(2, 1) + GScalar(b) * E(3, 1) + GScalar(c) * E(4, 1) +
         GScalar(b) * E(4, 2) - GScalar(a) * E(4, 3);
}

Genus2Fixture builtin_genus2() {
  Genus2Fixture g;
  const GScalar i = GScalar::i();
  g.lattice.dim = 4;
  g.lattice.n = 1;
  g.lattice.Q = E(1, 4) - E(4, 1) + E(2, 3) - E(3, 2);
  g.lattice.hodge_numbers = std::vector<int>{2, 2};
  g.lattice.validate();

  GMatrix N = E(4, 1);
  g.cone.lattice = g.lattice;
  g.cone.generators = {N};
  g.cone.label = {0};
  g.cone.name = "genus2";
  g.cone.validate();

  g.W = monodromy_weight_filtration(N, 1);
  Subspace f1 = Subspace::span(4, {column({1, 0, 0, 0}), column({0, 1, i, 0})});
  g.F = DecreasingFiltration(4, {{0, Subspace::full(4)}, {1, f1}});
  MixedHodgeStructure mhs(g.lattice, g.W, g.F);
  g.lb = LieBigrading(g.lattice, mhs.bigrading());
  g.F_inf = reduced_limit(mhs);

  g.B = E(2, 2) - i * E(3, 2) - i * E(2, 3) - E(3, 3);
  g.A = E(2, 1) - i * E(3, 1) - i * E(4, 2) - E(4, 3);
  g.M = E(1, 4);

  SymbolSpace sp{1, 2};
  MatrixPoly log_xi = MatrixPoly::times(LogPolynomial::symbol(sp, sp.w_index(0)), g.B) +
                      MatrixPoly::times(LogPolynomial::symbol(sp, sp.w_index(1)), g.A);
  g.frame = genus2_frame(g, log_xi);
  return g;
}

SymbolicFrame genus2_frame(const Genus2Fixture& g, const MatrixPoly& log_xi) {
  return build_lift_from_log(g.cone, g.lb, g.F, log_xi);
}

MatrixPoly genus2_free_log(const Genus2Fixture& g) {
  SymbolSpace sp{1, 3};
  return MatrixPoly::times(LogPolynomial::symbol(sp, sp.w_index(0)), g.B) +
         MatrixPoly::times(LogPolynomial::symbol(sp, sp.w_index(1)), g.A) +
         MatrixPoly::times(LogPolynomial::symbol(sp, sp.w_index(2)), g.cone.generators.front());
}

Genus2PeriodMatrix genus2_period_matrix(const MatrixPoly& frame) {
  MatrixPoly cols = frame.columns(0, 2);
  MatrixPoly top = cols.rows_range(0, 2);
  LogPolynomial det = determinant(top);
  MatrixPoly bottom = cols.rows_range(2, 2) * adjugate(top);
  Genus2PeriodMatrix pm;
  pm.alpha = LogRational(bottom.entry(0, 0), det);
  pm.lambda = LogRational(bottom.entry(0, 1), det);
  pm.nu_hat = LogRational(bottom.entry(1, 0), det);
  pm.alpha_lower = LogRational(bottom.entry(1, 1), det);
  return pm;
}

}  // namespace lmhs
