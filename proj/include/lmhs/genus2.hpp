#pragma once

#include "lmhs/logpoly.hpp"
#include "lmhs/period.hpp"

namespace lmhs {

/// Weight-one degeneration with Hodge numbers (2,2) and one vanishing cycle.
/// Basis e1..e4 with Q(e1,e4) = Q(e2,e3) = 1, N = E41 (e1 -> e4) and
/// F^1 = <e1, e2 + i e3>. The pieces I^{1,1}, I^{1,0}, I^{0,1}, I^{0,0} are
/// spanned by e1, e2 + i e3, e2 - i e3, e4.
struct Genus2Fixture {
  PolarizedLattice lattice;
  NilpotentCone cone;
  IncreasingFiltration W;
  DecreasingFiltration F;
  LieBigrading lb;
  DecreasingFiltration F_inf;
  GMatrix B;  ///< g^{-1,1}: e2 -> e2 - i e3, e3 -> -i e2 - e3
  GMatrix A;  ///< g^{-1,0}: e1 -> e2 - i e3, e2 -> -i e4, e3 -> -e4
  GMatrix M;  ///< E14, the sl2 partner of N
  /// log ξ = w1 B + w2 A over (t1; w1, w2): the N-coordinate of the
  /// Schubert chart is normalized to 0.
  SymbolicFrame frame;
};

Genus2Fixture builtin_genus2();

/// I + a E21 + b E31 + c E41 + b E42 - a E43; γ(0,0,1) = exp(N).
GMatrix genus2_gamma(const Rational& a, const Rational& b, const Rational& c);

/// Frame of the fixture for an arbitrary log ξ in f_perp.
SymbolicFrame genus2_frame(const Genus2Fixture& g, const MatrixPoly& log_xi);

/// log ξ = w1 B + w2 A + w3 N over (t1; w1, w2, w3).
MatrixPoly genus2_free_log(const Genus2Fixture& g);

/// F^1 columns of a frame normalized so that the top 2x2 block is the
/// identity; the bottom block is [[alpha, lambda], [nu_hat, alpha_lower]].
struct Genus2PeriodMatrix {
  LogRational alpha, lambda, nu_hat, alpha_lower;
  bool symmetric() const { return alpha == alpha_lower; }
};
/// `frame` is any 4x4 frame whose first two columns span F^1.
Genus2PeriodMatrix genus2_period_matrix(const MatrixPoly& frame);

}  // namespace lmhs
