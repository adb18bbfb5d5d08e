#include "lmhs/monodromy.hpp"

#include "lmhs/errors.hpp"

namespace lmhs {

namespace {

bool preserves(const GMatrix& g, const DecreasingFiltration& f) { return f.transform(g) == f; }

// All components of X sit in p+q <= -1.
bool level_one(const LieBigrading& lb, const MatrixPoly& X) {
  for (auto& [m, c] : X.terms())
    if (!lb.part(c, [](int p, int q) { return p + q >= 0; }).is_zero()) return false;
  return true;
}

}  // namespace

MonodromyElement factor_monodromy(const GMatrix& gamma, const LieBigrading& lb, const PolarizedLattice& lattice,
                                  const DecreasingFiltration& F_inf) {
  const std::size_t d = lb.dim();
  if (gamma.rows() != d || gamma.cols() != d) throw DimensionMismatch("monodromy element: wrong matrix size");
  if (gamma.transpose() * lattice.Q * gamma != lattice.Q) throw NotInStabilizer("monodromy element does not preserve Q");
  if (determinant(gamma).is_zero()) throw NotInStabilizer("monodromy element is singular");
  if (!preserves(gamma, F_inf)) throw NotInStabilizer("monodromy element does not stabilize F_inf");
  if (!preserves(gamma, F_inf.conjugate())) throw NotInStabilizer("monodromy element does not stabilize conj F_inf");

  MonodromyElement me;
  me.gamma = gamma;
  me.beta0 = lb.component(gamma, 0, 0);
  if (determinant(me.beta0).is_zero()) throw NotInStabilizer("graded part of the monodromy element is singular");
  GMatrix u = gamma * inverse(me.beta0);
  GMatrix lu;
  try {
    lu = log_unipotent(u);
  } catch (const std::domain_error&) {
    throw NotInStabilizer("monodromy element is not in the stabilizer group of the bigrading");
  }
  if (!lb.part(lu, [](int p, int q) { return p > 0 || q > 0; }).is_zero())
    throw NotInStabilizer("unipotent part of the monodromy element leaves m");
  GMatrix bprime = lb.part(lu, [](int p, int q) { return p == 0 && q < 0; });
  me.alpha = u * exp_nilpotent(-bprime);
  me.log_alpha = log_unipotent(me.alpha);
  if (!lb.part(me.log_alpha, [](int p, int q) { return p >= 0 || q > 0; }).is_zero())
    throw InvariantError("log alpha is not in m ∩ f_perp");
  me.b = inverse(me.beta0) * bprime * me.beta0;
  if ((gamma - GMatrix::identity(d)).is_nilpotent()) me.c = log_unipotent(gamma);
  return me;
}

ActionResult monodromy_action(const MonodromyElement& me, const MatrixPoly& X, const LieBigrading& lb) {
  ActionResult res;
  GMatrix beta = me.beta();
  MatrixPoly conj = beta * X * inverse(beta);
  res.X = (me.alpha * conj.exp_nilpotent()).log_unipotent();

  res.laws_checked = level_one(lb, X) && me.beta0 == GMatrix::identity(lb.dim());
  if (!res.laws_checked) return res;
  const SymbolSpace& sp = X.space();
  auto comp = [&](const MatrixPoly& m, int p, int q) { return component(lb, m, p, q); };
  auto konst = [&](const GMatrix& g) { return MatrixPoly::constant(sp, g); };
  GMatrix b01 = lb.component(me.b, 0, -1);
  if (comp(res.X, -1, 0) != comp(X, -1, 0) + konst(lb.component(me.log_alpha, -1, 0)))
    res.failures.push_back("(-1,0)");
  if (comp(res.X, -1, -1) !=
      comp(X, -1, -1) + konst(lb.component(me.log_alpha, -1, -1)) + commutator(konst(b01), comp(X, -1, 0)))
    res.failures.push_back("(-1,-1)");
  for (auto& [pq, piece] : lb.pieces())
    if (pq.first + pq.second == -1 && pq.first <= -2 && comp(res.X, pq.first, pq.second) != comp(X, pq.first, pq.second))
      res.failures.push_back("(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")");
  res.laws_ok = res.failures.empty();
  return res;
}

TauExpression multiplier(const GMatrix& M, const MonodromyElement& me, const MatrixPoly& X, const LieBigrading& lb,
                         const PolarizedLattice& lattice) {
  MatrixPoly moved = monodromy_action(me, X, lb).X;
  return TauExpression{kappa(lattice, M, moved - X), std::vector<int>(X.space().k, 0)};
}

LogPolynomial multiplier_level_one(const GMatrix& M, const MonodromyElement& me, const MatrixPoly& X,
                                   const LieBigrading& lb, const PolarizedLattice& lattice) {
  const SymbolSpace& sp = X.space();
  MatrixPoly term = MatrixPoly::constant(sp, lb.component(me.log_alpha, -1, -1)) +
                    commutator(MatrixPoly::constant(sp, lb.component(me.b, 0, -1)), component(lb, X, -1, 0));
  return kappa(lattice, M, term);
}

bool multiplier_cocycle(const GMatrix& M, const MonodromyElement& g1, const MonodromyElement& g2,
                        const MonodromyElement& g12, const MatrixPoly& X, const LieBigrading& lb,
                        const PolarizedLattice& lattice) {
  MatrixPoly moved = monodromy_action(g2, X, lb).X;
  TauExpression lhs = multiplier(M, g12, X, lb, lattice);
  TauExpression rhs = multiplier(M, g1, moved, lb, lattice) * multiplier(M, g2, X, lb, lattice);
  return lhs == rhs;
}

DeckCheck deck_consistency(const SymbolicFrame& frame, const SchubertCoordinate& coord, std::size_t i,
                           const DecreasingFiltration& F_inf) {
  DeckCheck dc;
  const GMatrix& N = frame.cone.generators.at(i);
  GMatrix T = exp_nilpotent(N);
  dc.lift_ok = frame.lift.shift(i) == T * frame.lift;
  MonodromyElement me = factor_monodromy(T, frame.lb, frame.cone.lattice, F_inf);
  dc.coordinate_ok = monodromy_action(me, coord.X, frame.lb).X == coord.X.shift(i);
  return dc;
}

}  // namespace lmhs
