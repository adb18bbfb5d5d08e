#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmhs/logpoly.hpp"
#include "lmhs/period.hpp"

namespace lmhs {

/// γ = α·β₀·exp(b) with log α ∈ m ∩ f_perp, β₀ preserving every I^{p,q}
/// and b ∈ m^{-1} ∩ f.
struct MonodromyElement {
  GMatrix gamma;
  GMatrix alpha, log_alpha;
  GMatrix beta0;
  GMatrix b;
  std::optional<GMatrix> c;  ///< log γ when γ is unipotent

  GMatrix beta() const { return beta0 * exp_nilpotent(b); }
};

/// Throws NotInStabilizer unless γ preserves Q, F_∞ and conj F_∞ and lies
/// in the group generated by m.
MonodromyElement factor_monodromy(const GMatrix& gamma, const LieBigrading& lb, const PolarizedLattice& lattice,
                                  const DecreasingFiltration& F_inf);

struct ActionResult {
  MatrixPoly X;
  /// Component laws are only asserted for X of level one (all p+q <= -1) and β₀ = 1.
  bool laws_checked = false;
  bool laws_ok = true;
  std::vector<std::string> failures;
};
/// X' = log(α·exp(β X β^{-1})).
ActionResult monodromy_action(const MonodromyElement& me, const MatrixPoly& X, const LieBigrading& lb);

/// e^M_γ(X) as exp(2πi κ(M, γ·X − X)).
TauExpression multiplier(const GMatrix& M, const MonodromyElement& me, const MatrixPoly& X, const LieBigrading& lb,
                         const PolarizedLattice& lattice);
/// κ(M, a^{-1,-1} + [b^{0,-1}, X^{-1,0}]), the level-one form of the exponent.
LogPolynomial multiplier_level_one(const GMatrix& M, const MonodromyElement& me, const MatrixPoly& X,
                                   const LieBigrading& lb, const PolarizedLattice& lattice);

/// e_{γ1γ2}(X) = e_{γ1}(γ2·X)·e_{γ2}(X).
bool multiplier_cocycle(const GMatrix& M, const MonodromyElement& g1, const MonodromyElement& g2,
                        const MonodromyElement& g12, const MatrixPoly& X, const LieBigrading& lb,
                        const PolarizedLattice& lattice);

struct DeckCheck {
  bool lift_ok = false;        ///< T_i(lift) = exp(N_i)·lift
  bool coordinate_ok = false;  ///< T_i(X) = exp(N_i)·X through the monodromy action
};
DeckCheck deck_consistency(const SymbolicFrame& frame, const SchubertCoordinate& coord, std::size_t i,
                           const DecreasingFiltration& F_inf);

}  // namespace lmhs
