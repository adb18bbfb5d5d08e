#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lmhs/logpoly.hpp"
#include "lmhs/mhs.hpp"
#include "lmhs/weight.hpp"

namespace lmhs {

/// Local lift exp(Σ ℓ_i N_i)·ξ applied to the adapted basis of the limit
/// filtration F. Columns of `lift` follow the adapted basis, so the first
/// dim F^p columns span F^p.
struct SymbolicFrame {
  SymbolSpace space;
  NilpotentCone cone;
  LieBigrading lb;
  DecreasingFiltration F;
  MatrixPoly xi;
  MatrixPoly log_xi;
  MatrixPoly nilpotent_log;  ///< Σ ℓ_i N_i
  MatrixPoly lift;
  int truncation_order = 8;
};

/// Throws XiNotInFperp when ξ is not unipotent, depends on some ℓ_i, or
/// log ξ has a coefficient outside f_perp.
SymbolicFrame build_lift(const NilpotentCone& cone, const LieBigrading& lb, const DecreasingFiltration& F,
                         const MatrixPoly& xi, int truncation_order = 8);
/// Same, with log ξ given directly.
SymbolicFrame build_lift_from_log(const NilpotentCone& cone, const LieBigrading& lb, const DecreasingFiltration& F,
                                  const MatrixPoly& log_xi, int truncation_order = 8);

/// Coordinate X on the Schubert cell exp(f_perp)·F, with X̃ = X − Σ ℓ_i N_i.
struct SchubertCoordinate {
  MatrixPoly X;
  MatrixPoly X_tilde;
  bool truncated = false;  ///< some pivot inverse was a truncated series
};

/// Block LU of a frame (columns adapted to F) into exp(X)·(stabilizer of F).
/// Throws NotInCell when a pivot block is singular at the base point.
SchubertCoordinate schubert_coordinate(const LieBigrading& lb, const MatrixPoly& frame, const MatrixPoly& nilpotent_log,
                                       int truncation_order);
SchubertCoordinate schubert_coordinate(const SymbolicFrame& frame);

/// Component of a matrix polynomial in g^{p,q}, coefficientwise.
MatrixPoly component(const LieBigrading& lb, const MatrixPoly& x, int p, int q);
/// κ(M, X) coefficientwise.
LogPolynomial kappa(const PolarizedLattice& lattice, const GMatrix& M, const MatrixPoly& X);

/// True when every component X^{-1,q} has ℓ-degree 0.
bool minus_one_single_valued(const LieBigrading& lb, const MatrixPoly& X_tilde);

/// Basis of g^{1,•}. In g^{1,1} the first elements are dual to a maximal
/// independent subset of the N_i (κ(M_j, N_i) = δ_ij on that subset); the
/// remaining ones span the common κ-kernel. Other g^{1,q} use their
/// canonical bases.
struct HorizontalBasis {
  std::vector<GMatrix> elements;
  std::vector<bool> logarithmic;  ///< κ(M_μ, N_i) != 0 for some i
};
HorizontalBasis horizontal_basis(const LieBigrading& lb, const NilpotentCone& cone);

struct HorizontalCoefficients {
  std::vector<LogPolynomial> eps;
  std::vector<bool> logarithmic;
  bool ell_coefficients_ok = true;  ///< ∂ε_μ/∂ℓ_i = κ(M_μ, N_i) for all μ, i
};
/// ε_μ = κ(M_μ, X). Throws BasisNotSpanning unless the basis is a basis of g^{1,•}.
HorizontalCoefficients horizontal_coefficients(const MatrixPoly& X, const std::vector<GMatrix>& basis,
                                               const LieBigrading& lb, const NilpotentCone& cone);

/// exp(2πi κ(M, X̃))·Π t_i^{κ(M, N_i)}. Throws NotIntegral when some κ(M, N_i)
/// is not an integer, InvariantError when the exponent is multi-valued.
TauExpression tau(const GMatrix& M, const SchubertCoordinate& coord, const NilpotentCone& cone);

struct IprViolation {
  std::string symbol;
  int p = 0, q = 0;
};
struct IprReport {
  bool horizontal = true;
  std::vector<IprViolation> violations;
  int level = 0;
  bool level_premise = false;  ///< (log ξ)^{p,q} constant for -a <= p+q <= -1
  bool level_ok = true;        ///< then (log ξ)^{p,q} constant for p+q = -a-1, p <= -2
  std::vector<std::size_t> restricted;
};
/// Restricts to t_i = 0 (i in `stratum`) and checks (ξ^{-1} ∂ξ)^{p,q} = 0 for p <= -2.
IprReport ipr_check(const SymbolicFrame& frame, const std::vector<std::size_t>& stratum, int level);

struct PsiEntry {
  GScalar hol;       ///< holomorphic part at the origin
  GScalar per_2pii;  ///< coefficient of 1/2πi
};
struct PsiTable {
  std::vector<std::string> directions;     ///< "t1*d/dt1", ..., "d/dw1", ...
  std::vector<std::vector<PsiEntry>> rows;  ///< one row per basis element
  bool dNi_ok = true;
  std::size_t w_block_rank = 0;
  std::size_t nilpotent_rank = 0;
  std::size_t rank = 0;
  bool torelli = false;  ///< rank = k + r
};
/// dε_μ on {t_i ∂/∂t_i, ∂/∂w_a}, evaluated at t = w = ℓ = 0.
PsiTable log_differential_map(const HorizontalCoefficients& eps, const std::vector<GMatrix>& basis,
                              const NilpotentCone& cone);

}  // namespace lmhs
