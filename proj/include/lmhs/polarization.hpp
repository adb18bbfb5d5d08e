#pragma once

#include <string>
#include <vector>

#include "lmhs/mhs.hpp"
#include "lmhs/weight.hpp"

namespace lmhs {

/// Hodge piece H^{p,q} of Prim_{n+k} with its twisted Gram matrix
/// i^{p-q} Q(u_i, N^k conj u_j).
struct PrimitivePiece {
  int p = 0, q = 0;
  std::size_t dim = 0;
  GMatrix gram;
  DefinitenessVerdict verdict;
};

struct PolarizationLevel {
  int k = 0;
  std::size_t prim_dim = 0;
  bool splits = true;  ///< Prim is the direct sum of its Hodge pieces
  bool hr1 = true;
  bool hr2 = true;
  std::vector<PrimitivePiece> pieces;
  std::string witness;  ///< first failure, empty when the level passes
};

struct PolarizationReport {
  bool verdict = false;
  bool n_in_g11 = false;   ///< N ∈ g^{-1,-1}
  bool griffiths = false;  ///< N F^p ⊆ F^{p-1}
  std::vector<PolarizationLevel> levels;
  GMatrix tested_N;
};

/// Hodge-Riemann certificate for the interior element of the cone.
/// Throws InvalidMHS or WrongFiltration when preconditions fail.
PolarizationReport polarization_check(const IncreasingFiltration& W, const DecreasingFiltration& F,
                                      const NilpotentCone& cone, int n);

/// F_∞^q = ⊕_{b <= n-q} I^{a,b}.
DecreasingFiltration reduced_limit(const MixedHodgeStructure& mhs);

struct DefsDecomposition {
  Subspace d, e, s;
  Subspace total;  ///< f_perp ∩ c
  bool direct_sum = false;
  bool closed = false;  ///< each summand closed under bracket
};
DefsDecomposition defs_decomposition(const MixedHodgeStructure& mhs, const LieBigrading& lb,
                                     const NilpotentCone& cone);

/// True when [X, Y] ∈ S for all basis elements X, Y of S.
bool bracket_closed(const Subspace& s, std::size_t d);

}  // namespace lmhs
