#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lmhs/filtration.hpp"

namespace lmhs {

/// Commuting nilpotent elements N_1..N_k of g. `label` holds the global
/// indices of the generators (the index set I).
struct NilpotentCone {
  PolarizedLattice lattice;
  std::vector<GMatrix> generators;
  std::vector<int> label;
  std::string name;

  /// Throws InvariantError on non-nilpotent, non-isometric or
  /// non-commuting generators.
  void validate() const;
  /// Sum of generators (zero matrix for the empty cone).
  GMatrix interior() const;
  GMatrix combination(const std::vector<Rational>& coeffs) const;
  /// Sub-cone on the given positions of `generators`.
  NilpotentCone restrict(const std::vector<std::size_t>& positions) const;
};

/// W(N) centred at n. Throws InvariantError if N is not nilpotent.
IncreasingFiltration monodromy_weight_filtration(const GMatrix& N, int n);

struct AxiomReport {
  bool ok = true;
  std::string failure;
};
/// Independent check of N W_l ⊆ W_{l-2} and N^k: Gr_{n+k} ≅ Gr_{n-k}.
AxiomReport verify_weight_axioms(const GMatrix& N, const IncreasingFiltration& W, int n);

struct ConeWeightResult {
  IncreasingFiltration W;
  std::vector<std::vector<Rational>> samples;  ///< positive combinations tested
};
/// W(σ) from the interior sum, certified on 5 seeded positive combinations.
/// Throws IndependenceViolation on any mismatch.
ConeWeightResult cone_weight_filtration(const NilpotentCone& cone, int n, std::uint64_t seed);

/// Prim_{n+k} = ker N^{k+1} on Gr_{n+k}, in the lift coordinates of
/// W.graded(n+k). Throws WrongFiltration if W is not W(N).
Subspace primitive_graded(const GMatrix& N, const IncreasingFiltration& W, int n, int k);

/// ad_X acting on row-major vec(End V).
GMatrix ad_matrix(const GMatrix& x);

}  // namespace lmhs
