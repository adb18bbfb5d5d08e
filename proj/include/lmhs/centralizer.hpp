#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lmhs/mhs.hpp"
#include "lmhs/weight.hpp"

namespace lmhs {

/// p_W^{-a} = {X ∈ g : X W_l ⊆ W_{l-a} for all l}.
Subspace weight_stabilizer(const PolarizedLattice& lattice, const IncreasingFiltration& W, int a);
/// Common centralizer of the generators inside g.
Subspace centralizer(const PolarizedLattice& lattice, const std::vector<GMatrix>& generators);

struct CentralizerFiltration {
  std::map<int, Subspace> p;  ///< a -> p_W^{-a}
  std::map<int, Subspace> c;  ///< a -> c_I^{-a}
  int max_level = 0;          ///< both vanish from this level on
  Subspace at_c(int a) const;
  Subspace at_p(int a) const;
};
CentralizerFiltration centralizer_filtration(const NilpotentCone& cone, const IncreasingFiltration& W);

struct EquivalenceReport {
  bool equal = false;      ///< W^I = W^J
  bool criterion = false;  ///< σ_J ⊆ c_I^{-1}
  bool agrees = false;
  std::optional<bool> in_c2;  ///< σ_J ⊆ c_I^{-2}, tested when equal
  IncreasingFiltration W_inner, W_outer;
};
/// Throws DimensionMismatch unless the inner generators occur among the outer ones.
EquivalenceReport weight_equivalence(const NilpotentCone& inner, const NilpotentCone& outer, int n,
                                     std::uint64_t seed);

struct MaximalSet {
  std::vector<int> label;  ///< I_W, sorted
  bool verified = false;   ///< W^{I_W} = W
};
/// Union of the labels of all cones with W^I = W, re-verified on the union cone.
MaximalSet maximal_weight_set(const std::vector<NilpotentCone>& cones, const IncreasingFiltration& W, int n,
                              std::uint64_t seed);

/// Groups cones by weight filtration and returns I_W for each class.
std::vector<std::pair<IncreasingFiltration, MaximalSet>> weight_classes(const std::vector<NilpotentCone>& cones,
                                                                        int n, std::uint64_t seed);

}  // namespace lmhs
