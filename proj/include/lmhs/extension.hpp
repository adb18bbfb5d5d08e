#pragma once

#include <vector>

#include "lmhs/mhs.hpp"
#include "lmhs/weight.hpp"

namespace lmhs {

/// L^a = ⊕_{p+q=-a, p<0} g^{p,q}, optionally cut by the centralizer of a cone.
struct ExtensionSpace {
  int level = 1;
  std::vector<GMatrix> basis;
  std::vector<PQ> tags;
  std::size_t dim() const { return basis.size(); }
};

ExtensionSpace extension_space(const LieBigrading& lb, int a);
ExtensionSpace extension_space(const LieBigrading& lb, int a, const NilpotentCone& cone);

/// Highest level a with L^a possibly nonzero.
int weight_spread(const LieBigrading& lb);

struct LatticeData {
  std::vector<GMatrix> generators;
};

struct TorusDecomposition {
  std::size_t d1 = 0, d2 = 0, d3 = 0;
  std::size_t rank = 0;
};

/// L/Λ ≅ C^{d1} × (C*)^{d2} × T^{d3}. Throws InvariantError when the
/// generators leave the space or are dependent, NonDecomposable when
/// rank(Λ ∩ U) != 2 dim_C U.
TorusDecomposition torus_decomposition(const ExtensionSpace& space, const LatticeData& lattice);

}  // namespace lmhs
