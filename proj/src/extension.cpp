#include "lmhs/extension.hpp"

#include "lmhs/centralizer.hpp"
#include "lmhs/errors.hpp"
#include "lmhs/linsolve.hpp"

namespace lmhs {

namespace {

ExtensionSpace build(const LieBigrading& lb, int a, const Subspace* cut) {
  if (a < 1) throw InvariantError("extension level must be positive");
  ExtensionSpace s;
  s.level = a;
  for (const auto& [pq, piece] : lb.pieces()) {
    if (pq.first >= 0 || pq.first + pq.second != -a) continue;
    Subspace part = cut ? piece.intersect(*cut) : piece;
    for (auto& m : as_matrices(part, lb.dim())) {
      s.basis.push_back(m);
      s.tags.push_back(pq);
    }
  }
  return s;
}

}  // namespace

ExtensionSpace extension_space(const LieBigrading& lb, int a) { return build(lb, a, nullptr); }

ExtensionSpace extension_space(const LieBigrading& lb, int a, const NilpotentCone& cone) {
  Subspace z = centralizer(cone.lattice, cone.generators);
  return build(lb, a, &z);
}

int weight_spread(const LieBigrading& lb) {
  int top = 0;
  for (const auto& [pq, piece] : lb.pieces())
    if (pq.first < 0) top = std::max(top, -(pq.first + pq.second));
  return top;
}

TorusDecomposition torus_decomposition(const ExtensionSpace& space, const LatticeData& lattice) {
  std::size_t m = space.dim();
  TorusDecomposition t;
  t.d1 = m;
  if (lattice.generators.empty()) return t;
  if (m == 0) throw InvariantError("lattice generators in a zero extension space");

  std::size_t d = space.basis.front().rows();
  GMatrix b(d * d, m);
  for (std::size_t j = 0; j < m; ++j) b.set_column(j, space.basis[j].vec());

  // Real coordinates (Re c, Im c) of each generator.
  std::size_t r = lattice.generators.size();
  GMatrix real(2 * m, r);
  for (std::size_t g = 0; g < r; ++g) {
    const GMatrix& x = lattice.generators[g];
    if (x.rows() != d || x.cols() != d) throw DimensionMismatch("lattice generator has the wrong size");
    SolveResult s = solve_linear(b, x.vec());
    auto* sol = std::get_if<LinearSolution>(&s);
    if (!sol) throw InvariantError("lattice generator " + std::to_string(g) + " is not in the extension space");
    for (std::size_t j = 0; j < m; ++j) {
      real(j, g) = GScalar(sol->solution(j, 0).re());
      real(m + j, g) = GScalar(sol->solution(j, 0).im());
    }
  }
  if (rank(real) != r) throw InvariantError("lattice generators are not independent over R");
  t.rank = r;

  GMatrix jmap(2 * m, 2 * m);  // multiplication by i on R^{2m}
  for (std::size_t j = 0; j < m; ++j) {
    jmap(m + j, j) = GScalar(1);
    jmap(j, m + j) = GScalar(-1);
  }
  Subspace R = Subspace::span(real);
  Subspace U = R.intersect(image(jmap, R));
  // Λ ∩ U has rank dim_Q(U ∩ Λ_Q), and Λ_Q spans R.
  std::size_t lattice_in_u = U.intersect(R).dim();
  if (U.dim() % 2 != 0 || lattice_in_u != U.dim())
    throw NonDecomposable("rank(lattice ∩ U) differs from 2 dim_C U");
  t.d3 = U.dim() / 2;
  t.d2 = r - 2 * t.d3;
  if (t.d2 + t.d3 > m) throw InvariantError("lattice rank exceeds the real dimension");
  t.d1 = m - t.d2 - t.d3;
  return t;
}

}  // namespace lmhs
