#include "lmhs/centralizer.hpp"

#include <algorithm>
#include <set>

#include "lmhs/errors.hpp"

namespace lmhs {

Subspace weight_stabilizer(const PolarizedLattice& lattice, const IncreasingFiltration& W, int a) {
  std::size_t d = lattice.dim;
  Subspace g = lie_algebra(lattice);
  std::vector<std::vector<GScalar>> rows;
  for (int l = W.bottom(); l <= W.top(); ++l) {
    Subspace src = W.at(l);
    GMatrix ann = annihilator_rows(W.at(l - a));
    for (std::size_t r = 0; r < ann.rows(); ++r)
      for (std::size_t j = 0; j < src.dim(); ++j) {
        GMatrix w = src.basis_vector(j);
        std::vector<GScalar> row(d * d);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t k = 0; k < d; ++k) row[i * d + k] = ann(r, i) * w(k, 0);
        rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) return g;
  return kernel(GMatrix::from_rows(rows)).intersect(g);
}

Subspace centralizer(const PolarizedLattice& lattice, const std::vector<GMatrix>& generators) {
  Subspace g = lie_algebra(lattice);
  if (generators.empty()) return g;
  GMatrix stacked(0, 0);
  for (const auto& n : generators) stacked = stacked.vstack(ad_matrix(n));
  return kernel(stacked).intersect(g);
}

Subspace CentralizerFiltration::at_c(int a) const {
  auto it = c.find(std::max(a, 0));
  return it == c.end() ? Subspace::zero(c.begin()->second.ambient_dim()) : it->second;
}

Subspace CentralizerFiltration::at_p(int a) const {
  auto it = p.find(std::max(a, 0));
  return it == p.end() ? Subspace::zero(p.begin()->second.ambient_dim()) : it->second;
}

CentralizerFiltration centralizer_filtration(const NilpotentCone& cone, const IncreasingFiltration& W) {
  CentralizerFiltration out;
  Subspace cent = centralizer(cone.lattice, cone.generators);
  out.max_level = W.top() - W.bottom() + 1;
  for (int a = 0; a <= out.max_level; ++a) {
    Subspace p = weight_stabilizer(cone.lattice, W, a);
    out.c.emplace(a, p.intersect(cent));
    out.p.emplace(a, std::move(p));
  }
  return out;
}

EquivalenceReport weight_equivalence(const NilpotentCone& inner, const NilpotentCone& outer, int n,
                                     std::uint64_t seed) {
  for (const auto& g : inner.generators)
    if (std::find(outer.generators.begin(), outer.generators.end(), g) == outer.generators.end())
      throw InvariantError("weight_equivalence: inner generators must be among the outer generators");
  EquivalenceReport r;
  r.W_inner = cone_weight_filtration(inner, n, seed).W;
  r.W_outer = cone_weight_filtration(outer, n, seed).W;
  r.equal = r.W_inner == r.W_outer;
  CentralizerFiltration cf = centralizer_filtration(inner, r.W_inner);
  Subspace c1 = cf.at_c(1), c2 = cf.at_c(2);
  r.criterion = true;
  bool in2 = true;
  for (const auto& g : outer.generators) {
    if (!c1.contains_vector(g.vec())) r.criterion = false;
    if (!c2.contains_vector(g.vec())) in2 = false;
  }
  if (r.equal) r.in_c2 = in2;
  r.agrees = r.equal == r.criterion;
  return r;
}

namespace {

NilpotentCone union_cone(const std::vector<const NilpotentCone*>& members) {
  std::map<int, GMatrix> by_label;
  for (auto* c : members)
    for (std::size_t i = 0; i < c->generators.size(); ++i) {
      int l = i < c->label.size() ? c->label[i] : static_cast<int>(i);
      auto [it, fresh] = by_label.emplace(l, c->generators[i]);
      if (!fresh && it->second != c->generators[i])
        throw InvariantError("label " + std::to_string(l) + " names two different nilpotents");
    }
  NilpotentCone u{members.front()->lattice, {}, {}, "union"};
  for (auto& [l, g] : by_label) {
    u.label.push_back(l);
    u.generators.push_back(g);
  }
  return u;
}

}  // namespace

MaximalSet maximal_weight_set(const std::vector<NilpotentCone>& cones, const IncreasingFiltration& W, int n,
                              std::uint64_t seed) {
  std::vector<const NilpotentCone*> members;
  for (const auto& c : cones)
    if (cone_weight_filtration(c, n, seed).W == W) members.push_back(&c);
  MaximalSet out;
  if (members.empty()) return out;
  NilpotentCone u = union_cone(members);
  out.label = u.label;
  out.verified = cone_weight_filtration(u, n, seed).W == W;
  return out;
}

std::vector<std::pair<IncreasingFiltration, MaximalSet>> weight_classes(const std::vector<NilpotentCone>& cones,
                                                                        int n, std::uint64_t seed) {
  std::vector<std::pair<IncreasingFiltration, MaximalSet>> out;
  for (const auto& c : cones) {
    IncreasingFiltration w = cone_weight_filtration(c, n, seed).W;
    bool known = false;
    for (auto& [kw, ms] : out)
      if (kw == w) known = true;
    if (!known) out.emplace_back(w, maximal_weight_set(cones, w, n, seed));
  }
  return out;
}

}  // namespace lmhs
