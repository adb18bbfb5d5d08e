#include "lmhs/weight.hpp"

#include <random>
#include <set>

#include "lmhs/errors.hpp"
#include "lmhs/mhs.hpp"

namespace lmhs {

void NilpotentCone::validate() const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const GMatrix& g = generators[i];
    if (g.rows() != lattice.dim || g.cols() != lattice.dim)
      throw InvariantError("nilpotent " + std::to_string(i) + " has the wrong size");
    if (!g.is_nilpotent()) throw InvariantError("nilpotent " + std::to_string(i) + " is not nilpotent");
    if (!in_lie_algebra(lattice, g))
      throw InvariantError("nilpotent " + std::to_string(i) + " does not preserve Q");
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!commutator(generators[i], generators[j]).is_zero())
        throw InvariantError("generators must commute (" + std::to_string(i) + ", " + std::to_string(j) + ")");
}

GMatrix NilpotentCone::interior() const {
  GMatrix s(lattice.dim, lattice.dim);
  for (const auto& g : generators) s += g;
  return s;
}

GMatrix NilpotentCone::combination(const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != generators.size()) throw DimensionMismatch("combination: coefficient count");
  GMatrix s(lattice.dim, lattice.dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += generators[i] * GScalar(coeffs[i]);
  return s;
}

NilpotentCone NilpotentCone::restrict(const std::vector<std::size_t>& positions) const {
  NilpotentCone c{lattice, {}, {}, name};
  for (auto p : positions) {
    c.generators.push_back(generators.at(p));
    if (p < label.size()) c.label.push_back(label[p]);
  }
  return c;
}

namespace {

/// Smallest K with N^{K+1} = 0.
int nilpotency_index(const GMatrix& N) {
  GMatrix p = N;
  int k = 0;
  while (!p.is_zero()) {
    if (k > static_cast<int>(N.rows())) throw InvariantError("N must be nilpotent");
    p = p * N;
    ++k;
  }
  return k;
}

}  // namespace

IncreasingFiltration monodromy_weight_filtration(const GMatrix& N, int n) {
  if (!N.is_square()) throw DimensionMismatch("N must be square");
  std::size_t d = N.rows();
  int K = nilpotency_index(N);
  std::vector<GMatrix> powers{GMatrix::identity(d)};
  for (int j = 1; j <= K + 1; ++j) powers.push_back(powers.back() * N);
  std::vector<Subspace> ker, im;
  for (auto& p : powers) {
    ker.push_back(kernel(p));
    im.push_back(column_space(p));
  }
  std::map<int, Subspace> steps;
  for (int k = -K - 1; k <= K; ++k) {
    Subspace w = Subspace::zero(d);
    for (int j = std::max(0, -k); j <= K; ++j) {
      int e = k + j + 1;
      if (e > K + 1) e = K + 1;
      w = w.sum(ker[e].intersect(im[j]));
    }
    steps.emplace(n + k, w);
  }
  IncreasingFiltration W(d, std::move(steps));
  AxiomReport r = verify_weight_axioms(N, W, n);
  if (!r.ok) throw InvariantError("weight filtration failed its axiom check: " + r.failure);
  return W;
}

AxiomReport verify_weight_axioms(const GMatrix& N, const IncreasingFiltration& W, int n) {
  AxiomReport r;
  std::size_t d = N.rows();
  if (W.ambient_dim() != d) return {false, "ambient dimension differs"};
  int lo = W.bottom() - 1, hi = W.top();
  for (int l = lo; l <= hi + 2; ++l) {
    if (!W.at(l - 2).contains(image(N, W.at(l)))) return {false, "N W_" + std::to_string(l) + " not in W_" + std::to_string(l - 2)};
  }
  int spread = std::max(hi - n, n - lo) + 1;
  GMatrix Nk = GMatrix::identity(d);
  for (int k = 0; k <= spread; ++k) {
    if (W.graded_dim(n + k) != W.graded_dim(n - k))
      return {false, "dim Gr_" + std::to_string(n + k) + " != dim Gr_" + std::to_string(n - k)};
    if (k > 0) {
      // Injectivity of N^k on Gr_{n+k}.
      Subspace back = preimage(Nk, W.at(n - k - 1), Subspace::full(d)).intersect(W.at(n + k));
      if (back != W.at(n + k - 1)) return {false, "N^" + std::to_string(k) + " not injective on Gr_" + std::to_string(n + k)};
    }
    Nk = Nk * N;
  }
  return r;
}

ConeWeightResult cone_weight_filtration(const NilpotentCone& cone, int n, std::uint64_t seed) {
  cone.validate();
  ConeWeightResult out;
  out.W = monodromy_weight_filtration(cone.interior(), n);
  if (cone.generators.empty()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 20), den(1, 7);
  std::set<std::vector<Rational>> seen;
  while (out.samples.size() < 5) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < cone.generators.size(); ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      c.push_back(q);
    }
    if (!seen.insert(c).second) continue;
    IncreasingFiltration w = monodromy_weight_filtration(cone.combination(c), n);
    if (w != out.W) throw IndependenceViolation("weight filtration depends on the interior point of cone '" + cone.name + "'");
    out.samples.push_back(std::move(c));
  }
  return out;
}

Subspace primitive_graded(const GMatrix& N, const IncreasingFiltration& W, int n, int k) {
  if (k < 0) throw DimensionMismatch("primitive_graded: level must be >= 0");
  AxiomReport r = verify_weight_axioms(N, W, n);
  if (!r.ok) throw WrongFiltration(r.failure);
  Quotient src = W.graded(n + k), dst = W.graded(n - k - 2);
  if (src.dim() == 0) return Subspace::zero(0);
  GMatrix Nk1 = N.pow(static_cast<unsigned>(k + 1));
  GMatrix map(dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    GMatrix y = Nk1 * src.lift().column(j);
    if (dst.dim() > 0) map.set_column(j, dst.project(y));
  }
  if (dst.dim() == 0) return Subspace::full(src.dim());
  return kernel(map);
}

GMatrix ad_matrix(const GMatrix& x) {
  std::size_t d = x.rows();
  GMatrix a(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        a(i * d + j, k * d + j) += x(i, k);
        a(i * d + j, i * d + k) -= x(k, j);
      }
  return a;
}

}  // namespace lmhs
