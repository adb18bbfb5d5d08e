#include "lmhs/sl2.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "lmhs/centralizer.hpp"
#include "lmhs/errors.hpp"
#include "lmhs/linsolve.hpp"

namespace lmhs {

namespace {

GMatrix stack_vecs(const std::vector<GMatrix>& parts) {
  GMatrix out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = out.vstack(parts[i]);
  return out;
}

// Columns: (vec [G_k, N], vec([Y, G_k] - 2 G_k)) for each basis element G_k of g.
class TripleOperator {
 public:
  TripleOperator(const std::vector<GMatrix>& basis, const GMatrix& N, const GMatrix& Y, int weight)
      : basis_(basis), d_(N.rows()) {
    std::size_t d2 = d_ * d_;
    op_ = GMatrix(2 * d2, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      GMatrix col = stack_vecs({commutator(basis[k], N).vec(),
                                (commutator(Y, basis[k]) - GScalar(weight) * basis[k]).vec()});
      op_.set_column(k, col);
    }
  }

  /// Unique X ∈ g with L(X) = (top, 0), or nullopt.
  std::optional<GMatrix> solve(const GMatrix& top) const {
    if (basis_.empty()) return top.is_zero() ? std::optional<GMatrix>(GMatrix(d_, d_)) : std::nullopt;
    GMatrix rhs = top.vec().vstack(GMatrix(d_ * d_, 1));
    SolveResult r = solve_linear(op_, rhs);
    auto* sol = std::get_if<LinearSolution>(&r);
    if (!sol || !sol->kernel.is_zero()) return std::nullopt;
    GMatrix x(d_, d_);
    for (std::size_t k = 0; k < basis_.size(); ++k) x += sol->solution(k, 0) * basis_[k];
    return x;
  }

 private:
  const std::vector<GMatrix>& basis_;
  std::size_t d_;
  GMatrix op_;
};

Sl2Triple complete_with_basis(const std::vector<GMatrix>& gbasis, const GMatrix& N, const GMatrix& Y) {
  if (!N.is_square() || N.rows() != Y.rows() || !Y.is_square()) throw DimensionMismatch("sl2: N and Y must be square of equal size");
  Sl2Triple t;
  t.N = N;
  t.Y = Y;
  if (N.is_zero() && Y.is_zero()) {
    t.M = GMatrix(N.rows(), N.rows());
    t.degenerate = true;
    return t;
  }
  if (commutator(Y, N) != GScalar(-2) * N) throw NoTriple("[Y,N] != -2N");
  TripleOperator op(gbasis, N, Y, 2);
  auto m = op.solve(Y);
  if (!m) throw NoTriple("no unique M with [M,N] = Y and [Y,M] = 2M");
  t.M = *m;
  return t;
}

std::vector<GMatrix> lie_basis(const PolarizedLattice& lattice) {
  return as_matrices(lie_algebra(lattice), lattice.dim);
}

bool real_positive(const GScalar& z) { return z.is_real() && sgn(z.re()) > 0; }

Rational min_of(const std::vector<Rational>& v) {
  return v.empty() ? Rational(0) : *std::min_element(v.begin(), v.end());
}

}  // namespace

GMatrix grading_element(const LieBigrading& lb, int n) {
  std::size_t d = lb.dim();
  GMatrix diag(d, d);
  const auto& labels = lb.labels();
  for (std::size_t i = 0; i < d; ++i) diag(i, i) = GScalar(labels[i].first + labels[i].second - n);
  return lb.adapted() * diag * lb.adapted_inverse();
}

Sl2Triple sl2_complete(const PolarizedLattice& lattice, const GMatrix& N, const GMatrix& Y) {
  return complete_with_basis(lie_basis(lattice), N, Y);
}

GMatrix sl2_lower(const PolarizedLattice& lattice, const GMatrix& M, const GMatrix& Y) {
  if (M.is_zero() && Y.is_zero()) return GMatrix(M.rows(), M.rows());
  if (commutator(Y, M) != GScalar(2) * M) throw NoTriple("[Y,M] != 2M");
  auto basis = lie_basis(lattice);
  // [M,N] = Y  <=>  [N,M] = -Y.
  TripleOperator op(basis, M, Y, -2);
  auto n = op.solve(-Y);
  if (!n) throw NoTriple("no unique N with [M,N] = Y and [Y,N] = -2N");
  return *n;
}

bool is_sl2_triple(const Sl2Triple& t) {
  return commutator(t.M, t.N) == t.Y && commutator(t.Y, t.M) == GScalar(2) * t.M &&
         commutator(t.Y, t.N) == GScalar(-2) * t.N;
}

const char* to_string(ConeKind k) {
  switch (k) {
    case ConeKind::Nstar: return "Nstar";
    case ConeKind::N1: return "N1";
    case ConeKind::Nsl2: return "Nsl2";
    case ConeKind::Nsl2plus: return "Nsl2plus";
  }
  return "?";
}

MembershipResult cone_membership(const GMatrix& M, const NilpotentCone& cone, const std::vector<GammaLog>& gamma_logs,
                                 ConeKind kind, const LieBigrading& lb, const GMatrix& Y) {
  const PolarizedLattice& lattice = cone.lattice;
  if (M.rows() != lattice.dim || !M.is_square()) throw DimensionMismatch("cone_membership: M has the wrong size");
  if (!in_lie_algebra(lattice, M)) throw UngradedInput("M is not in g");
  bool graded = kind == ConeKind::Nstar ? lb.part(M, [](int p, int q) { return p == 1 && q <= 1; }) == M
                                        : lb.is_homogeneous(M, 1, 1);
  if (!graded)
    throw UngradedInput(kind == ConeKind::Nstar ? "M is not in g^{1,<=1}" : "M is not in g^{1,1}");

  MembershipResult r;
  for (std::size_t i = 0; i < cone.generators.size(); ++i) {
    GScalar k = kappa(lattice, M, cone.generators[i]);
    r.kappa_N.push_back(k);
    if (!k.is_integer()) r.failures.push_back("kappa(M, N_" + std::to_string(i) + ") = " + k.to_string() + " is not integral");
  }
  if (kind != ConeKind::Nstar) {
    for (std::size_t j = 0; j < gamma_logs.size(); ++j) {
      GScalar k = kappa(lattice, M, commutator(gamma_logs[j].first, gamma_logs[j].second));
      r.kappa_gamma.push_back(k);
      if (!k.is_integer()) r.failures.push_back("kappa(M, [a,b]) for gamma " + std::to_string(j) + " is not integral");
    }
  }
  if (kind == ConeKind::Nsl2 || kind == ConeKind::Nsl2plus) {
    std::optional<GMatrix> nhat;
    try {
      nhat = sl2_lower(lattice, M, Y);
    } catch (const NoTriple& e) {
      r.failures.push_back(std::string("no sl2 partner: ") + e.what());
    }
    if (nhat) {
      std::size_t k = cone.generators.size();
      std::size_t d2 = lattice.dim * lattice.dim;
      GMatrix a(d2, k);
      for (std::size_t i = 0; i < k; ++i) a.set_column(i, cone.generators[i].vec());
      SolveResult s = k ? solve_linear(a, nhat->vec()) : SolveResult(NoSolutionCertificate{});
      auto* sol = std::get_if<LinearSolution>(&s);
      if (!sol) {
        r.failures.push_back("partner N is not in the span of the cone");
      } else {
        if (!sol->kernel.is_zero()) r.failures.push_back("cone generators are linearly dependent");
        std::vector<Rational> y;
        bool positive = true;
        for (std::size_t i = 0; i < k; ++i) {
          const GScalar& c = sol->solution(i, 0);
          if (!real_positive(c)) positive = false;
          y.push_back(c.re());
        }
        if (positive) r.cone_point = y;
        else r.failures.push_back("partner N lies outside the open cone");
      }
    }
  }
  if (kind == ConeKind::Nsl2plus)
    for (std::size_t i = 0; i < r.kappa_N.size(); ++i)
      if (!real_positive(r.kappa_N[i])) r.failures.push_back("kappa(M, N_" + std::to_string(i) + ") is not positive");
  r.member = r.failures.empty();
  return r;
}

FirstOrderProbe first_order_probe(const PolarizedLattice& lattice, const GMatrix& N, const GMatrix& Nprime,
                                  const GMatrix& Y) {
  auto basis = lie_basis(lattice);
  FirstOrderProbe p;
  p.M0 = complete_with_basis(basis, N, Y).M;
  TripleOperator op(basis, N, Y, 2);
  auto m1 = op.solve(-commutator(p.M0, Nprime));
  if (!m1) throw NoTriple("first-order term is not determined");
  p.M1 = *m1;
  auto m2 = op.solve(-commutator(p.M1, Nprime));
  if (!m2) throw NoTriple("second-order term is not determined");
  p.M2 = *m2;
  p.kappa_dM_dN = kappa(lattice, p.M1, Nprime);
  p.bracket_ok = commutator(p.M0, N) == Y &&
                 (commutator(p.M1, N) + commutator(p.M0, Nprime)).is_zero() &&
                 (commutator(p.M2, N) + commutator(p.M1, Nprime)).is_zero();
  p.second_order = commutator(N, commutator(N, p.M1)) == GScalar(2) * Nprime;
  return p;
}

AmpleSearchResult ample_search_core(std::size_t k, const KappaEvaluator& eval, std::size_t budget,
                                    std::uint64_t seed) {
  AmpleSearchResult r;
  if (k == 0) {
    r.status = SearchStatus::ZeroCone;
    return r;
  }
  bool have_best = false;
  Rational best_score;
  auto probe = [&](const std::vector<Rational>& y, const char* method) -> std::optional<std::vector<Rational>> {
    ++r.probes;
    auto kap = eval(y);
    if (!kap) return std::nullopt;
    Rational score = min_of(*kap);
    if (!have_best || score > best_score) {
      have_best = true;
      best_score = score;
      r.y = y;
      r.kappas = *kap;
    }
    if (sgn(score) > 0) {
      r.status = SearchStatus::Found;
      r.y = y;
      r.kappas = *kap;
      r.method = method;
    }
    return kap;
  };

  std::vector<Rational> y(k, Rational(1));
  if (budget == 0) return r;
  auto kap = probe(y, "barycenter");
  if (r.status == SearchStatus::Found) return r;

  // Moving along -N_j raises κ_j, so shrink the offending coordinates.
  const std::size_t push_rounds = 12;
  for (std::size_t round = 0; kap && round < push_rounds && r.probes < budget; ++round) {
    for (std::size_t j = 0; j < k; ++j)
      if (sgn((*kap)[j]) <= 0) y[j] /= 2;
    kap = probe(y, "push");
    if (r.status == SearchStatus::Found) return r;
  }

  const std::vector<Rational> levels = {Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1),
                                        Rational(2),    Rational(4),    Rational(8)};
  std::mt19937_64 rng(seed);
  double cells = std::pow(double(levels.size()), double(k));
  std::vector<std::size_t> order;
  bool exhaustive = cells <= 1e5;
  if (exhaustive) {
    order.resize(std::size_t(cells));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::uniform_int_distribution<std::size_t> pick(0, levels.size() - 1);
  for (std::size_t idx = 0; r.probes < budget && (!exhaustive || idx < order.size()); ++idx) {
    std::vector<Rational> g(k);
    std::size_t code = exhaustive ? order[idx] : 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (exhaustive) {
        g[j] = levels[code % levels.size()];
        code /= levels.size();
      } else {
        g[j] = levels[pick(rng)];
      }
    }
    probe(g, "grid");
    if (r.status == SearchStatus::Found) return r;
  }
  return r;
}

AmpleSearchResult ample_cone_search(const NilpotentCone& cone, const GMatrix& Y, std::size_t budget,
                                    std::uint64_t seed) {
  bool all_zero = std::all_of(cone.generators.begin(), cone.generators.end(),
                              [](const GMatrix& g) { return g.is_zero(); });
  if (cone.generators.empty() || all_zero) {
    AmpleSearchResult r;
    r.status = SearchStatus::ZeroCone;
    return r;
  }
  auto basis = lie_basis(cone.lattice);
  std::optional<Sl2Triple> last;
  KappaEvaluator eval = [&](const std::vector<Rational>& y) -> std::optional<std::vector<Rational>> {
    std::vector<Rational> out;
    try {
      Sl2Triple t = complete_with_basis(basis, cone.combination(y), Y);
      for (const auto& n : cone.generators) {
        GScalar k = kappa(cone.lattice, t.M, n);
        if (!k.is_real()) return std::nullopt;
        out.push_back(k.re());
      }
      last = t;
    } catch (const NoTriple&) {
      return std::nullopt;
    }
    return out;
  };
  AmpleSearchResult r = ample_search_core(cone.generators.size(), eval, budget, seed);
  if (r.status == SearchStatus::Found) r.triple = complete_with_basis(basis, cone.combination(r.y), Y);
  return r;
}

std::vector<GMatrix> centralizer_slice(const LieBigrading& lb, const NilpotentCone& cone, int p, int q) {
  Subspace s = lb.piece(p, q).intersect(centralizer(cone.lattice, cone.generators));
  return as_matrices(s, lb.dim());
}

ChernForm chern_form(const GMatrix& M, const std::vector<GMatrix>& basis, const LieBigrading& lb,
                     const PolarizedLattice& lattice) {
  if (!lb.is_homogeneous(M, 1, 1)) throw UngradedInput("M is not in g^{1,1}");
  if (!M.is_real()) throw InvariantError("chern_form: M must be real");
  std::size_t m = basis.size();
  ChernForm c;
  c.gram = GMatrix(m, m);
  GScalar minus_i(Rational(0), Rational(-1));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      c.gram(j, k) = minus_i * kappa(lattice, M, commutator(basis[j], basis[k].conj()));
  c.verdict = classify_hermitian(c.gram);
  c.negative_definite = m == 0 || c.verdict.kind == Definiteness::Negative;
  return c;
}

}  // namespace lmhs
