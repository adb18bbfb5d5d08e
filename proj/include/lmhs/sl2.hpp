#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lmhs/mhs.hpp"
#include "lmhs/weight.hpp"

namespace lmhs {

/// Y = (p+q-n) on I^{p,q}, so that ad_Y is p+q on g^{p,q}.
GMatrix grading_element(const LieBigrading& lb, int n);

struct Sl2Triple {
  GMatrix M, Y, N;
  bool degenerate = false;  ///< N = Y = 0
};

/// The unique M ∈ g with [M,N] = Y and [Y,M] = 2M, from one exact solve.
/// Throws NoTriple when the system is inconsistent or underdetermined.
Sl2Triple sl2_complete(const PolarizedLattice& lattice, const GMatrix& N, const GMatrix& Y);
/// Dual completion: the N with [M,N] = Y and [Y,N] = -2N.
GMatrix sl2_lower(const PolarizedLattice& lattice, const GMatrix& M, const GMatrix& Y);

/// All bracket relations of a triple hold exactly.
bool is_sl2_triple(const Sl2Triple& t);

enum class ConeKind { Nstar, N1, Nsl2, Nsl2plus };
const char* to_string(ConeKind k);

/// Components (a^{-1,0}, b^{0,-1}) of the logarithm data of a monodromy generator.
using GammaLog = std::pair<GMatrix, GMatrix>;

struct MembershipResult {
  bool member = false;
  std::vector<GScalar> kappa_N;      ///< κ(M, N_i)
  std::vector<GScalar> kappa_gamma;  ///< κ(M, [a^{-1,0}, b^{0,-1}])
  std::optional<std::vector<Rational>> cone_point;  ///< y with M = M(Σ y_i N_i)
  std::vector<std::string> failures;
};

/// Throws UngradedInput when M is not homogeneous (Nstar: M ∈ g^{1,q}, q <= 1;
/// other kinds: M ∈ g^{1,1}).
MembershipResult cone_membership(const GMatrix& M, const NilpotentCone& cone, const std::vector<GammaLog>& gamma_logs,
                                 ConeKind kind, const LieBigrading& lb, const GMatrix& Y);

/// First-order behaviour of N -> M(N) along N', from exact solves modulo ε^3.
struct FirstOrderProbe {
  GMatrix M0, M1, M2;
  GScalar kappa_dM_dN;        ///< κ(M1, N'), negative by the positivity lemma
  bool bracket_ok = false;    ///< [M(ε), N + εN'] = Y mod ε^3
  bool second_order = false;  ///< ad_N^2 M1 = 2 N'
};
FirstOrderProbe first_order_probe(const PolarizedLattice& lattice, const GMatrix& N, const GMatrix& Nprime,
                                  const GMatrix& Y);

enum class SearchStatus { Found, NotFound, ZeroCone };

struct AmpleSearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::vector<Rational> y;              ///< certified point, or best point on failure
  std::vector<Rational> kappas;         ///< κ(M(N(y)), N_i)
  std::optional<Sl2Triple> triple;
  std::size_t probes = 0;
  std::string method;                   ///< "barycenter", "push" or "grid"
};

/// Evaluates κ_i(y) for all i, or returns nullopt where no triple exists.
using KappaEvaluator = std::function<std::optional<std::vector<Rational>>(const std::vector<Rational>&)>;

/// Barycentric start, per-coordinate pushes for non-positive κ_i, then a
/// rational grid. Never evaluates more than `budget` points.
AmpleSearchResult ample_search_core(std::size_t k, const KappaEvaluator& eval, std::size_t budget,
                                    std::uint64_t seed);

AmpleSearchResult ample_cone_search(const NilpotentCone& cone, const GMatrix& Y, std::size_t budget,
                                    std::uint64_t seed);

struct ChernForm {
  GMatrix gram;  ///< -i κ(M, [u_j, conj u_k])
  DefinitenessVerdict verdict;
  bool negative_definite = false;
};
/// Throws UngradedInput unless M ∈ g^{1,1}.
ChernForm chern_form(const GMatrix& M, const std::vector<GMatrix>& basis, const LieBigrading& lb,
                     const PolarizedLattice& lattice);

/// Basis of c^{-1,0}_{I,F} = g^{-1,0} ∩ centralizer(σ_I).
std::vector<GMatrix> centralizer_slice(const LieBigrading& lb, const NilpotentCone& cone, int p, int q);

}  // namespace lmhs
