#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lmhs/filtration.hpp"

namespace lmhs {

using PQ = std::pair<int, int>;

/// Outcome of testing F^p(Gr_l) + conj F^{l-p+1}(Gr_l) = Gr_l for one (l, p).
struct PureCheck {
  int weight = 0;
  int p = 0;
  bool ok = false;
};

struct ValidationReport {
  bool valid = false;
  bool weight_real = false;
  std::vector<PureCheck> checks;
  std::vector<PQ> failures;  ///< failing (l, p)
};

ValidationReport validate_mhs(const IncreasingFiltration& W, const DecreasingFiltration& F,
                              const PolarizedLattice& lattice);

/// Image of F^p in Gr^W_l, in the lift coordinates of W.graded(l).
Subspace graded_image(const IncreasingFiltration& W, int l, const Subspace& s);

/// Deligne splitting V = ⊕ I^{p,q}.
struct Bigrading {
  std::size_t dim = 0;
  std::map<PQ, Subspace> pieces;  ///< nonzero pieces only

  Subspace piece(int p, int q) const;
  /// Columns of the pieces, ordered by (p, q) descending.
  GMatrix adapted_basis() const;
  /// Label (p, q) of each column of adapted_basis().
  std::vector<PQ> labels() const;
  /// Sum of pieces whose label satisfies `pred`.
  template <class Pred>
  Subspace sum_where(Pred pred) const {
    Subspace s = Subspace::zero(dim);
    for (auto& [pq, piece] : pieces)
      if (pred(pq.first, pq.second)) s = s.sum(piece);
    return s;
  }
};

class MixedHodgeStructure {
 public:
  /// Throws InvalidMHS (listing the failing (l, p)) when validation fails.
  MixedHodgeStructure(PolarizedLattice lattice, IncreasingFiltration W, DecreasingFiltration F);

  const PolarizedLattice& lattice() const { return lattice_; }
  const IncreasingFiltration& W() const { return W_; }
  const DecreasingFiltration& F() const { return F_; }
  const Bigrading& bigrading() const { return bigrading_; }

 private:
  PolarizedLattice lattice_;
  IncreasingFiltration W_;
  DecreasingFiltration F_;
  Bigrading bigrading_;
};

/// General Deligne formula. Throws InvalidMHS if the result does not split V.
Bigrading deligne_bigrading(const IncreasingFiltration& W, const DecreasingFiltration& F);
Bigrading deligne_bigrading(const MixedHodgeStructure& mhs);

bool is_r_split(const Bigrading& b);

/// g = {X : Q(Xu,v) + Q(u,Xv) = 0} as a subspace of row-major vec(End V).
Subspace lie_algebra(const PolarizedLattice& lattice);
std::vector<GMatrix> as_matrices(const Subspace& s, std::size_t d);
Subspace vec_span(const std::vector<GMatrix>& ms, std::size_t d);
bool in_lie_algebra(const PolarizedLattice& lattice, const GMatrix& x);

/// Bigrading g = ⊕ g^{p,q} induced by a Deligne splitting, with the slices
/// f, f_perp and m. All subspaces live in vec(End V).
class LieBigrading {
 public:
  LieBigrading() = default;
  LieBigrading(const PolarizedLattice& lattice, const Bigrading& b);

  std::size_t dim() const { return d_; }
  const Subspace& g() const { return g_; }
  const Subspace& f() const { return f_; }
  const Subspace& f_perp() const { return f_perp_; }
  const Subspace& m() const { return m_; }
  const std::map<PQ, Subspace>& pieces() const { return pieces_; }
  Subspace piece(int p, int q) const;
  std::vector<GMatrix> piece_basis(int p, int q) const { return as_matrices(piece(p, q), d_); }
  /// True when the pieces sum directly to g.
  bool complete() const { return complete_; }

  /// Component of an arbitrary endomorphism mapping I^{r,s} to I^{r+p,s+q}.
  GMatrix component(const GMatrix& x, int p, int q) const;
  /// Nonzero components of x.
  std::map<PQ, GMatrix> decompose(const GMatrix& x) const;
  /// Sum of components whose label satisfies `pred`.
  template <class Pred>
  GMatrix part(const GMatrix& x, Pred pred) const {
    GMatrix out(d_, d_);
    for (auto& [pq, c] : decompose(x))
      if (pred(pq.first, pq.second)) out += c;
    return out;
  }
  /// Sum of g^{p,q} over labels satisfying `pred`.
  template <class Pred>
  Subspace slice(Pred pred) const {
    Subspace s = Subspace::zero(d_ * d_);
    for (auto& [pq, piece] : pieces_)
      if (pred(pq.first, pq.second)) s = s.sum(piece);
    return s;
  }
  /// True when x is a sum of components with a single label.
  bool is_homogeneous(const GMatrix& x, int p, int q) const { return component(x, p, q) == x; }

  /// P^{-1} X P in the adapted basis, where pieces are coordinate blocks.
  GMatrix to_adapted(const GMatrix& x) const { return Pinv_ * x * P_; }
  /// Whether an adapted-basis matrix lies in g^{p,q}.
  bool adapted_in_piece(const GMatrix& xa, int p, int q) const;
  const GMatrix& adapted() const { return P_; }
  const GMatrix& adapted_inverse() const { return Pinv_; }
  const std::vector<PQ>& labels() const { return labels_; }

 private:
  std::size_t d_ = 0;
  GMatrix P_, Pinv_, Qa_;
  std::vector<PQ> labels_;
  Subspace g_, f_, f_perp_, m_;
  std::map<PQ, Subspace> pieces_;
  bool complete_ = false;
};

LieBigrading induced_lie_bigrading(const MixedHodgeStructure& mhs);

/// Trace form Tr(XY).
GScalar trace_form(const GMatrix& x, const GMatrix& y);
/// kappa_scale * Tr(XY).
GScalar kappa(const PolarizedLattice& lattice, const GMatrix& x, const GMatrix& y);

}  // namespace lmhs
