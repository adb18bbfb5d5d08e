#include "lmhs/mhs.hpp"

#include <sstream>

#include "lmhs/errors.hpp"

namespace lmhs {

namespace {

/// Matrix of X -> X^T Q + Q X acting on row-major vec(X).
GMatrix invariance_constraints(const GMatrix& q) {
  std::size_t d = q.rows();
  GMatrix c(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        c(i * d + j, k * d + i) += q(k, j);
        c(i * d + j, k * d + j) += q(i, k);
      }
  return c;
}

}  // namespace

Subspace graded_image(const IncreasingFiltration& W, int l, const Subspace& s) {
  return W.graded(l).image_of(s);
}

ValidationReport validate_mhs(const IncreasingFiltration& W, const DecreasingFiltration& F,
                              const PolarizedLattice& lattice) {
  if (W.ambient_dim() != lattice.dim || F.ambient_dim() != lattice.dim)
    throw DimensionMismatch("validate_mhs: filtrations and lattice disagree on dim");
  ValidationReport r;
  r.weight_real = W.is_real();
  DecreasingFiltration Fbar = F.conjugate();
  for (int l : W.weights()) {
    Quotient gr = W.graded(l);
    for (int p = F.bottom(); p <= F.top() + 1; ++p) {
      Subspace a = gr.image_of(F.at(p));
      Subspace b = gr.image_of(Fbar.at(l - p + 1));
      PureCheck c{l, p, a.dim() + b.dim() == gr.dim() && a.intersect(b).is_zero()};
      if (!c.ok) r.failures.emplace_back(l, p);
      r.checks.push_back(c);
    }
  }
  r.valid = r.weight_real && r.failures.empty();
  return r;
}

Subspace Bigrading::piece(int p, int q) const {
  auto it = pieces.find({p, q});
  return it == pieces.end() ? Subspace::zero(dim) : it->second;
}

GMatrix Bigrading::adapted_basis() const {
  GMatrix out(dim, 0);
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) out = out.hstack(it->second.basis());
  return out;
}

std::vector<PQ> Bigrading::labels() const {
  std::vector<PQ> out;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
    out.insert(out.end(), it->second.dim(), it->first);
  return out;
}

MixedHodgeStructure::MixedHodgeStructure(PolarizedLattice lattice, IncreasingFiltration W,
                                         DecreasingFiltration F)
    : lattice_(std::move(lattice)), W_(std::move(W)), F_(std::move(F)) {
  ValidationReport r = validate_mhs(W_, F_, lattice_);
  if (!r.valid) {
    std::ostringstream os;
    os << "not a mixed Hodge structure:";
    if (!r.weight_real) os << " W is not defined over R;";
    for (auto& [l, p] : r.failures) os << " (l=" << l << ", p=" << p << ")";
    throw InvalidMHS(os.str());
  }
  bigrading_ = deligne_bigrading(W_, F_);
}

Bigrading deligne_bigrading(const IncreasingFiltration& W, const DecreasingFiltration& F) {
  std::size_t d = W.ambient_dim();
  Bigrading b;
  b.dim = d;
  DecreasingFiltration Fbar = F.conjugate();
  int lo = F.bottom(), hi = F.top();
  Subspace total = Subspace::zero(d);
  std::size_t dims = 0;
  for (int p = lo; p <= hi; ++p)
    for (int q = lo; q <= hi; ++q) {
      Subspace wl = W.at(p + q);
      Subspace tail = Fbar.at(q).intersect(wl);
      for (int j = 1; p + q - j - 1 >= W.bottom(); ++j)
        tail = tail.sum(Fbar.at(q - j).intersect(W.at(p + q - j - 1)));
      Subspace piece = F.at(p).intersect(wl).intersect(tail);
      if (piece.is_zero()) continue;
      dims += piece.dim();
      total = total.sum(piece);
      b.pieces.emplace(PQ{p, q}, piece);
    }
  if (dims != d || !total.is_full()) throw InvalidMHS("Deligne pieces do not split V");
  return b;
}

Bigrading deligne_bigrading(const MixedHodgeStructure& mhs) { return mhs.bigrading(); }

bool is_r_split(const Bigrading& b) {
  for (auto& [pq, s] : b.pieces)
    if (s.conjugate() != b.piece(pq.second, pq.first)) return false;
  return true;
}

Subspace lie_algebra(const PolarizedLattice& lattice) {
  return kernel(invariance_constraints(lattice.Q));
}

std::vector<GMatrix> as_matrices(const Subspace& s, std::size_t d) {
  std::vector<GMatrix> out;
  for (std::size_t j = 0; j < s.dim(); ++j) out.push_back(GMatrix::unvec(s.basis_vector(j), d, d));
  return out;
}

Subspace vec_span(const std::vector<GMatrix>& ms, std::size_t d) {
  GMatrix cols(d * d, 0);
  for (const auto& m : ms) cols = cols.hstack(m.vec());
  return Subspace::span(cols.cols() ? cols : GMatrix(d * d, 0));
}

bool in_lie_algebra(const PolarizedLattice& lattice, const GMatrix& x) {
  return (x.transpose() * lattice.Q + lattice.Q * x).is_zero();
}

LieBigrading::LieBigrading(const PolarizedLattice& lattice, const Bigrading& b) : d_(b.dim) {
  P_ = b.adapted_basis();
  Pinv_ = inverse(P_);
  labels_ = b.labels();
  g_ = lie_algebra(lattice);
  Qa_ = P_.transpose() * lattice.Q * P_;
  GMatrix c = invariance_constraints(Qa_);

  std::map<PQ, std::vector<std::size_t>> positions;
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j)
      positions[{labels_[i].first - labels_[j].first, labels_[i].second - labels_[j].second}].push_back(i * d_ + j);

  std::vector<std::size_t> all_rows(d_ * d_);
  for (std::size_t k = 0; k < all_rows.size(); ++k) all_rows[k] = k;
  std::size_t total = 0;
  for (auto& [pq, pos] : positions) {
    GMatrix k = kernel_basis(c.submatrix(all_rows, pos));
    if (k.cols() == 0) continue;
    std::vector<GMatrix> elems;
    for (std::size_t col = 0; col < k.cols(); ++col) {
      GMatrix xp(d_, d_);
      for (std::size_t t = 0; t < pos.size(); ++t) xp(pos[t] / d_, pos[t] % d_) = k(t, col);
      elems.push_back(P_ * xp * Pinv_);
    }
    Subspace s = vec_span(elems, d_);
    total += s.dim();
    pieces_.emplace(pq, s);
  }
  complete_ = total == g_.dim();
  f_ = slice([](int p, int) { return p >= 0; });
  f_perp_ = slice([](int p, int) { return p < 0; });
  m_ = slice([](int p, int q) { return p <= 0 && q <= 0; });
}

Subspace LieBigrading::piece(int p, int q) const {
  auto it = pieces_.find({p, q});
  return it == pieces_.end() ? Subspace::zero(d_ * d_) : it->second;
}

GMatrix LieBigrading::component(const GMatrix& x, int p, int q) const {
  if (x.rows() != d_ || x.cols() != d_) throw DimensionMismatch("component: wrong matrix size");
  GMatrix xp = Pinv_ * x * P_;
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j)
      if (labels_[i].first - labels_[j].first != p || labels_[i].second - labels_[j].second != q)
        xp(i, j) = 0;
  return P_ * xp * Pinv_;
}

bool LieBigrading::adapted_in_piece(const GMatrix& xa, int p, int q) const {
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j)
      if (!xa(i, j).is_zero() &&
          (labels_[i].first - labels_[j].first != p || labels_[i].second - labels_[j].second != q))
        return false;
  return (xa.transpose() * Qa_ + Qa_ * xa).is_zero();
}

std::map<PQ, GMatrix> LieBigrading::decompose(const GMatrix& x) const {
  if (x.rows() != d_ || x.cols() != d_) throw DimensionMismatch("decompose: wrong matrix size");
  GMatrix xp = Pinv_ * x * P_;
  std::map<PQ, GMatrix> blocks;
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) {
      if (xp(i, j).is_zero()) continue;
      PQ pq{labels_[i].first - labels_[j].first, labels_[i].second - labels_[j].second};
      auto it = blocks.try_emplace(pq, d_, d_).first;
      it->second(i, j) = xp(i, j);
    }
  std::map<PQ, GMatrix> out;
  for (auto& [pq, blk] : blocks) out.emplace(pq, P_ * blk * Pinv_);
  return out;
}

LieBigrading induced_lie_bigrading(const MixedHodgeStructure& mhs) {
  return LieBigrading(mhs.lattice(), mhs.bigrading());
}

GScalar trace_form(const GMatrix& x, const GMatrix& y) {
  if (!x.is_square() || x.rows() != y.cols() || x.cols() != y.rows())
    throw DimensionMismatch("trace_form: shapes differ");
  GScalar t;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) t += x(i, k) * y(k, i);
  return t;
}

GScalar kappa(const PolarizedLattice& lattice, const GMatrix& x, const GMatrix& y) {
  return GScalar(lattice.kappa_scale) * trace_form(x, y);
}

}  // namespace lmhs
