#include "lmhs/subspace.hpp"

#include "lmhs/errors.hpp"

namespace lmhs {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch(std::string(op) + ": ambient dimensions differ");
}

GMatrix top_rows(const GMatrix& m, std::size_t count) {
  GMatrix out(count, m.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

Subspace Subspace::span(const GMatrix& cols) {
  Subspace s;
  s.n_ = cols.rows();
  // Row-reducing the transpose gives the canonical basis as rows.
  RowEchelon e = row_reduce(cols.transpose());
  std::size_t r = e.pivots.size();
  s.basis_ = GMatrix(s.n_, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < s.n_; ++i) s.basis_(i, j) = e.reduced(j, i);
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::span(std::size_t n, const std::vector<GMatrix>& vectors) {
  GMatrix m(n, 0);
  for (const auto& v : vectors) {
    if (v.rows() != n || v.cols() != 1) throw DimensionMismatch("span: bad vector");
    m = m.cols() ? m.hstack(v) : v;
  }
  return span(m);
}

Subspace Subspace::zero(std::size_t n) { return span(GMatrix(n, 0)); }

Subspace Subspace::full(std::size_t n) { return span(GMatrix::identity(n)); }

Subspace Subspace::sum(const Subspace& o) const {
  require_same_ambient(*this, o, "sum");
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  return span(basis_.hstack(o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  require_same_ambient(*this, o, "intersect");
  if (is_zero() || o.is_full()) return *this;
  if (o.is_zero() || is_full()) return o;
  GMatrix k = kernel_basis(basis_.hstack(-o.basis_));
  if (k.cols() == 0) return zero(n_);
  return span(basis_ * top_rows(k, dim()));
}

bool Subspace::contains_vector(const GMatrix& v) const {
  if (v.rows() != n_ || v.cols() != 1) throw DimensionMismatch("contains_vector: bad vector");
  // Reduced echelon: v lies in the span iff v equals the combination read
  // off its pivot coordinates.
  GMatrix c = coordinates(v);
  return basis_ * c == v;
}

GMatrix Subspace::coordinates(const GMatrix& v) const {
  GMatrix c(dim(), 1);
  for (std::size_t j = 0; j < dim(); ++j) c(j, 0) = v(pivots_[j], 0);
  return c;
}

bool Subspace::contains(const Subspace& o) const {
  require_same_ambient(*this, o, "contains");
  if (o.dim() > dim()) return false;
  for (std::size_t j = 0; j < o.dim(); ++j)
    if (!contains_vector(o.basis_.column(j))) return false;
  return true;
}

Subspace Subspace::conjugate() const { return span(basis_.conj()); }

SubspaceOpResult subspace_algebra(const Subspace& a, const Subspace& b, SubspaceOp op) {
  require_same_ambient(a, b, "subspace_algebra");
  SubspaceOpResult r;
  switch (op) {
    case SubspaceOp::Sum: r.space = a.sum(b); break;
    case SubspaceOp::Intersect: r.space = a.intersect(b); break;
    case SubspaceOp::Contains: r.truth = a.contains(b); break;
    case SubspaceOp::Equals: r.truth = a == b; break;
  }
  return r;
}

Subspace image(const GMatrix& map, const Subspace& s) {
  if (map.cols() != s.ambient_dim()) throw DimensionMismatch("image: map does not fit");
  if (s.is_zero()) return Subspace::zero(map.rows());
  return Subspace::span(map * s.basis());
}

Subspace preimage(const GMatrix& map, const Subspace& target, const Subspace& domain) {
  if (map.cols() != domain.ambient_dim() || map.rows() != target.ambient_dim())
    throw DimensionMismatch("preimage: map does not fit");
  if (domain.is_zero()) return domain;
  GMatrix md = map * domain.basis();
  GMatrix k = kernel_basis(target.is_zero() ? md : md.hstack(-target.basis()));
  if (k.cols() == 0) return Subspace::zero(domain.ambient_dim());
  return Subspace::span(domain.basis() * top_rows(k, domain.dim()));
}

Subspace kernel(const GMatrix& map) {
  GMatrix k = kernel_basis(map);
  if (k.cols() == 0) return Subspace::zero(map.cols());
  return Subspace::span(k);
}

Subspace column_space(const GMatrix& map) { return Subspace::span(map); }

GMatrix annihilator_rows(const Subspace& s) {
  if (s.is_zero()) return GMatrix::identity(s.ambient_dim());
  return kernel_basis(s.basis().transpose()).transpose();
}

Quotient::Quotient(const Subspace& upper, const Subspace& lower) : upper_(upper), lower_(lower) {
  if (!upper.contains(lower)) throw DimensionMismatch("quotient: lower not contained in upper");
  std::size_t n = upper.ambient_dim();
  GMatrix chosen = lower.basis();
  std::size_t have = lower.dim();
  lift_ = GMatrix(n, 0);
  for (std::size_t j = 0; j < upper.dim() && have < upper.dim(); ++j) {
    GMatrix v = upper.basis_vector(j);
    GMatrix trial = chosen.cols() ? chosen.hstack(v) : v;
    if (rank(trial) > have) {
      chosen = trial;
      lift_ = lift_.cols() ? lift_.hstack(v) : v;
      ++have;
    }
  }
  GMatrix b = lift_.cols() ? lift_.hstack(lower.basis()) : lower.basis();
  if (b.cols() > 0) {
    GMatrix bh = b.adjoint();
    left_inverse_ = inverse(bh * b) * bh;
  }
}

GMatrix Quotient::project(const GMatrix& v) const {
  if (dim() == 0) return GMatrix(0, 1);
  return top_rows(left_inverse_ * v, dim());
}

Subspace Quotient::image_of(const Subspace& s) const {
  Subspace cut = s.intersect(upper_);
  GMatrix coords(dim(), 0);
  for (std::size_t j = 0; j < cut.dim(); ++j) {
    GMatrix c = project(cut.basis_vector(j));
    coords = coords.cols() ? coords.hstack(c) : c;
  }
  if (coords.cols() == 0) return Subspace::zero(dim());
  return Subspace::span(coords);
}

Subspace Quotient::lift_of(const Subspace& coords) const {
  if (coords.ambient_dim() != dim()) throw DimensionMismatch("lift_of: wrong coordinate space");
  if (coords.is_zero()) return Subspace::zero(upper_.ambient_dim());
  return Subspace::span(lift_ * coords.basis());
}

}  // namespace lmhs
