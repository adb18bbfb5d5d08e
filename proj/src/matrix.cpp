#include "lmhs/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "lmhs/errors.hpp"

namespace lmhs {

namespace {

void require_same_shape(const GMatrix& a, const GMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(op) + ": shapes differ");
}

}  // namespace

GMatrix GMatrix::identity(std::size_t n) {
  GMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GMatrix GMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  GMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

GMatrix GMatrix::column_vector(const std::vector<GScalar>& v) {
  GMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

GMatrix GMatrix::from_rows(const std::vector<std::vector<GScalar>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  GMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

GMatrix& GMatrix::operator+=(const GMatrix& o) {
  require_same_shape(*this, o, "+");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

GMatrix& GMatrix::operator-=(const GMatrix& o) {
  require_same_shape(*this, o, "-");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

GMatrix& GMatrix::operator*=(const GScalar& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

GMatrix operator*(const GMatrix& a, const GMatrix& b) {
  if (a.c_ != b.r_) throw DimensionMismatch("*: inner dimensions differ");
  GMatrix out(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const GScalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j) {
        const GScalar& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

GMatrix GMatrix::operator-() const {
  GMatrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

GMatrix GMatrix::transpose() const {
  GMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

GMatrix GMatrix::conj() const {
  GMatrix m = *this;
  for (auto& x : m.a_) x = x.conj();
  return m;
}

GMatrix GMatrix::column(std::size_t j) const { return columns(j, 1); }

GMatrix GMatrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > c_) throw DimensionMismatch("columns: out of range");
  GMatrix m(r_, count);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

GMatrix GMatrix::row(std::size_t i) const {
  GMatrix m(1, c_);
  for (std::size_t j = 0; j < c_; ++j) m(0, j) = (*this)(i, j);
  return m;
}

void GMatrix::set_column(std::size_t j, const GMatrix& v) {
  if (v.r_ != r_ || v.c_ != 1) throw DimensionMismatch("set_column: bad vector");
  for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v(i, 0);
}

GMatrix GMatrix::hstack(const GMatrix& o) const {
  if (c_ == 0) return o;
  if (o.c_ == 0) return *this;
  if (o.r_ != r_) throw DimensionMismatch("hstack: row counts differ");
  GMatrix m(r_, c_ + o.c_);
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
  }
  return m;
}

GMatrix GMatrix::vstack(const GMatrix& o) const {
  if (r_ == 0) return o;
  if (o.r_ == 0) return *this;
  if (o.c_ != c_) throw DimensionMismatch("vstack: column counts differ");
  GMatrix m(r_ + o.r_, c_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k];
  for (std::size_t k = 0; k < o.a_.size(); ++k) m.a_[a_.size() + k] = o.a_[k];
  return m;
}

GMatrix GMatrix::submatrix(const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) const {
  GMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

bool GMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool GMatrix::is_real() const {
  for (const auto& x : a_)
    if (!x.is_real()) return false;
  return true;
}

bool GMatrix::is_nilpotent() const {
  if (!is_square()) return false;
  return pow(static_cast<unsigned>(r_)).is_zero();
}

GScalar GMatrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
  GScalar t;
  for (std::size_t i = 0; i < r_; ++i) t += (*this)(i, i);
  return t;
}

GMatrix GMatrix::pow(unsigned k) const {
  if (!is_square()) throw DimensionMismatch("pow of non-square matrix");
  GMatrix out = identity(r_);
  GMatrix base = *this;
  while (k) {
    if (k & 1u) out = out * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return out;
}

GMatrix GMatrix::vec() const {
  GMatrix v(r_ * c_, 1);
  for (std::size_t k = 0; k < a_.size(); ++k) v.a_[k] = a_[k];
  return v;
}

GMatrix GMatrix::unvec(const GMatrix& v, std::size_t rows, std::size_t cols) {
  if (v.r_ != rows * cols || v.c_ != 1) throw DimensionMismatch("unvec: bad length");
  GMatrix m(rows, cols);
  for (std::size_t k = 0; k < v.a_.size(); ++k) m.a_[k] = v.a_[k];
  return m;
}

std::string GMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

GMatrix commutator(const GMatrix& a, const GMatrix& b) { return a * b - b * a; }

RowEchelon row_reduce(GMatrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    GScalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      GScalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const GMatrix& m) { return row_reduce(m).pivots.size(); }

GMatrix kernel_basis(const GMatrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  GMatrix k(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free[f]);
  }
  return k;
}

GScalar determinant(GMatrix m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  std::size_t n = m.rows();
  GScalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return GScalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    GScalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      GScalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

GMatrix inverse(const GMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = m.rows();
  RowEchelon e = row_reduce(m.hstack(GMatrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  return e.reduced.columns(n, n);
}

GMatrix exp_nilpotent(const GMatrix& x) {
  if (!x.is_square()) throw DimensionMismatch("exp of non-square matrix");
  std::size_t n = x.rows();
  GMatrix out = GMatrix::identity(n);
  if (n == 0) return out;
  GMatrix term = GMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * x * GScalar(Rational(Rational(1) / static_cast<long>(k)));
    if (term.is_zero()) return out;
    out += term;
  }
  throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
}

GMatrix log_unipotent(const GMatrix& u) {
  if (!u.is_square()) throw DimensionMismatch("log of non-square matrix");
  std::size_t n = u.rows();
  GMatrix x = u - GMatrix::identity(n);
  GMatrix out(n, n);
  GMatrix term = GMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * x;
    if (term.is_zero()) return out;
    GScalar c(Rational(Rational(k % 2 ? 1 : -1) / static_cast<long>(k)));
    out += term * c;
  }
  if (n == 0) return out;
  throw std::domain_error("log_unipotent: matrix is not unipotent");
}

}  // namespace lmhs

namespace lmhs {

std::vector<GScalar> leading_minors(const GMatrix& h) {
  if (!h.is_square()) throw DimensionMismatch("leading_minors of non-square matrix");
  std::vector<GScalar> out;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < h.rows(); ++k) {
    idx.push_back(k);
    out.push_back(determinant(h.submatrix(idx, idx)));
  }
  return out;
}

Inertia hermitian_inertia(const GMatrix& h0) {
  if (!h0.is_square() || h0.adjoint() != h0) throw DimensionMismatch("hermitian_inertia: matrix is not Hermitian");
  GMatrix h = h0;
  std::size_t n = h.rows();
  std::vector<bool> done(n, false);
  Inertia out;
  // Congruence H -> E H E^* keeps the inertia; each pass retires one index.
  auto eliminate = [&](std::size_t k) {
    GScalar piv = h(k, k);
    if (sgn(piv.re()) > 0) ++out.positive;
    else ++out.negative;
    GScalar inv = piv.inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j] || j == k || h(j, k).is_zero()) continue;
      GScalar f = h(j, k) * inv;
      for (std::size_t c = 0; c < n; ++c) h(j, c) -= f * h(k, c);
      GScalar fc = f.conj();
      for (std::size_t r = 0; r < n; ++r) h(r, j) -= fc * h(r, k);
    }
    done[k] = true;
  };
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n && k == n; ++i)
      if (!done[i] && !h(i, i).is_zero()) k = i;
    if (k == n) {
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && !h(i, j).is_zero()) {
            a = i;
            b = j;
            break;
          }
      if (a == n) break;
      // Row/column a += c * row/column b makes the diagonal 2|h_ab|^2.
      GScalar c = h(a, b);
      for (std::size_t col = 0; col < n; ++col) h(a, col) += c * h(b, col);
      GScalar cc = c.conj();
      for (std::size_t r = 0; r < n; ++r) h(r, a) += cc * h(r, b);
      k = a;
    }
    eliminate(k);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!done[i]) ++out.zero;
  return out;
}

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::Positive: return "positive-definite";
    case Definiteness::Negative: return "negative-definite";
    case Definiteness::PositiveSemi: return "positive-semidefinite";
    case Definiteness::NegativeSemi: return "negative-semidefinite";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Zero: return "zero";
  }
  return "unknown";
}

DefinitenessVerdict classify_hermitian(const GMatrix& h) {
  DefinitenessVerdict v;
  v.minors = leading_minors(h);
  if (h.rows() == 0) {
    v.kind = Definiteness::Positive;  // vacuous
    v.by_minors = true;
    return v;
  }
  bool all_pos = true, alternating = true;
  for (std::size_t k = 0; k < v.minors.size(); ++k) {
    int s = sgn(v.minors[k].re());
    if (s <= 0) all_pos = false;
    if (s != (k % 2 ? 1 : -1)) alternating = false;
  }
  if (all_pos || alternating) {
    v.kind = all_pos ? Definiteness::Positive : Definiteness::Negative;
    v.by_minors = true;
    return v;
  }
  Inertia in = hermitian_inertia(h);
  if (in.positive == 0 && in.negative == 0) v.kind = Definiteness::Zero;
  else if (in.negative == 0) v.kind = in.zero ? Definiteness::PositiveSemi : Definiteness::Positive;
  else if (in.positive == 0) v.kind = in.zero ? Definiteness::NegativeSemi : Definiteness::Negative;
  else v.kind = Definiteness::Indefinite;
  return v;
}

}  // namespace lmhs
