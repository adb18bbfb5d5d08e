#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lmhs/scalar.hpp"

namespace lmhs {

/// Dense row-major matrix over Q(i). Dimensions are fixed at construction.
class GMatrix {
 public:
  GMatrix() = default;
  GMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static GMatrix identity(std::size_t n);
  static GMatrix zero(std::size_t r, std::size_t c) { return GMatrix(r, c); }
  /// Matrix unit E_{ij} (0-based): sends e_j to e_i.
  static GMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static GMatrix column_vector(const std::vector<GScalar>& v);
  static GMatrix from_rows(const std::vector<std::vector<GScalar>>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool is_square() const { return r_ == c_; }

  GScalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const GScalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  GMatrix& operator+=(const GMatrix& o);
  GMatrix& operator-=(const GMatrix& o);
  GMatrix& operator*=(const GScalar& s);
  friend GMatrix operator+(GMatrix a, const GMatrix& b) { return a += b; }
  friend GMatrix operator-(GMatrix a, const GMatrix& b) { return a -= b; }
  friend GMatrix operator*(GMatrix a, const GScalar& s) { return a *= s; }
  friend GMatrix operator*(const GScalar& s, GMatrix a) { return a *= s; }
  friend GMatrix operator*(const GMatrix& a, const GMatrix& b);
  GMatrix operator-() const;
  friend bool operator==(const GMatrix& a, const GMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const GMatrix& a, const GMatrix& b) { return !(a == b); }

  GMatrix transpose() const;
  GMatrix conj() const;
  /// Conjugate transpose.
  GMatrix adjoint() const { return transpose().conj(); }
  GMatrix column(std::size_t j) const;
  GMatrix columns(std::size_t first, std::size_t count) const;
  GMatrix row(std::size_t i) const;
  void set_column(std::size_t j, const GMatrix& v);
  GMatrix hstack(const GMatrix& o) const;
  GMatrix vstack(const GMatrix& o) const;
  GMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  bool is_zero() const;
  bool is_real() const;
  bool is_nilpotent() const;
  GScalar trace() const;
  GMatrix pow(unsigned k) const;

  /// Row-major flattening to a rows*cols column vector, and back.
  GMatrix vec() const;
  static GMatrix unvec(const GMatrix& v, std::size_t rows, std::size_t cols);

  std::string to_string() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<GScalar> a_;
};

GMatrix commutator(const GMatrix& a, const GMatrix& b);

/// Result of Gauss-Jordan elimination on rows.
struct RowEchelon {
  GMatrix reduced;                  ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};
RowEchelon row_reduce(GMatrix m);
std::size_t rank(const GMatrix& m);
/// Columns spanning {x : m x = 0}, in canonical form (free variable = 1).
GMatrix kernel_basis(const GMatrix& m);
GScalar determinant(GMatrix m);
/// Throws std::domain_error when singular.
GMatrix inverse(const GMatrix& m);

/// exp of a nilpotent matrix (finite sum). Throws std::domain_error otherwise.
GMatrix exp_nilpotent(const GMatrix& x);
/// log of a unipotent matrix (finite sum). Throws std::domain_error otherwise.
GMatrix log_unipotent(const GMatrix& u);

}  // namespace lmhs

namespace lmhs {

/// Leading principal minors det(H[0..k, 0..k]) for k = 1..n.
std::vector<GScalar> leading_minors(const GMatrix& h);

/// Signature counts of a Hermitian form.
struct Inertia {
  std::size_t positive = 0, negative = 0, zero = 0;
};
/// Exact inertia by congruence diagonalization with symmetric pivoting.
/// Throws DimensionMismatch unless h is square and Hermitian.
Inertia hermitian_inertia(const GMatrix& h);

enum class Definiteness { Positive, Negative, PositiveSemi, NegativeSemi, Indefinite, Zero };
const char* to_string(Definiteness d);

/// Decided by leading minors when they are all nonzero; the inertia
/// classifies the remaining cases.
struct DefinitenessVerdict {
  Definiteness kind = Definiteness::Zero;
  std::vector<GScalar> minors;
  bool by_minors = false;
};
DefinitenessVerdict classify_hermitian(const GMatrix& h);

}  // namespace lmhs
