#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lmhs/matrix.hpp"

namespace lmhs {

/// Symbols t_1..t_k, w_1..w_r and ℓ_1..ℓ_k, where ℓ_i stands for log(t_i)/2πi.
/// Exponent vectors are laid out as [t..., w..., ℓ...].
struct SymbolSpace {
  std::size_t k = 0;
  std::size_t r = 0;

  std::size_t size() const { return 2 * k + r; }
  std::size_t t_index(std::size_t i) const { return i; }
  std::size_t w_index(std::size_t a) const { return k + a; }
  std::size_t ell_index(std::size_t i) const { return k + r + i; }
  bool is_ell(std::size_t idx) const { return idx >= k + r; }
  bool is_t(std::size_t idx) const { return idx < k; }
  /// "t1", "w2", "l1" (1-based).
  std::string name(std::size_t idx) const;
  /// Inverse of name(); throws std::invalid_argument.
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const SymbolSpace& a, const SymbolSpace& b) { return a.k == b.k && a.r == b.r; }
  friend bool operator!=(const SymbolSpace& a, const SymbolSpace& b) { return !(a == b); }
};

using Monomial = std::vector<int>;

/// Polynomial in the symbols of a SymbolSpace with Q(i) coefficients.
class LogPolynomial {
 public:
  LogPolynomial() = default;
  explicit LogPolynomial(SymbolSpace s) : space_(s) {}
  static LogPolynomial constant(SymbolSpace s, const GScalar& c);
  static LogPolynomial symbol(SymbolSpace s, std::size_t idx);
  static LogPolynomial monomial(SymbolSpace s, const Monomial& m, const GScalar& c);

  const SymbolSpace& space() const { return space_; }
  const std::map<Monomial, GScalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GScalar constant_term() const;
  /// Total degree in ℓ_i.
  int ell_degree(std::size_t i) const;
  /// Degree 0 in every ℓ_i.
  bool single_valued() const;
  /// Coefficient of ℓ_i^1 with the other ℓ-exponents as in the term.
  LogPolynomial coefficient_of_ell(std::size_t i) const;

  LogPolynomial& operator+=(const LogPolynomial& o);
  LogPolynomial& operator-=(const LogPolynomial& o);
  LogPolynomial& operator*=(const GScalar& c);
  friend LogPolynomial operator+(LogPolynomial a, const LogPolynomial& b) { return a += b; }
  friend LogPolynomial operator-(LogPolynomial a, const LogPolynomial& b) { return a -= b; }
  friend LogPolynomial operator*(LogPolynomial a, const GScalar& c) { return a *= c; }
  friend LogPolynomial operator*(const GScalar& c, LogPolynomial a) { return a *= c; }
  friend LogPolynomial operator*(const LogPolynomial& a, const LogPolynomial& b);
  LogPolynomial operator-() const { return *this * GScalar(-1); }
  friend bool operator==(const LogPolynomial& a, const LogPolynomial& b);
  friend bool operator!=(const LogPolynomial& a, const LogPolynomial& b) { return !(a == b); }

  /// Monodromy shift T_i: ℓ_i -> ℓ_i + 1.
  LogPolynomial shift(std::size_t i, long times = 1) const;
  /// Formal partial derivative in the symbol with the given index.
  LogPolynomial derivative(std::size_t idx) const;
  /// Replace the symbol by a polynomial.
  LogPolynomial substitute(std::size_t idx, const LogPolynomial& value) const;
  /// Set t_i = 0 for the listed i.
  LogPolynomial restrict_t_zero(const std::vector<std::size_t>& which) const;
  /// Value at t = w = ℓ = 0.
  GScalar at_origin() const { return constant_term(); }
  /// Total degree (all symbols); -1 for zero.
  int degree() const;
  LogPolynomial truncate(int max_degree) const;

  /// Canonical text, terms by total degree then exponent vector: "1/2*w1^2 + i*t1*l1".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const GScalar& c);
  void adopt(const SymbolSpace& s);
  SymbolSpace space_;
  std::map<Monomial, GScalar> terms_;
};

/// Matrix with LogPolynomial entries, stored as a polynomial with matrix coefficients.
class MatrixPoly {
 public:
  MatrixPoly() = default;
  MatrixPoly(SymbolSpace s, std::size_t rows, std::size_t cols) : space_(s), rows_(rows), cols_(cols) {}
  static MatrixPoly constant(SymbolSpace s, const GMatrix& m);
  static MatrixPoly identity(SymbolSpace s, std::size_t n) { return constant(s, GMatrix::identity(n)); }
  static MatrixPoly times(const LogPolynomial& p, const GMatrix& m);

  const SymbolSpace& space() const { return space_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<Monomial, GMatrix>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GMatrix constant_part() const;
  bool single_valued() const;

  MatrixPoly& operator+=(const MatrixPoly& o);
  MatrixPoly& operator-=(const MatrixPoly& o);
  MatrixPoly& operator*=(const GScalar& c);
  friend MatrixPoly operator+(MatrixPoly a, const MatrixPoly& b) { return a += b; }
  friend MatrixPoly operator-(MatrixPoly a, const MatrixPoly& b) { return a -= b; }
  friend MatrixPoly operator*(MatrixPoly a, const GScalar& c) { return a *= c; }
  friend MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b);
  friend MatrixPoly operator*(const GMatrix& a, const MatrixPoly& b);
  friend MatrixPoly operator*(const MatrixPoly& a, const GMatrix& b);
  MatrixPoly operator-() const { return *this * GScalar(-1); }
  friend bool operator==(const MatrixPoly& a, const MatrixPoly& b);
  friend bool operator!=(const MatrixPoly& a, const MatrixPoly& b) { return !(a == b); }

  LogPolynomial entry(std::size_t i, std::size_t j) const;
  MatrixPoly columns(std::size_t first, std::size_t count) const;
  MatrixPoly rows_range(std::size_t first, std::size_t count) const;
  /// Apply a linear map of matrices to every coefficient.
  MatrixPoly map(const std::function<GMatrix(const GMatrix&)>& f) const;

  MatrixPoly shift(std::size_t i, long times = 1) const;
  MatrixPoly derivative(std::size_t idx) const;
  MatrixPoly substitute(std::size_t idx, const LogPolynomial& value) const;
  MatrixPoly restrict_t_zero(const std::vector<std::size_t>& which) const;
  MatrixPoly truncate(int max_degree) const;

  /// Finite exponential; throws std::domain_error unless nilpotent.
  MatrixPoly exp_nilpotent() const;
  /// Finite logarithm; throws std::domain_error unless unipotent.
  MatrixPoly log_unipotent() const;

 private:
  void add_term(const Monomial& m, const GMatrix& c);
  void adopt(const SymbolSpace& s);
  SymbolSpace space_;
  std::size_t rows_ = 0, cols_ = 0;
  std::map<Monomial, GMatrix> terms_;
};

MatrixPoly commutator(const MatrixPoly& a, const MatrixPoly& b);
/// det by cofactor expansion (small sizes only).
LogPolynomial determinant(const MatrixPoly& m);
MatrixPoly adjugate(const MatrixPoly& m);

/// Quotient num/den of LogPolynomials, compared by cross-multiplication.
struct LogRational {
  LogPolynomial num;
  LogPolynomial den;

  LogRational() = default;
  LogRational(LogPolynomial n) : num(n), den(LogPolynomial::constant(n.space(), GScalar(1))) {}  // NOLINT
  LogRational(LogPolynomial n, LogPolynomial d);

  bool is_zero() const { return num.is_zero(); }
  /// num/den equals a constant c: num == c * den.
  bool equals_constant(const GScalar& c) const;
  friend LogRational operator+(const LogRational& a, const LogRational& b);
  friend LogRational operator-(const LogRational& a, const LogRational& b);
  friend LogRational operator*(const LogRational& a, const LogRational& b);
  friend bool operator==(const LogRational& a, const LogRational& b) { return a.num * b.den == b.num * a.den; }
  friend bool operator!=(const LogRational& a, const LogRational& b) { return !(a == b); }
  std::string to_string() const;
};

/// exp(2πi·exponent)·Π t_i^{m_i}.
struct TauExpression {
  LogPolynomial exponent;
  std::vector<int> monomial;

  /// Monomials agree and the exponent difference is a constant integer.
  friend bool operator==(const TauExpression& a, const TauExpression& b);
  friend bool operator!=(const TauExpression& a, const TauExpression& b) { return !(a == b); }
  /// Product: exponents add, monomials add.
  friend TauExpression operator*(const TauExpression& a, const TauExpression& b);
  const std::vector<int>& divisor() const { return monomial; }
  /// Vanishes along t_i = 0.
  bool vanishes_on(std::size_t i) const { return monomial.at(i) > 0; }
  std::string to_string() const;
};

}  // namespace lmhs
