#include "lmhs/logpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "lmhs/errors.hpp"

namespace lmhs {

namespace {

Monomial add(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool is_unit(const Monomial& m) {
  for (int e : m)
    if (e != 0) return false;
  return true;
}

Rational binomial(int n, int k) {
  Rational r(1);
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

Rational power(long base, int e) {
  Rational r(1);
  for (int j = 0; j < e; ++j) r *= base;
  return r;
}

// Substitutes a value into one exponent slot: Σ c m x^e -> Σ c m' value^e.
template <class Coef, class Out, class MakeTerm>
Out substitute_impl(const std::map<Monomial, Coef>& terms, std::size_t idx, const LogPolynomial& value,
                    Out zero, MakeTerm make) {
  Out out = zero;
  for (const auto& [m, c] : terms) {
    Monomial rest = m;
    int e = rest[idx];
    rest[idx] = 0;
    LogPolynomial factor = LogPolynomial::constant(value.space(), GScalar(1));
    for (int j = 0; j < e; ++j) factor = factor * value;
    out += make(factor * LogPolynomial::monomial(value.space(), rest, GScalar(1)), c);
  }
  return out;
}

std::string scalar_text(const GScalar& c, bool& negative) {
  negative = false;
  if (c.is_real()) {
    if (sgn(c.re()) < 0) {
      negative = true;
      return GScalar(-c.re()).to_string();
    }
    return c.to_string();
  }
  if (sgn(c.re()) == 0) {
    if (sgn(c.im()) < 0) {
      negative = true;
      return (-c).to_string();
    }
    return c.to_string();
  }
  return "(" + c.to_string() + ")";
}

}  // namespace

std::string SymbolSpace::name(std::size_t idx) const {
  if (idx < k) return "t" + std::to_string(idx + 1);
  if (idx < k + r) return "w" + std::to_string(idx - k + 1);
  if (idx < size()) return "l" + std::to_string(idx - k - r + 1);
  throw std::out_of_range("symbol index out of range");
}

std::size_t SymbolSpace::index_of(const std::string& name) const {
  if (name.size() < 2) throw std::invalid_argument("bad symbol '" + name + "'");
  std::size_t pos = 0;
  unsigned long j = 0;
  try {
    j = std::stoul(name.substr(1), &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad symbol '" + name + "'");
  }
  if (pos != name.size() - 1 || j == 0) throw std::invalid_argument("bad symbol '" + name + "'");
  --j;
  switch (name[0]) {
    case 't': if (j < k) return t_index(j); break;
    case 'w': if (j < r) return w_index(j); break;
    case 'l': if (j < k) return ell_index(j); break;
    default: break;
  }
  throw std::invalid_argument("unknown symbol '" + name + "'");
}

// ---------------------------------------------------------------- LogPolynomial

LogPolynomial LogPolynomial::constant(SymbolSpace s, const GScalar& c) {
  return monomial(s, Monomial(s.size(), 0), c);
}

LogPolynomial LogPolynomial::symbol(SymbolSpace s, std::size_t idx) {
  if (idx >= s.size()) throw std::out_of_range("symbol index out of range");
  Monomial m(s.size(), 0);
  m[idx] = 1;
  return monomial(s, m, GScalar(1));
}

LogPolynomial LogPolynomial::monomial(SymbolSpace s, const Monomial& m, const GScalar& c) {
  if (m.size() != s.size()) throw DimensionMismatch("monomial has the wrong number of exponents");
  LogPolynomial p(s);
  p.add_term(m, c);
  return p;
}

void LogPolynomial::add_term(const Monomial& m, const GScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LogPolynomial::adopt(const SymbolSpace& s) {
  if (space_ == s) return;
  if (space_.size() == 0) {
    std::map<Monomial, GScalar> padded;
    for (auto& [m, c] : terms_) padded.emplace(Monomial(s.size(), 0), c);
    terms_ = std::move(padded);
    space_ = s;
    return;
  }
  if (s.size() == 0) return;
  throw DimensionMismatch("log polynomials over different symbol spaces");
}

bool LogPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_unit(terms_.begin()->first));
}

GScalar LogPolynomial::constant_term() const {
  auto it = terms_.find(Monomial(space_.size(), 0));
  return it == terms_.end() ? GScalar(0) : it->second;
}

int LogPolynomial::ell_degree(std::size_t i) const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m[space_.ell_index(i)]);
  return d;
}

bool LogPolynomial::single_valued() const {
  for (std::size_t i = 0; i < space_.k; ++i)
    if (ell_degree(i) > 0) return false;
  return true;
}

LogPolynomial LogPolynomial::coefficient_of_ell(std::size_t i) const {
  LogPolynomial out(space_);
  std::size_t idx = space_.ell_index(i);
  for (auto& [m, c] : terms_)
    if (m[idx] == 1) {
      Monomial r = m;
      r[idx] = 0;
      out.add_term(r, c);
    }
  return out;
}

LogPolynomial& LogPolynomial::operator+=(const LogPolynomial& o) {
  LogPolynomial other = o;
  adopt(o.space_);
  other.adopt(space_);
  for (auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LogPolynomial& LogPolynomial::operator-=(const LogPolynomial& o) { return *this += -o; }

LogPolynomial& LogPolynomial::operator*=(const GScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

LogPolynomial operator*(const LogPolynomial& a, const LogPolynomial& b) {
  LogPolynomial x = a, y = b;
  x.adopt(b.space_);
  y.adopt(x.space_);
  LogPolynomial out(x.space_);
  for (auto& [ma, ca] : x.terms_)
    for (auto& [mb, cb] : y.terms_) out.add_term(add(ma, mb), ca * cb);
  return out;
}

bool operator==(const LogPolynomial& a, const LogPolynomial& b) { return (a - b).is_zero(); }

LogPolynomial LogPolynomial::shift(std::size_t i, long times) const {
  std::size_t idx = space_.ell_index(i);
  LogPolynomial out(space_);
  for (auto& [m, c] : terms_) {
    int e = m[idx];
    for (int j = 0; j <= e; ++j) {
      Monomial r = m;
      r[idx] = j;
      out.add_term(r, c * GScalar(binomial(e, j) * power(times, e - j)));
    }
  }
  return out;
}

LogPolynomial LogPolynomial::derivative(std::size_t idx) const {
  LogPolynomial out(space_);
  for (auto& [m, c] : terms_) {
    if (m[idx] == 0) continue;
    Monomial r = m;
    r[idx] -= 1;
    out.add_term(r, c * GScalar(long(m[idx])));
  }
  return out;
}

LogPolynomial LogPolynomial::substitute(std::size_t idx, const LogPolynomial& value) const {
  LogPolynomial v = value;
  v.adopt(space_);
  return substitute_impl(terms_, idx, v, LogPolynomial(space_),
                         [](const LogPolynomial& f, const GScalar& c) { return f * c; });
}

LogPolynomial LogPolynomial::restrict_t_zero(const std::vector<std::size_t>& which) const {
  LogPolynomial out(space_);
  for (auto& [m, c] : terms_) {
    bool keep = true;
    for (std::size_t i : which)
      if (m[space_.t_index(i)] > 0) keep = false;
    if (keep) out.add_term(m, c);
  }
  return out;
}

int LogPolynomial::degree() const {
  int d = -1;
  for (auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

LogPolynomial LogPolynomial::truncate(int max_degree) const {
  LogPolynomial out(space_);
  for (auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    if (s <= max_degree) out.add_term(m, c);
  }
  return out;
}

std::string LogPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Graded order: total degree first, then the exponent vector.
  std::vector<std::pair<int, const Monomial*>> order;
  for (auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    order.push_back({s, &m});
  }
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first != b.first ? a.first < b.first : *a.second < *b.second; });
  std::string out;
  bool first = true;
  for (auto& [deg, mp] : order) {
    const Monomial& m = *mp;
    const GScalar& c = terms_.at(m);
    bool negative = false;
    std::string coef = scalar_text(c, negative);
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += space_.name(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string term;
    if (mono.empty()) term = coef;
    else if (coef == "1") term = mono;
    else term = coef + "*" + mono;
    if (first) out = (negative ? "-" : "") + term;
    else out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- MatrixPoly

MatrixPoly MatrixPoly::constant(SymbolSpace s, const GMatrix& m) {
  MatrixPoly p(s, m.rows(), m.cols());
  p.add_term(Monomial(s.size(), 0), m);
  return p;
}

MatrixPoly MatrixPoly::times(const LogPolynomial& poly, const GMatrix& m) {
  MatrixPoly p(poly.space(), m.rows(), m.cols());
  for (auto& [mono, c] : poly.terms()) p.add_term(mono, c * m);
  return p;
}

void MatrixPoly::add_term(const Monomial& m, const GMatrix& c) {
  if (c.rows() != rows_ || c.cols() != cols_) throw DimensionMismatch("matrix polynomial: coefficient size");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MatrixPoly::adopt(const SymbolSpace& s) {
  if (space_ == s) return;
  if (space_.size() == 0) {
    std::map<Monomial, GMatrix> padded;
    for (auto& [m, c] : terms_) padded.emplace(Monomial(s.size(), 0), c);
    terms_ = std::move(padded);
    space_ = s;
    return;
  }
  if (s.size() == 0) return;
  throw DimensionMismatch("matrix polynomials over different symbol spaces");
}

bool MatrixPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_unit(terms_.begin()->first));
}

GMatrix MatrixPoly::constant_part() const {
  auto it = terms_.find(Monomial(space_.size(), 0));
  return it == terms_.end() ? GMatrix(rows_, cols_) : it->second;
}

bool MatrixPoly::single_valued() const {
  for (auto& [m, c] : terms_)
    for (std::size_t i = 0; i < space_.k; ++i)
      if (m[space_.ell_index(i)] > 0) return false;
  return true;
}

MatrixPoly& MatrixPoly::operator+=(const MatrixPoly& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix polynomial sum: sizes differ");
  MatrixPoly other = o;
  adopt(o.space_);
  other.adopt(space_);
  for (auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MatrixPoly& MatrixPoly::operator-=(const MatrixPoly& o) { return *this += -o; }

MatrixPoly& MatrixPoly::operator*=(const GScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix polynomial product: sizes differ");
  MatrixPoly x = a, y = b;
  x.adopt(b.space_);
  y.adopt(x.space_);
  MatrixPoly out(x.space_, a.rows_, b.cols_);
  for (auto& [ma, ca] : x.terms_)
    for (auto& [mb, cb] : y.terms_) out.add_term(add(ma, mb), ca * cb);
  return out;
}

MatrixPoly operator*(const GMatrix& a, const MatrixPoly& b) {
  if (a.cols() != b.rows_) throw DimensionMismatch("matrix polynomial product: sizes differ");
  MatrixPoly out(b.space_, a.rows(), b.cols_);
  for (auto& [m, c] : b.terms_) out.add_term(m, a * c);
  return out;
}

MatrixPoly operator*(const MatrixPoly& a, const GMatrix& b) {
  if (a.cols_ != b.rows()) throw DimensionMismatch("matrix polynomial product: sizes differ");
  MatrixPoly out(a.space_, a.rows_, b.cols());
  for (auto& [m, c] : a.terms_) out.add_term(m, c * b);
  return out;
}

bool operator==(const MatrixPoly& a, const MatrixPoly& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && (a - b).is_zero();
}

LogPolynomial MatrixPoly::entry(std::size_t i, std::size_t j) const {
  LogPolynomial out(space_);
  for (auto& [m, c] : terms_) out += LogPolynomial::monomial(space_, m, c(i, j));
  return out;
}

MatrixPoly MatrixPoly::columns(std::size_t first, std::size_t count) const {
  MatrixPoly out(space_, rows_, count);
  for (auto& [m, c] : terms_) out.add_term(m, c.columns(first, count));
  return out;
}

MatrixPoly MatrixPoly::rows_range(std::size_t first, std::size_t count) const {
  MatrixPoly out(space_, count, cols_);
  std::vector<std::size_t> rs(count), cs(cols_);
  for (std::size_t i = 0; i < count; ++i) rs[i] = first + i;
  for (std::size_t j = 0; j < cols_; ++j) cs[j] = j;
  for (auto& [m, c] : terms_) out.add_term(m, c.submatrix(rs, cs));
  return out;
}

MatrixPoly MatrixPoly::map(const std::function<GMatrix(const GMatrix&)>& f) const {
  GMatrix probe = f(GMatrix(rows_, cols_));
  MatrixPoly out(space_, probe.rows(), probe.cols());
  for (auto& [m, c] : terms_) out.add_term(m, f(c));
  return out;
}

MatrixPoly MatrixPoly::shift(std::size_t i, long times) const {
  MatrixPoly out(space_, rows_, cols_);
  for (auto& [m, c] : terms_) out += MatrixPoly::times(LogPolynomial::monomial(space_, m, GScalar(1)).shift(i, times), c);
  return out;
}

MatrixPoly MatrixPoly::derivative(std::size_t idx) const {
  MatrixPoly out(space_, rows_, cols_);
  for (auto& [m, c] : terms_) {
    if (m[idx] == 0) continue;
    Monomial r = m;
    r[idx] -= 1;
    out.add_term(r, GScalar(long(m[idx])) * c);
  }
  return out;
}

MatrixPoly MatrixPoly::substitute(std::size_t idx, const LogPolynomial& value) const {
  return substitute_impl(terms_, idx, value, MatrixPoly(space_, rows_, cols_),
                         [](const LogPolynomial& f, const GMatrix& c) { return times(f, c); });
}

MatrixPoly MatrixPoly::restrict_t_zero(const std::vector<std::size_t>& which) const {
  MatrixPoly out(space_, rows_, cols_);
  for (auto& [m, c] : terms_) {
    bool keep = true;
    for (std::size_t i : which)
      if (m[space_.t_index(i)] > 0) keep = false;
    if (keep) out.add_term(m, c);
  }
  return out;
}

MatrixPoly MatrixPoly::truncate(int max_degree) const {
  MatrixPoly out(space_, rows_, cols_);
  for (auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    if (s <= max_degree) out.add_term(m, c);
  }
  return out;
}

MatrixPoly MatrixPoly::exp_nilpotent() const {
  if (rows_ != cols_) throw DimensionMismatch("exp: matrix polynomial is not square");
  MatrixPoly out = identity(space_, rows_);
  MatrixPoly power = identity(space_, rows_);
  Rational factorial(1);
  for (std::size_t k = 1; k <= rows_; ++k) {
    power = power * *this;
    if (power.is_zero()) return out;
    factorial *= long(k);
    out += power * GScalar(Rational(1) / factorial);
  }
  if (!(power * *this).is_zero()) throw std::domain_error("exp: matrix polynomial is not nilpotent");
  return out;
}

MatrixPoly MatrixPoly::log_unipotent() const {
  if (rows_ != cols_) throw DimensionMismatch("log: matrix polynomial is not square");
  MatrixPoly x = *this - identity(space_, rows_);
  MatrixPoly out(space_, rows_, cols_);
  MatrixPoly power = identity(space_, rows_);
  for (std::size_t k = 1; k <= rows_; ++k) {
    power = power * x;
    if (power.is_zero()) return out;
    out += power * GScalar(Rational(k % 2 ? 1 : -1, long(k)));
  }
  if (!(power * x).is_zero()) throw std::domain_error("log: matrix polynomial is not unipotent");
  return out;
}

MatrixPoly commutator(const MatrixPoly& a, const MatrixPoly& b) { return a * b - b * a; }

LogPolynomial determinant(const MatrixPoly& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant: not square");
  std::size_t n = m.rows();
  if (n == 0) return LogPolynomial::constant(m.space(), GScalar(1));
  if (n == 1) return m.entry(0, 0);
  LogPolynomial out(m.space());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> cs;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cs.push_back(c);
    MatrixPoly minor = m.rows_range(1, n - 1).map([&](const GMatrix& g) {
      std::vector<std::size_t> rs(g.rows());
      for (std::size_t i = 0; i < rs.size(); ++i) rs[i] = i;
      return g.submatrix(rs, cs);
    });
    LogPolynomial term = m.entry(0, j) * determinant(minor);
    if (j % 2) out -= term;
    else out += term;
  }
  return out;
}

MatrixPoly adjugate(const MatrixPoly& m) {
  std::size_t n = m.rows();
  MatrixPoly out(m.space(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rs, cs;
      for (std::size_t r = 0; r < n; ++r)
        if (r != j) rs.push_back(r);
      for (std::size_t c = 0; c < n; ++c)
        if (c != i) cs.push_back(c);
      MatrixPoly minor = m.map([&](const GMatrix& g) { return g.submatrix(rs, cs); });
      LogPolynomial cof = determinant(minor);
      if ((i + j) % 2) cof = -cof;
      out += MatrixPoly::times(cof, GMatrix::unit(n, i, j));
    }
  return out;
}

// ---------------------------------------------------------------- LogRational

LogRational::LogRational(LogPolynomial n, LogPolynomial d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
}

bool LogRational::equals_constant(const GScalar& c) const { return num == den * c; }

LogRational operator+(const LogRational& a, const LogRational& b) {
  return LogRational(a.num * b.den + b.num * a.den, a.den * b.den);
}

LogRational operator-(const LogRational& a, const LogRational& b) {
  return LogRational(a.num * b.den - b.num * a.den, a.den * b.den);
}

LogRational operator*(const LogRational& a, const LogRational& b) {
  return LogRational(a.num * b.num, a.den * b.den);
}

std::string LogRational::to_string() const {
  if (den.is_constant() && den.constant_term().is_one()) return num.to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

// ---------------------------------------------------------------- TauExpression

bool operator==(const TauExpression& a, const TauExpression& b) {
  if (a.monomial != b.monomial) return false;
  LogPolynomial d = a.exponent - b.exponent;
  return d.is_constant() && d.constant_term().is_integer();
}

TauExpression operator*(const TauExpression& a, const TauExpression& b) {
  if (a.monomial.size() != b.monomial.size()) throw DimensionMismatch("tau product: monomial sizes differ");
  TauExpression out{a.exponent + b.exponent, a.monomial};
  for (std::size_t i = 0; i < out.monomial.size(); ++i) out.monomial[i] += b.monomial[i];
  return out;
}

std::string TauExpression::to_string() const {
  std::string mono;
  for (std::size_t i = 0; i < monomial.size(); ++i) {
    if (monomial[i] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += "t" + std::to_string(i + 1);
    if (monomial[i] != 1) mono += "^" + std::to_string(monomial[i]);
  }
  if (exponent.is_zero()) return mono.empty() ? "1" : mono;
  std::string e = "exp(2*pi*i*(" + exponent.to_string() + "))";
  return mono.empty() ? e : mono + "*" + e;
}

}  // namespace lmhs
