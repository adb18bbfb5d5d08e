#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace lmhs {

using Rational = mpq_class;

/// "p/q" or "p" in lowest terms.
std::string rational_to_string(const Rational& q);
/// Accepts "p", "-p", "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view s);
bool is_integer(const Rational& q);

/// Exact element of Q(i).
class GScalar {
 public:
  GScalar() = default;
  GScalar(long v) : re_(v) {}  // NOLINT: implicit on purpose, integers are scalars
  GScalar(const Rational& re) : re_(re) {}  // NOLINT
  GScalar(const Rational& re, const Rational& im) : re_(re), im_(im) {}

  static GScalar i() { return GScalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  /// Real rational integer.
  bool is_integer() const { return is_real() && lmhs::is_integer(re_); }

  GScalar conj() const { return GScalar(re_, -im_); }
  /// |z|^2
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  GScalar inverse() const;

  GScalar operator-() const { return GScalar(-re_, -im_); }
  GScalar& operator+=(const GScalar& o);
  GScalar& operator-=(const GScalar& o);
  GScalar& operator*=(const GScalar& o);
  GScalar& operator/=(const GScalar& o);

  friend GScalar operator+(GScalar a, const GScalar& b) { return a += b; }
  friend GScalar operator-(GScalar a, const GScalar& b) { return a -= b; }
  friend GScalar operator*(GScalar a, const GScalar& b) { return a *= b; }
  friend GScalar operator/(GScalar a, const GScalar& b) { return a /= b; }
  friend bool operator==(const GScalar& a, const GScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GScalar& a, const GScalar& b) { return !(a == b); }
  /// Total order (re, then im) so scalars can key maps. Not a field order.
  friend bool operator<(const GScalar& a, const GScalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  /// Canonical text: "3/2", "1/2*i", "1-i", "-2/3+5*i", "0".
  std::string to_string() const;
  /// Inverse of to_string; tolerant of whitespace. Throws std::invalid_argument.
  static GScalar parse(std::string_view s);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GScalar& z);

}  // namespace lmhs
