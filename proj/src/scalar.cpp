#include "lmhs/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace lmhs {

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad rational");
  bool slash = false;
  for (std::size_t k = start; k < s.size(); ++k) {
    char c = s[k];
    if (c == '/') {
      if (slash || k == start || k + 1 == s.size()) throw std::invalid_argument("bad rational");
      slash = true;
    } else if (c < '0' || c > '9') {
      throw std::invalid_argument("bad rational: " + std::string(s));
    }
  }
  std::string body(s.substr(s[0] == '+' ? 1 : 0));
  Rational q;
  if (q.set_str(body, 10) != 0) throw std::invalid_argument("bad rational: " + body);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

GScalar GScalar::inverse() const {
  Rational n = norm2();
  if (sgn(n) == 0) throw std::domain_error("division by zero scalar");
  return GScalar(Rational(re_ / n), Rational(-im_ / n));
}

GScalar& GScalar::operator+=(const GScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GScalar& GScalar::operator-=(const GScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GScalar& GScalar::operator*=(const GScalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

GScalar& GScalar::operator/=(const GScalar& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero scalar");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GScalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(im_) != 0) {
    Rational a = abs(im_);
    if (!out.empty()) out += sgn(im_) > 0 ? "+" : "-";
    else if (sgn(im_) < 0) out += "-";
    if (a == 1) out += "i";
    else out += a.get_str() + "*i";
  }
  return out;
}

GScalar GScalar::parse(std::string_view raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ' && c != '\t' && c != '\n') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.back() != 'i') return GScalar(parse_rational(s));

  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  Rational re(0);
  std::string imag = s;
  if (split != std::string::npos) {
    re = parse_rational(s.substr(0, split));
    imag = s.substr(split);
  }
  imag.pop_back();  // the 'i'
  if (!imag.empty() && imag.back() == '*') {
    imag.pop_back();
    if (imag.empty() || imag == "+" || imag == "-") throw std::invalid_argument("bad scalar: " + s);
  }
  Rational im;
  if (imag.empty() || imag == "+") im = 1;
  else if (imag == "-") im = -1;
  else im = parse_rational(imag);
  return GScalar(re, im);
}

std::ostream& operator<<(std::ostream& os, const GScalar& z) { return os << z.to_string(); }

}  // namespace lmhs
