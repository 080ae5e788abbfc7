#include "whs/rational.hpp"

#include <cctype>
#include <cstddef>

namespace whs {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(i)");
  Rational n = norm();
  return GaussianRational(re / n, Rational(-im) / n);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  GaussianRational r = a;
  return r += b;
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  GaussianRational r = a;
  return r -= b;
}

GaussianRational operator-(const GaussianRational& a) {
  return GaussianRational(Rational(-a.re), Rational(-a.im));
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  GaussianRational r = a;
  return r *= b;
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  GaussianRational r = a;
  return r /= b;
}

bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}

int cmp_lex(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c;
  return cmp(a.im, b.im);
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const GaussianRational& a) {
  if (a.im == 0) return a.re.get_str();
  std::string im_part;
  if (a.im > 0)
    im_part = a.im.get_str() + "*i";
  else
    im_part = "-" + Rational(-a.im).get_str() + "*i";
  if (a.re == 0) return im_part;
  if (a.im > 0) return a.re.get_str() + "+" + im_part;
  return a.re.get_str() + im_part;
}

namespace {

// Minimal scanner for coefficient strings: signed rational or decimal
// literals, the unit "i", products of the two, and one +/- between the real
// and imaginary parts.
struct CoeffScanner {
  const std::string& s;
  std::size_t pos = 0;

  explicit CoeffScanner(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  Rational number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    std::string intpart = s.substr(start, pos - start);
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      std::size_t fs = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      std::string frac = s.substr(fs, pos - fs);
      Rational den(1);
      for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
      Rational v(mpz_class(intpart + frac), den.get_num());
      v.canonicalize();
      return v;
    }
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      skip_ws();
      std::size_t ds = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == ds) fail("expected a denominator");
      mpz_class den(s.substr(ds, pos - ds));
      if (den == 0) fail("zero denominator");
      Rational v(mpz_class(intpart), den);
      v.canonicalize();
      return v;
    }
    return Rational(mpz_class(intpart));
  }

  // [sign] ( "i" | number [ ["*"] "i" ] )
  GaussianRational term() {
    skip_ws();
    int sign = 1;
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-') sign = -sign;
      ++pos;
    }
    if (peek() == 'i') {
      ++pos;
      return GaussianRational(Rational(0), Rational(sign));
    }
    Rational mag = number();
    skip_ws();
    bool imag = false;
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      skip_ws();
      if (pos >= s.size() || s[pos] != 'i') fail("expected 'i' after '*'");
      ++pos;
      imag = true;
    } else if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      imag = true;
    }
    Rational v = sign < 0 ? Rational(-mag) : mag;
    return imag ? GaussianRational(Rational(0), v) : GaussianRational(v);
  }
};

}  // namespace

GaussianRational gaussian_from_string(const std::string& text) {
  CoeffScanner sc(text);
  GaussianRational v = sc.term();
  if (!sc.eof()) {
    char c = sc.peek();
    if (c != '+' && c != '-') sc.fail("expected '+' or '-' between parts");
    GaussianRational w = sc.term();
    if ((v.im != 0) == (w.im != 0) && !w.is_zero())
      sc.fail("coefficient has two parts of the same kind");
    v += w;
  }
  if (!sc.eof()) sc.fail("trailing characters in coefficient");
  return v;
}

}  // namespace whs
