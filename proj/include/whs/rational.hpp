#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace whs {

using Rational = mpq_class;

/// Thrown when an operation is used outside its domain (zero forms, singular
/// matrices, malformed input and the like).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with a character position into the offending text.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : DomainError(msg), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Element a + b*i of Q(i), with exact rational a, b. Field operations are
/// error-free and equality is decidable.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long n) : re(n) {}                 // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_rational() const { return im == 0; }
  GaussianRational conjugate() const { return GaussianRational(re, Rational(-im)); }
  /// a^2 + b^2 (the field norm down to Q); zero iff the element is zero.
  Rational norm() const { return re * re + im * im; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
bool operator==(const GaussianRational& a, const GaussianRational& b);
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

/// Deterministic total order, lexicographic on (re, im). Used for canonical
/// tie-breaking only; it is not compatible with the field structure.
int cmp_lex(const GaussianRational& a, const GaussianRational& b);

/// Canonical string: "p/q" for rational values, "p/q+r/s*i" / "p/q-r/s*i"
/// otherwise ("r/s*i" when the real part is zero). Denominator 1 prints as "p".
std::string to_string(const GaussianRational& a);

/// Parses the canonical formats above (also accepts "i", "-i", "3i", "2.5").
GaussianRational gaussian_from_string(const std::string& text);

std::string to_string(const Rational& r);

}  // namespace whs
