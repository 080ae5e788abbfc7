#pragma once

#include <mpfr.h>

#include <string>

#include "whs/rational.hpp"

namespace whs {

/// Arbitrary-precision real number backed by MPFR. Precision is carried per
/// value (in bits); binary operations produce results at the larger operand
/// precision. Rounding is to nearest throughout.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat of(long v, mpfr_prec_t prec = kDefaultPrecision);
  static BigFloat of(double v, mpfr_prec_t prec = kDefaultPrecision);
  static BigFloat of(const Rational& v, mpfr_prec_t prec = kDefaultPrecision);
  static BigFloat parse(const std::string& text, mpfr_prec_t prec = kDefaultPrecision);
  /// 2^e, exact.
  static BigFloat pow2(long e, mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Shortest-ish decimal form; digits = 0 picks enough for the precision.
  std::string str(int digits = 0) const;

  BigFloat operator-() const;
  BigFloat abs() const;
  BigFloat sqrt() const;
  /// k-th root (k >= 1); negative arguments allowed for odd k.
  BigFloat root(unsigned long k) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend int cmp(const BigFloat& a, const BigFloat& b);
  friend BigFloat atan2(const BigFloat& y, const BigFloat& x);
  friend BigFloat sin(const BigFloat& a);
  friend BigFloat cos(const BigFloat& a);
  friend BigFloat max(const BigFloat& a, const BigFloat& b);

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

inline bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
inline bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }
inline bool operator!=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) != 0; }

/// Complex number over BigFloat.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t prec = BigFloat::kDefaultPrecision)
      : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  static BigComplex of(const GaussianRational& v,
                       mpfr_prec_t prec = BigFloat::kDefaultPrecision);
  static BigComplex of(double r, double i, mpfr_prec_t prec = BigFloat::kDefaultPrecision);

  mpfr_prec_t precision() const;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  BigComplex conjugate() const { return BigComplex(re, -im); }
  /// |z|, computed as a hypot.
  BigFloat abs() const;
  /// |z|^2.
  BigFloat norm() const { return re * re + im * im; }
  BigComplex inverse() const;

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);

  std::string str(int digits = 0) const;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);

/// max(|difference|) <= tol * max(1, |a|, |b|).
bool numerically_equal(const BigComplex& a, const BigComplex& b, const BigFloat& tol);

/// Default comparison tolerance for a working precision: 2^(-prec/2).
BigFloat default_tolerance(mpfr_prec_t prec);

}  // namespace whs
