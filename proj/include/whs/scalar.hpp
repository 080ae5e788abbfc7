#pragma once

#include <string>
#include <variant>

#include "whs/bigfloat.hpp"
#include "whs/rational.hpp"

namespace whs {

enum class Mode { exact, approx };

/// Coefficient scalar: an exact Gaussian rational or an arbitrary-precision
/// complex value. Mixed-mode arithmetic promotes the exact side to the
/// approximate operand's precision.
class Scalar {
 public:
  Scalar() : v_(GaussianRational{}) {}
  Scalar(GaussianRational v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(BigComplex v) : v_(std::move(v)) {}        // NOLINT(google-explicit-constructor)
  Scalar(long n) : v_(GaussianRational(n)) {}       // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : v_(GaussianRational(std::move(r))) {}  // NOLINT

  Mode mode() const { return is_exact() ? Mode::exact : Mode::approx; }
  bool is_exact() const { return std::holds_alternative<GaussianRational>(v_); }

  const GaussianRational& exact() const;
  const BigComplex& approx() const;
  BigComplex to_complex(mpfr_prec_t prec = BigFloat::kDefaultPrecision) const;
  Scalar promoted(mpfr_prec_t prec) const;

  /// Representation-level zero test (exact zero in both modes).
  bool is_zero() const;
  Scalar inverse() const;
  /// |value| as a BigFloat (exact values converted at the given precision).
  BigFloat magnitude(mpfr_prec_t prec = BigFloat::kDefaultPrecision) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  std::string str() const;

 private:
  std::variant<GaussianRational, BigComplex> v_;
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b);

/// Exact equality for exact scalars, bit-level equality for approximate ones.
bool operator==(const Scalar& a, const Scalar& b);
inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

/// |a - b| <= tol * max(1, |a|, |b|) after promoting to complex.
bool numerically_equal(const Scalar& a, const Scalar& b, const BigFloat& tol);

}  // namespace whs
